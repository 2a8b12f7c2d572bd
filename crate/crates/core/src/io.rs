//! JSON file formats. Words are 1-based on disk and 0-based in memory; Lie
//! basis indices are 0-based in both. Output uses `serde_json::Value`, whose
//! maps keep keys sorted, so emitted documents are canonical.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::calculus::{BraidedExp, CartanData, RelationSet};
use crate::error::{Error, Result};
use crate::free_algebra::FreeElement;
use crate::lie::{Cobracket, LieAlgebra, LieBialgebra, Representation, Tensor2, Q};
use crate::linalg::{Matrix, QMatrix};
use crate::scalar::parse_scalar;
use crate::tensor::{RMatrix, YbeFailure};

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// A rational written as a string (`"-3/4"`) or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum RationalLit {
    Int(i64),
    Str(String),
}

impl RationalLit {
    fn value(&self) -> Result<Q> {
        match self {
            RationalLit::Int(n) => Ok(Q::from_integer((*n).into())),
            RationalLit::Str(s) => {
                Q::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RMatrixFile {
    Entries { dim: usize, entries: Vec<Vec<String>> },
    Beta { beta: Vec<Vec<i64>> },
}

/// Parses an R-matrix file; `check` runs the Yang-Baxter check eagerly.
pub fn parse_rmatrix(text: &str, check: bool) -> Result<RMatrix> {
    let r = match parse_json::<RMatrixFile>(text, "R-matrix file")? {
        RMatrixFile::Beta { beta } => RMatrix::from_bilinear_form(&beta)?,
        RMatrixFile::Entries { dim, entries } => {
            let side = dim * dim;
            if entries.len() != side || entries.iter().any(|row| row.len() != side) {
                return Err(Error::DimensionMismatch(format!(
                    "entries must be {side}x{side} for dim {dim}"
                )));
            }
            let rows = entries
                .iter()
                .map(|row| row.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            RMatrix::from_entries(dim, Matrix::from_rows(rows))?
        }
    };
    if check {
        r.checked()
    } else {
        Ok(r)
    }
}

pub fn rmatrix_to_json(r: &RMatrix) -> Value {
    let e = r.entries();
    let rows: Vec<Vec<String>> = (0..e.rows())
        .map(|i| (0..e.cols()).map(|j| e.get(i, j).to_string()).collect())
        .collect();
    json!({ "dim": r.dim(), "entries": rows })
}

fn one_based(w: &[usize]) -> Vec<usize> {
    w.iter().map(|&a| a + 1).collect()
}

pub fn ybe_failure_to_json(f: &YbeFailure) -> Value {
    json!({
        "row": one_based(&f.row),
        "col": one_based(&f.col),
        "lhs": f.lhs.to_string(),
        "rhs": f.rhs.to_string(),
    })
}

#[derive(Deserialize)]
struct CartanFile {
    cartan: Vec<Vec<i64>>,
    #[serde(default)]
    symmetrizers: Option<Vec<i64>>,
}

pub fn parse_cartan(text: &str) -> Result<CartanData> {
    let f: CartanFile = parse_json(text, "Cartan file")?;
    CartanData::new(f.cartan, f.symmetrizers)
}

#[derive(Deserialize)]
struct TermLit {
    word: Vec<usize>,
    coeff: String,
}

#[derive(Deserialize)]
struct ElementFile {
    dim: usize,
    terms: Vec<TermLit>,
    #[serde(default)]
    dual: bool,
}

pub fn parse_element(text: &str) -> Result<FreeElement> {
    let f: ElementFile = parse_json(text, "element literal")?;
    element_from_parts(f)
}

fn element_from_parts(f: ElementFile) -> Result<FreeElement> {
    let mut terms = Vec::with_capacity(f.terms.len());
    for t in f.terms {
        if t.word.contains(&0) {
            return Err(Error::InvalidInput("letters are numbered from 1".into()));
        }
        terms.push((t.word.iter().map(|a| a - 1).collect(), parse_scalar(&t.coeff)?));
    }
    let mut acc = FreeElement::zero(f.dim, f.dual);
    for (w, c) in terms {
        acc = acc.add(&FreeElement::from_terms(f.dim, f.dual, [(w, c)])?)?;
    }
    Ok(acc)
}

pub fn element_to_json(f: &FreeElement) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|(w, c)| json!({ "word": one_based(w), "coeff": c.to_string() }))
        .collect();
    json!({ "dim": f.dim(), "dual": f.is_dual(), "terms": terms })
}

/// `ranks_by_degree` lists the ranks of all degrees up to this one.
pub fn relation_set_to_json(rel: &RelationSet, ranks_by_degree: &[usize]) -> Value {
    json!({
        "degree": rel.degree,
        "rank": rel.rank,
        "kernel_dim": rel.kernel_dim,
        "generators": rel.generators.iter().map(element_to_json).collect::<Vec<_>>(),
        "ranks_by_degree": ranks_by_degree,
    })
}

#[derive(Deserialize)]
struct RelationSetFile {
    degree: usize,
    rank: usize,
    kernel_dim: usize,
    generators: Vec<ElementFile>,
    ranks_by_degree: Vec<usize>,
}

/// Inverse of [`relation_set_to_json`].
pub fn parse_relation_set(text: &str) -> Result<(RelationSet, Vec<usize>)> {
    let f: RelationSetFile = parse_json(text, "relation set")?;
    let generators = f
        .generators
        .into_iter()
        .map(element_from_parts)
        .collect::<Result<Vec<_>>>()?;
    Ok((
        RelationSet {
            degree: f.degree,
            rank: f.rank,
            kernel_dim: f.kernel_dim,
            generators,
        },
        f.ranks_by_degree,
    ))
}

pub fn exp_to_json(e: &BraidedExp) -> Value {
    let terms: Vec<Value> = e
        .series
        .terms()
        .iter()
        .map(|((x, y), c)| json!({ "x": one_based(x), "y": one_based(y), "coeff": c.to_string() }))
        .collect();
    json!({ "dim": e.series.dim(), "truncation": e.truncation, "terms": terms })
}

#[derive(Deserialize)]
struct LieFile {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    bracket: Vec<(usize, usize, usize, RationalLit)>,
    #[serde(default)]
    cobracket: Option<Vec<(usize, usize, usize, RationalLit)>>,
    #[serde(default)]
    r: Option<Vec<(usize, usize, RationalLit)>>,
}

fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("e{i}")).collect()
}

/// Parses a Lie bialgebra file. Antisymmetric partners of listed bracket and
/// cobracket entries are filled in; without a cobracket it is derived from
/// `r`, or zero when `r` is absent too.
pub fn parse_lie(text: &str) -> Result<LieBialgebra> {
    let f: LieFile = parse_json(text, "Lie bialgebra file")?;
    let d = f.dim;
    let labels = f.basis.unwrap_or_else(|| default_labels(d));
    if labels.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "{} basis labels for dim {d}",
            labels.len()
        )));
    }
    let mut seen = labels.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != d {
        return Err(Error::InvalidInput("basis labels must be distinct".into()));
    }
    let check3 = |i: usize, j: usize, k: usize| {
        if i >= d || j >= d || k >= d {
            Err(Error::InvalidInput(format!(
                "index out of range in [{i}, {j}, {k}] for dim {d}"
            )))
        } else {
            Ok(())
        }
    };
    let mut bracket = Vec::with_capacity(f.bracket.len());
    for (i, j, k, c) in &f.bracket {
        check3(*i, *j, *k)?;
        bracket.push((*i, *j, *k, c.value()?));
    }
    let algebra = LieAlgebra::from_entries(labels, bracket)?;
    let r = match &f.r {
        None => None,
        Some(entries) => {
            let mut m = QMatrix::zeros(d, d);
            for (i, j, c) in entries {
                if *i >= d || *j >= d {
                    return Err(Error::InvalidInput(format!(
                        "r index ({i}, {j}) out of range for dim {d}"
                    )));
                }
                m.add_at(*i, *j, &c.value()?);
            }
            Some(m)
        }
    };
    let cobracket = match (&f.cobracket, &r) {
        (Some(entries), _) => {
            let mut v = Vec::with_capacity(entries.len());
            for (i, j, k, c) in entries {
                check3(*i, *j, *k)?;
                v.push((*i, *j, *k, c.value()?));
            }
            Cobracket::from_entries(d, v)?
        }
        (None, Some(r)) => Cobracket::coboundary(&algebra, r),
        (None, None) => Cobracket::zero(d),
    };
    Ok(LieBialgebra { algebra, cobracket, r })
}

pub fn cobracket_entries(delta: &Cobracket) -> Vec<Value> {
    let mut out = Vec::new();
    for (i, t) in delta.images().iter().enumerate() {
        for j in 0..t.rows() {
            for k in 0..t.cols() {
                let c = t.get(j, k);
                if !num_traits::Zero::is_zero(c) {
                    out.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    out
}

fn tensor2_entries(t: &Tensor2) -> Vec<Value> {
    let mut out = Vec::new();
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            let c = t.get(i, j);
            if !num_traits::Zero::is_zero(c) {
                out.push(json!([i, j, c.to_string()]));
            }
        }
    }
    out
}

/// Bracket entries are listed for `i < j` only.
pub fn lie_to_json(b: &LieBialgebra) -> Value {
    let d = b.dim();
    let mut bracket = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for (k, c) in b.algebra.bracket_basis(i, j).iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    bracket.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    let mut doc = json!({
        "dim": d,
        "basis": b.algebra.labels(),
        "bracket": bracket,
        "cobracket": cobracket_entries(&b.cobracket),
    });
    if let Some(r) = &b.r {
        doc["r"] = Value::Array(tensor2_entries(r));
    }
    doc
}

#[derive(Deserialize)]
struct RepFile {
    carrier_dim: usize,
    action: BTreeMap<String, Vec<Vec<RationalLit>>>,
}

/// Parses a representation file against the basis labels of `alg`; labels
/// missing from the file act by zero.
pub fn parse_representation(text: &str, alg: &LieAlgebra) -> Result<Representation> {
    let f: RepFile = parse_json(text, "representation file")?;
    let m = f.carrier_dim;
    for label in f.action.keys() {
        if !alg.labels().contains(label) {
            return Err(Error::InvalidInput(format!(
                "representation acts by unknown basis element {label:?}"
            )));
        }
    }
    let mut mats = Vec::with_capacity(alg.dim());
    for label in alg.labels() {
        let mat = match f.action.get(label) {
            None => QMatrix::zeros(m, m),
            Some(rows) => {
                if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                    return Err(Error::DimensionMismatch(format!(
                        "matrix for {label:?} must be {m}x{m}"
                    )));
                }
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(RationalLit::value).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                QMatrix::from_rows(rows)
            }
        };
        mats.push(mat);
    }
    let rep = Representation::new(m, mats)?;
    rep.check_for(alg)?;
    Ok(rep)
}

pub fn representation_to_json(rep: &Representation, alg: &LieAlgebra) -> Value {
    let mut action = serde_json::Map::new();
    for (label, mat) in alg.labels().iter().zip(rep.matrices()) {
        let rows: Vec<Vec<String>> = (0..mat.rows())
            .map(|i| (0..mat.cols()).map(|j| mat.get(i, j).to_string()).collect())
            .collect();
        action.insert(label.clone(), json!(rows));
    }
    json!({ "carrier_dim": rep.carrier_dim(), "action": action })
}
