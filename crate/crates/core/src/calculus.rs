//! Braided differentiation, the evaluation pairing, graded kernels and the
//! truncated braided exponential.
//!
//! A dual word stored as `u = [a_1, …, a_m]` stands for `y^{a_1}⋯y^{a_m}` and
//! acts as `∂^{a_1}∘…∘∂^{a_m}` (so `a_m` is applied first). Gram matrices are
//! indexed by `rev u` on rows and by x-words on columns.

use std::collections::BTreeMap;

use crate::combinatorics::Combinatorics;
use crate::error::{Error, Result};
use crate::free_algebra::{FreeElement, TensorElement, WordBraiding};
use crate::linalg::Matrix;
use crate::scalar::RationalFunction;
use crate::tensor::{all_words, index_word, word_index, GradedOperator, RMatrix, Word};

type RF = RationalFunction;

fn require_primal(f: &FreeElement) -> Result<()> {
    if f.is_dual() {
        return Err(Error::InvalidInput("expected a primal (x) element".into()));
    }
    Ok(())
}

fn check_dim(f: &FreeElement, comb: &Combinatorics) -> Result<()> {
    if f.dim() != comb.dim() {
        return Err(Error::DimensionMismatch(format!(
            "element over dim {}, R-matrix over dim {}",
            f.dim(),
            comb.dim()
        )));
    }
    Ok(())
}

fn check_letter(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::InvalidInput(format!(
            "generator {} out of range for dim {n}",
            i + 1
        )));
    }
    Ok(())
}

/// `∂^i x_{i_1}⋯x_{i_m} = x_{j_2}⋯x_{j_m} [m;R]^{i j_2⋯j_m}_{i_1⋯i_m}`.
pub fn partial_left(i: usize, f: &FreeElement, comb: &Combinatorics) -> Result<FreeElement> {
    require_primal(f)?;
    check_dim(f, comb)?;
    check_letter(i, comb.dim())?;
    let mut terms = Vec::new();
    for (w, c) in f.terms() {
        if w.is_empty() {
            continue;
        }
        for (out, v) in comb.integer(w.len())?.apply_to_word(w) {
            if out[0] == i {
                terms.push((out[1..].to_vec(), c * &v));
            }
        }
    }
    FreeElement::from_terms(comb.dim(), false, terms)
}

/// Right derivative `x_{i_1}⋯x_{i_m} ∂⃖^i`: strip a trailing `i` from the mirror
/// braided integer, which moves each letter to the end.
pub fn partial_right(i: usize, f: &FreeElement, comb: &Combinatorics) -> Result<FreeElement> {
    require_primal(f)?;
    check_dim(f, comb)?;
    check_letter(i, comb.dim())?;
    let mut terms = Vec::new();
    for (w, c) in f.terms() {
        if w.is_empty() {
            continue;
        }
        for (out, v) in comb.integer_right(w.len())?.apply_to_word(w) {
            if out[out.len() - 1] == i {
                terms.push((out[..out.len() - 1].to_vec(), c * &v));
            }
        }
    }
    FreeElement::from_terms(comb.dim(), false, terms)
}

fn pair_checks(f: &FreeElement, g: &FreeElement, comb: &Combinatorics) -> Result<()> {
    if !f.is_dual() {
        return Err(Error::InvalidInput(
            "first argument of ev must be a dual (y) element".into(),
        ));
    }
    require_primal(g)?;
    check_dim(f, comb)?;
    check_dim(g, comb)
}

/// `ev(f, g) = f(∂) g |_{x=0}`.
pub fn ev_pairing(f: &FreeElement, g: &FreeElement, comb: &Combinatorics) -> Result<RF> {
    pair_checks(f, g, comb)?;
    let mut total = RF::zero();
    for (u, a) in f.terms() {
        let mut cur = g.homogeneous_part(u.len());
        for &letter in u.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = partial_left(letter, &cur, comb)?;
        }
        total = &total + &(a * &cur.counit());
    }
    Ok(total)
}

/// The same pairing through right derivatives: `g ∂⃖^{a_1} ∂⃖^{a_2} ⋯ |_{x=0}`.
pub fn ev_pairing_right(f: &FreeElement, g: &FreeElement, comb: &Combinatorics) -> Result<RF> {
    pair_checks(f, g, comb)?;
    let mut total = RF::zero();
    for (u, a) in f.terms() {
        let mut cur = g.homogeneous_part(u.len());
        for &letter in u {
            if cur.is_zero() {
                break;
            }
            cur = partial_right(letter, &cur, comb)?;
        }
        total = &total + &(a * &cur.counit());
    }
    Ok(total)
}

/// Which side the derivatives act from when building a Gram matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `G[I, K] = ev(y stored as rev I, x_K)`, by repeated differentiation of each `x_K`.
pub fn gram_matrix_via(m: usize, comb: &Combinatorics, side: Side) -> Result<GradedOperator> {
    let n = comb.dim();
    let side_len = n.pow(m as u32);
    let mut mat = Matrix::zeros(side_len, side_len);
    for (col, k) in all_words(n, m).enumerate() {
        // each path of derivative letters, in application order, ends at a scalar
        let mut frontier: Vec<(Word, FreeElement)> = vec![(Vec::new(), FreeElement::word(n, &k))];
        for _ in 0..m {
            let mut next = Vec::new();
            for (path, g) in frontier {
                for i in 0..n {
                    let d = match side {
                        Side::Left => partial_left(i, &g, comb)?,
                        Side::Right => partial_right(i, &g, comb)?,
                    };
                    if !d.is_zero() {
                        let mut p = path.clone();
                        p.push(i);
                        next.push((p, d));
                    }
                }
            }
            frontier = next;
        }
        for (path, g) in frontier {
            // left: path = (a_m, …, a_1) = rev u = I; right: path = (a_1, …, a_m) = u
            let row_word: Word = match side {
                Side::Left => path,
                Side::Right => path.into_iter().rev().collect(),
            };
            mat.set(word_index(&row_word, n), col, g.counit());
        }
    }
    GradedOperator::new(n, m, mat)
}

pub fn gram_matrix(m: usize, comb: &Combinatorics) -> Result<GradedOperator> {
    gram_matrix_via(m, comb, Side::Left)
}

/// Kernel generators of the pairing in one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet {
    pub degree: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// Homogeneous x-polynomials in reduced echelon form (pivot coefficient 1,
    /// pivots at the degree-reverse-lexicographically largest word).
    pub generators: Vec<FreeElement>,
}

/// Degree-reverse-lexicographic comparison of equal-length words: at the last
/// differing position, the word with the smaller letter is larger.
pub fn degrevlex_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Word indices of degree `m` grouped by letter counts.
pub fn multidegree_blocks(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut blocks: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (idx, w) in all_words(n, m).enumerate() {
        let mut counts = vec![0; n];
        for &l in &w {
            counts[l] += 1;
        }
        blocks.entry(counts).or_default().push(idx);
    }
    blocks.into_values().collect()
}

fn blocks_for(r: &RMatrix, m: usize) -> Vec<Vec<usize>> {
    let n = r.dim();
    if r.preserves_letter_counts() {
        multidegree_blocks(n, m)
    } else {
        vec![(0..n.pow(m as u32)).collect()]
    }
}

fn sub_matrix(op: &GradedOperator, idx: &[usize]) -> Matrix<RF> {
    Matrix::from_fn(idx.len(), idx.len(), |i, j| op.matrix().get(idx[i], idx[j]).clone())
}

/// Rank and normalized kernel of an operator, block by block.
fn kernel_by_blocks(op: &GradedOperator, blocks: &[Vec<usize>]) -> (usize, Vec<Vec<RF>>) {
    let n = op.dim();
    let m = op.degree();
    let mut rank = 0;
    let mut kernel: Vec<(Word, Vec<RF>)> = Vec::new();
    for block in blocks {
        // order columns largest-first so pivots land on the largest words
        let mut order = block.clone();
        order.sort_by(|&a, &b| degrevlex_cmp(&index_word(b, n, m), &index_word(a, n, m)));
        let sub = sub_matrix(op, &order);
        let basis = sub.kernel_basis();
        rank += order.len() - basis.len();
        if basis.is_empty() {
            continue;
        }
        let echelon = Matrix::from_rows(basis).row_reduce();
        for (row, &pc) in echelon.pivots.iter().enumerate() {
            let mut v = vec![RF::zero(); op.side()];
            for (j, &global) in order.iter().enumerate() {
                v[global] = echelon.rref.get(row, j).clone();
            }
            kernel.push((index_word(order[pc], n, m), v));
        }
    }
    kernel.sort_by(|a, b| degrevlex_cmp(&b.0, &a.0));
    (rank, kernel.into_iter().map(|(_, v)| v).collect())
}

pub fn graded_kernel(m: usize, comb: &Combinatorics) -> Result<RelationSet> {
    let n = comb.dim();
    if m == 0 {
        return Ok(RelationSet {
            degree: 0,
            rank: 1,
            kernel_dim: 0,
            generators: Vec::new(),
        });
    }
    let gram = gram_matrix(m, comb)?;
    let (rank, kernel) = kernel_by_blocks(&gram, &blocks_for(comb.rmatrix(), m));
    Ok(RelationSet {
        degree: m,
        rank,
        kernel_dim: kernel.len(),
        generators: kernel
            .iter()
            .map(|v| FreeElement::from_vector(n, false, m, v))
            .collect(),
    })
}

pub fn graded_rank(m: usize, comb: &Combinatorics) -> Result<usize> {
    if m == 0 {
        return Ok(1);
    }
    let gram = gram_matrix(m, comb)?;
    Ok(blocks_for(comb.rmatrix(), m)
        .iter()
        .map(|b| sub_matrix(&gram, b).rank())
        .sum())
}

/// True iff every generator is annihilated by the Gram matrix.
pub fn relations_are_sound(rel: &RelationSet, comb: &Combinatorics) -> Result<bool> {
    if rel.degree == 0 {
        return Ok(rel.generators.is_empty());
    }
    let gram = gram_matrix(rel.degree, comb)?;
    Ok(rel
        .generators
        .iter()
        .all(|g| gram.matrix().apply(&g.to_vector(rel.degree)).iter().all(RF::is_zero)))
}

/// A generalized Cartan matrix with symmetrizers, `β_{ij} = d_i a_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

impl CartanData {
    pub fn new(cartan: Vec<Vec<i64>>, symmetrizers: Option<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput("Cartan matrix must be nonempty and square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidInput(format!("diagonal entry a_{0}{0} must be 2", i + 1)));
            }
            for j in 0..n {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::InvalidInput(format!(
                        "off-diagonal entry a_{}{} must be non-positive",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let d = match symmetrizers {
            Some(d) => d,
            None => vec![1; n],
        };
        if d.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} symmetrizers, got {}",
                d.len()
            )));
        }
        if d.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidInput("symmetrizers must be positive".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if d[i] * cartan[i][j] != d[j] * cartan[j][i] {
                    return Err(Error::InvalidInput(format!(
                        "d_i a_ij is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            cartan,
            symmetrizers: d,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn bilinear_form(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.symmetrizers[i] * self.cartan[i][j]).collect())
            .collect()
    }

    pub fn rmatrix(&self) -> RMatrix {
        RMatrix::from_bilinear_form(&self.bilinear_form()).expect("validated square form")
    }
}

/// Relation sets for degrees `0..=max_degree` with `R` built from the Cartan data.
pub fn serre_relations(cartan: &CartanData, max_degree: usize) -> Result<Vec<RelationSet>> {
    let comb = Combinatorics::new(cartan.rmatrix())?;
    (0..=max_degree).map(|m| graded_kernel(m, &comb)).collect()
}

/// `F_m^{-1}`, inverted block by block when `R` preserves letter counts.
pub fn factorial_inverse(m: usize, comb: &Combinatorics) -> Result<GradedOperator> {
    let n = comb.dim();
    if m == 0 {
        return Ok(GradedOperator::identity(n, 0));
    }
    let fact = comb.factorial(m)?;
    let mut inv = Matrix::zeros(fact.side(), fact.side());
    for block in blocks_for(comb.rmatrix(), m) {
        let sub = sub_matrix(&fact, &block);
        let Some(si) = sub.inverse() else {
            let kernel_dim = fact.side() - fact.rank_over_field();
            return Err(Error::Singular { degree: m, kernel_dim });
        };
        for (i, &gi) in block.iter().enumerate() {
            for (j, &gj) in block.iter().enumerate() {
                inv.set(gi, gj, si.get(i, j).clone());
            }
        }
    }
    GradedOperator::new(n, m, inv)
}

/// The truncated coevaluation `Σ_{m≤N} x_I (F_m^{-1})^I_J ⊗ y^{j_m⋯j_1}`.
/// The left leg holds x-words, the right leg stored dual words.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedExp {
    pub truncation: usize,
    pub series: TensorElement,
}

pub fn braided_exp(comb: &Combinatorics, truncation: usize) -> Result<BraidedExp> {
    let n = comb.dim();
    let mut terms = Vec::new();
    for m in 0..=truncation {
        let inv = factorial_inverse(m, comb)?;
        for (row, cells) in inv.matrix().sparse_rows().into_iter().enumerate() {
            let x = index_word(row, n, m);
            for (col, c) in cells {
                let mut y = index_word(col, n, m);
                y.reverse();
                terms.push(((x.clone(), y), c.clone()));
            }
        }
    }
    Ok(BraidedExp {
        truncation,
        series: TensorElement::from_terms(n, terms),
    })
}

fn differentiate_x_leg(t: &TensorElement, i: usize, side: Side, comb: &Combinatorics) -> Result<TensorElement> {
    let n = comb.dim();
    let mut out = TensorElement::zero(n);
    for ((x, y), c) in t.terms() {
        let f = FreeElement::word(n, x);
        let d = match side {
            Side::Left => partial_left(i, &f, comb)?,
            Side::Right => partial_right(i, &f, comb)?,
        };
        for (w, v) in d.terms() {
            out = out.add(&TensorElement::pure(n, w.clone(), y.clone(), c * v))?;
        }
    }
    Ok(out)
}

fn attach_y(t: &TensorElement, i: usize, append: bool) -> TensorElement {
    TensorElement::from_terms(
        t.dim(),
        t.terms().iter().map(|((x, y), c)| {
            let mut y2 = y.clone();
            if append {
                y2.push(i);
            } else {
                y2.insert(0, i);
            }
            ((x.clone(), y2), c.clone())
        }),
    )
}

/// Checks `(∂^i⊗id) exp_N = exp_{N-1}·(1⊗y^i)` and
/// `(∂⃖^i⊗id) exp_N = (1⊗y^i)·exp_{N-1}` for every generator `i`.
pub fn exp_eigenfunction_check(comb: &Combinatorics, truncation: usize) -> Result<bool> {
    if truncation == 0 {
        return Ok(true);
    }
    let full = braided_exp(comb, truncation)?;
    let lower = braided_exp(comb, truncation - 1)?;
    for i in 0..comb.dim() {
        let left = differentiate_x_leg(&full.series, i, Side::Left, comb)?;
        if left != attach_y(&lower.series, i, true) {
            return Ok(false);
        }
        let right = differentiate_x_leg(&full.series, i, Side::Right, comb)?;
        if right != attach_y(&lower.series, i, false) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ev(f·g, w) = Σ ev(g, w₍₁₎) ev(f, w₍₂₎)` for `f, g` in `T(V*)` with the
/// concatenation product and `w` an x-word.
pub fn pairing_compatible(f: &FreeElement, g: &FreeElement, w: &[usize], comb: &Combinatorics) -> Result<bool> {
    let n = comb.dim();
    let lhs = ev_pairing(&f.multiply(g)?, &FreeElement::word(n, w), comb)?;
    let braiding = WordBraiding::new(comb.rmatrix());
    let mut rhs = RF::zero();
    for ((w1, w2), c) in braiding.coproduct_word(w).terms() {
        let a = ev_pairing(g, &FreeElement::word(n, w1), comb)?;
        if a.is_zero() {
            continue;
        }
        let b = ev_pairing(f, &FreeElement::word(n, w2), comb)?;
        rhs = &rhs + &(&(c * &a) * &b);
    }
    Ok(lhs == rhs)
}
