//! Finite-dimensional Lie algebras, cobrackets, r-elements and representations
//! over the rationals, with two- and three-index tensors on basis coordinates.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar::Rational;

pub type Q = Rational;
pub type Vector = Vec<Q>;
/// `t[(i, j)]` is the coefficient of `e_i ⊗ f_j`.
pub type Tensor2 = QMatrix;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn basis_vector(d: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); d];
    v[i] = Q::one();
    v
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn outer(u: &[Q], v: &[Q]) -> Tensor2 {
    QMatrix::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
}

/// `(A⊗1 + 1⊗B) t`.
pub fn act2(a: &QMatrix, b: &QMatrix, t: &Tensor2) -> Tensor2 {
    a.mul(t).plus(&t.mul(&b.transpose()))
}

/// A tensor in `U⊗V⊗W`, big-endian over `(i, j, k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Q>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self {
            dims,
            data: vec![Q::zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.data[self.idx(i, j, k)]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Q) {
        let p = self.idx(i, j, k);
        self.data[p] += v;
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// First nonzero component.
    pub fn first_nonzero(&self) -> Option<([usize; 3], Q)> {
        self.data.iter().position(|v| !v.is_zero()).map(|p| {
            let k = p % self.dims[2];
            let j = (p / self.dims[2]) % self.dims[1];
            let i = p / (self.dims[1] * self.dims[2]);
            ([i, j, k], self.data[p].clone())
        })
    }

    /// Sum over cyclic permutations of the three legs (all dims equal).
    pub fn cyclic_sum(&self) -> Self {
        let d = self.dims[0];
        let mut out = Self::zeros(self.dims);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, k, v);
                    out.add_at(j, k, i, v);
                    out.add_at(k, i, j, v);
                }
            }
        }
        out
    }
}

/// A Lie algebra given by structure constants `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    consts: Vec<Vec<Vector>>,
}

impl LieAlgebra {
    /// Builds from `(i, j, k, c)` entries. A missing antisymmetric partner is
    /// filled in; a conflicting partner is an error.
    pub fn from_entries(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Q)>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut consts = vec![vec![vec![Q::zero(); d]; d]; d];
        let mut given = vec![vec![vec![false; d]; d]; d];
        for (i, j, k, c) in entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidInput(format!(
                    "bracket index ({i}, {j}, {k}) out of range for dim {d}"
                )));
            }
            if given[i][j][k] && consts[i][j][k] != c {
                return Err(Error::InvalidInput(format!(
                    "bracket entry ({i}, {j}, {k}) given twice with different values"
                )));
            }
            given[i][j][k] = true;
            consts[i][j][k] = c;
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    match (given[i][j][k], given[j][i][k]) {
                        (true, true) if consts[i][j][k] != -&consts[j][i][k] => {
                            return Err(Error::InvalidInput(format!(
                                "bracket is not antisymmetric at ({i}, {j}, {k})"
                            )));
                        }
                        (true, false) => consts[j][i][k] = -&consts[i][j][k],
                        _ => {}
                    }
                }
            }
        }
        Ok(Self { labels, consts })
    }

    /// Builds from a closure giving `[e_i, e_j]`; antisymmetry is checked.
    pub fn from_fn(labels: Vec<String>, mut bracket: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let d = labels.len();
        let consts: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| bracket(i, j)).collect()).collect();
        for i in 0..d {
            for j in 0..d {
                if consts[i][j].len() != d {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket value of length {} in dim {d}",
                        consts[i][j].len()
                    )));
                }
                let neg: Vector = consts[j][i].iter().map(|x| -x).collect();
                if consts[i][j] != neg {
                    return Err(Error::InvalidInput(format!(
                        "bracket is not antisymmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { labels, consts })
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        let d = labels.len();
        Self {
            labels,
            consts: vec![vec![vec![Q::zero(); d]; d]; d],
        }
    }

    /// `sl₂` on the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        Self::from_entries(
            vec!["h".into(), "e".into(), "f".into()],
            [(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))],
        )
        .expect("valid structure constants")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i][j]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Q]) -> QMatrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.bracket(x, &basis_vector(d, j))).collect();
        QMatrix::from_fn(d, d, |i, j| cols[j][i].clone())
    }

    pub fn ad_basis(&self, i: usize) -> QMatrix {
        let d = self.dim();
        QMatrix::from_fn(d, d, |k, j| self.consts[i][j][k].clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().flatten().all(|v| is_zero_vector(v))
    }

    /// First basis triple violating the Jacobi identity.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (ei, ej, ek) = (basis_vector(d, i), basis_vector(d, j), basis_vector(d, k));
                    let a = self.bracket(&ei, &self.consts[j][k]);
                    let b = self.bracket(&ej, &self.consts[k][i]);
                    let c = self.bracket(&ek, &self.consts[i][j]);
                    if (0..d).any(|t| !(&(&a[t] + &b[t]) + &c[t]).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn killing_form(&self) -> QMatrix {
        let d = self.dim();
        let ads: Vec<QMatrix> = (0..d).map(|i| self.ad_basis(i)).collect();
        QMatrix::from_fn(d, d, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// `[x⊗1 + 1⊗x, t]` for a two-tensor on `g⊗g`.
    pub fn ad2(&self, x: &[Q], t: &Tensor2) -> Tensor2 {
        let a = self.ad(x);
        act2(&a, &a, t)
    }

    pub fn format_vector(&self, v: &[Q]) -> String {
        format_combination(v.iter().enumerate().map(|(i, c)| (self.labels[i].clone(), c)))
    }

    pub fn format_tensor(&self, t: &Tensor2) -> String {
        format_tensor_with(&self.labels, &self.labels, t)
    }
}

pub fn format_combination<'a>(terms: impl Iterator<Item = (String, &'a Q)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("({c})*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_tensor_with(left: &[String], right: &[String], t: &Tensor2) -> String {
    let mut terms = Vec::new();
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            terms.push((format!("{}⊗{}", left[i], right[j]), t.get(i, j)));
        }
    }
    format_combination(terms.into_iter())
}

/// `δ(e_i) = Σ δ^{jk}_i e_j⊗e_k`, stored as one two-tensor per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Cobracket {
    images: Vec<Tensor2>,
}

impl Cobracket {
    pub fn new(images: Vec<Tensor2>) -> Result<Self> {
        let d = images.len();
        if images.iter().any(|t| t.rows() != d || t.cols() != d) {
            return Err(Error::DimensionMismatch(format!("cobracket images must be {d}x{d}")));
        }
        Ok(Self { images })
    }

    pub fn zero(d: usize) -> Self {
        Self {
            images: vec![QMatrix::zeros(d, d); d],
        }
    }

    /// Builds from `(i, j, k, c)` entries meaning `δ(e_i) ∋ c e_j⊗e_k`, filling
    /// in missing co-antisymmetric partners.
    pub fn from_entries(d: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Q)>) -> Result<Self> {
        let mut images = vec![QMatrix::zeros(d, d); d];
        let mut given = vec![vec![vec![false; d]; d]; d];
        for (i, j, k, c) in entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidInput(format!(
                    "cobracket index ({i}, {j}, {k}) out of range for dim {d}"
                )));
            }
            if given[i][j][k] && images[i].get(j, k) != &c {
                return Err(Error::InvalidInput(format!(
                    "cobracket entry ({i}, {j}, {k}) given twice with different values"
                )));
            }
            given[i][j][k] = true;
            images[i].set(j, k, c);
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    match (given[i][j][k], given[i][k][j]) {
                        (true, true) if images[i].get(j, k) != &-images[i].get(k, j) => {
                            return Err(Error::InvalidInput(format!(
                                "cobracket is not antisymmetric at ({i}, {j}, {k})"
                            )));
                        }
                        (true, false) => {
                            let v = -images[i].get(j, k);
                            images[i].set(k, j, v);
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(Self { images })
    }

    /// The coboundary `δx = [x⊗1 + 1⊗x, r]`.
    pub fn coboundary(alg: &LieAlgebra, r: &Tensor2) -> Self {
        let d = alg.dim();
        Self {
            images: (0..d).map(|i| alg.ad2(&basis_vector(d, i), r)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Tensor2 {
        &self.images[i]
    }

    pub fn images(&self) -> &[Tensor2] {
        &self.images
    }

    pub fn apply(&self, x: &[Q]) -> Tensor2 {
        let d = self.dim();
        let mut out = QMatrix::zeros(d, d);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.plus(&self.images[i].scale(c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(QMatrix::is_zero)
    }

    pub fn co_antisymmetry_failure(&self) -> Option<usize> {
        self.images.iter().position(|t| !t.plus(&t.transpose()).is_zero())
    }

    /// `(δ⊗id)δ(e_i)` as a three-tensor.
    fn delta_delta(&self, i: usize) -> Tensor3 {
        let d = self.dim();
        let mut out = Tensor3::zeros([d, d, d]);
        let t = &self.images[i];
        for a in 0..d {
            for b in 0..d {
                let c = t.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let inner = &self.images[a];
                for x in 0..d {
                    for y in 0..d {
                        let v = inner.get(x, y);
                        if !v.is_zero() {
                            out.add_at(x, y, b, &(c * v));
                        }
                    }
                }
            }
        }
        out
    }

    /// First basis element where `Σ_cyclic (δ⊗id)δ ≠ 0`.
    pub fn co_jacobi_failure(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| !self.delta_delta(i).cyclic_sum().is_zero())
    }
}

/// Classical Yang-Baxter expression `[r12,r13] + [r12,r23] + [r13,r23]`.
pub fn cybe(alg: &LieAlgebra, r: &Tensor2) -> Tensor3 {
    let d = alg.dim();
    let mut out = Tensor3::zeros([d, d, d]);
    let nz: Vec<(usize, usize, Q)> = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .filter(|&(a, b)| !r.get(a, b).is_zero())
        .map(|(a, b)| (a, b, r.get(a, b).clone()))
        .collect();
    for (a, b, x) in &nz {
        for (c, e, y) in &nz {
            let xy = x * y;
            for (k, v) in alg.bracket_basis(*a, *c).iter().enumerate() {
                if !v.is_zero() {
                    out.add_at(k, *b, *e, &(&xy * v));
                }
            }
            for (k, v) in alg.bracket_basis(*b, *c).iter().enumerate() {
                if !v.is_zero() {
                    out.add_at(*a, k, *e, &(&xy * v));
                }
            }
            for (k, v) in alg.bracket_basis(*b, *e).iter().enumerate() {
                if !v.is_zero() {
                    out.add_at(*a, *c, k, &(&xy * v));
                }
            }
        }
    }
    out
}

/// `r₊ = (r + τ r)/2`.
pub fn symmetric_part(r: &Tensor2) -> Tensor2 {
    r.plus(&r.transpose()).scale(&qr(1, 2))
}

/// The standard sl₂ r-matrix `e⊗f + h⊗h/4` on the basis `(h, e, f)`.
pub fn sl2_standard_r() -> Tensor2 {
    let mut r = QMatrix::zeros(3, 3);
    r.set(1, 2, q(1));
    r.set(0, 0, qr(1, 4));
    r
}

/// Matrices `ρ(e_i)` on a carrier space.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    carrier_dim: usize,
    matrices: Vec<QMatrix>,
}

impl Representation {
    pub fn new(carrier_dim: usize, matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices
            .iter()
            .any(|m| m.rows() != carrier_dim || m.cols() != carrier_dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "representation matrices must be {carrier_dim}x{carrier_dim}"
            )));
        }
        Ok(Self { carrier_dim, matrices })
    }

    /// The adjoint representation.
    pub fn adjoint(alg: &LieAlgebra) -> Self {
        Self {
            carrier_dim: alg.dim(),
            matrices: (0..alg.dim()).map(|i| alg.ad_basis(i)).collect(),
        }
    }

    pub fn trivial(alg_dim: usize, carrier_dim: usize) -> Self {
        Self {
            carrier_dim,
            matrices: vec![QMatrix::zeros(carrier_dim, carrier_dim); alg_dim],
        }
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, i: usize) -> &QMatrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    /// `ρ(ξ)` for a general element.
    pub fn of(&self, xi: &[Q]) -> QMatrix {
        let m = self.carrier_dim;
        xi.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(QMatrix::zeros(m, m), |acc, (i, c)| acc.plus(&self.matrices[i].scale(c)))
    }

    /// First basis pair where `ρ([e_i,e_j]) ≠ [ρ_i, ρ_j]`.
    pub fn homomorphism_failure(&self, alg: &LieAlgebra) -> Option<(usize, usize)> {
        let d = alg.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.of(alg.bracket_basis(i, j));
                if lhs != self.matrices[i].commutator(&self.matrices[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn check_for(&self, alg: &LieAlgebra) -> Result<()> {
        if self.algebra_dim() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "representation has {} matrices, algebra has dim {}",
                self.algebra_dim(),
                alg.dim()
            )));
        }
        if let Some((i, j)) = self.homomorphism_failure(alg) {
            return Err(Error::NotHomomorphism(format!(
                "ρ([{0},{1}]) ≠ [ρ({0}), ρ({1})]",
                alg.labels()[i],
                alg.labels()[j]
            )));
        }
        Ok(())
    }

    /// `ρ` is injective as a linear map into matrices.
    pub fn is_faithful(&self) -> bool {
        let m2 = self.carrier_dim * self.carrier_dim;
        let d = self.matrices.len();
        if d == 0 {
            return true;
        }
        let stacked = QMatrix::from_fn(m2, d, |p, i| {
            self.matrices[i].get(p / self.carrier_dim, p % self.carrier_dim).clone()
        });
        stacked.rank() == d
    }

    /// The dual representation `ρ*(ξ) = -ρ(ξ)^T`.
    pub fn dual(&self) -> Self {
        Self {
            carrier_dim: self.carrier_dim,
            matrices: self.matrices.iter().map(|m| m.transpose().scale(&q(-1))).collect(),
        }
    }
}

/// A Lie algebra with a cobracket and, when quasitriangular, its r-element.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBialgebra {
    pub algebra: LieAlgebra,
    pub cobracket: Cobracket,
    pub r: Option<Tensor2>,
}

impl LieBialgebra {
    /// Coboundary Lie bialgebra with `δ = [· ⊗ 1 + 1 ⊗ ·, r]`.
    pub fn from_r(algebra: LieAlgebra, r: Tensor2) -> Result<Self> {
        let d = algebra.dim();
        if r.rows() != d || r.cols() != d {
            return Err(Error::DimensionMismatch(format!("r must be {d}x{d}")));
        }
        Ok(Self {
            cobracket: Cobracket::coboundary(&algebra, &r),
            algebra,
            r: Some(r),
        })
    }

    /// `sl₂` with `r = e⊗f + h⊗h/4`.
    pub fn sl2_standard() -> Self {
        Self::from_r(LieAlgebra::sl2(), sl2_standard_r()).expect("3x3 r")
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn r_plus(&self) -> Option<Tensor2> {
        self.r.as_ref().map(symmetric_part)
    }
}

impl fmt::Display for LieBialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let labels = self.algebra.labels();
        writeln!(f, "Lie bialgebra of dimension {d}")?;
        for i in 0..d {
            for j in i + 1..d {
                let b = self.algebra.bracket_basis(i, j);
                if !is_zero_vector(b) {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        labels[i],
                        labels[j],
                        self.algebra.format_vector(b)
                    )?;
                }
            }
        }
        for i in 0..d {
            let t = self.cobracket.image(i);
            if !t.is_zero() {
                writeln!(f, "  δ({}) = {}", labels[i], self.algebra.format_tensor(t))?;
            }
        }
        if let Some(r) = &self.r {
            writeln!(f, "  r = {}", self.algebra.format_tensor(r))?;
        }
        Ok(())
    }
}
