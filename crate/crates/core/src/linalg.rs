//! Dense matrices over an exact field and Gauss-Jordan elimination.

use std::fmt;

use crate::scalar::{poly, Field, Rational};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type QMatrix = Matrix<Rational>;

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[F]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

/// Result of row reduction: the reduced row echelon form and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = slot.plus(v);
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<G>(&self, f: impl FnMut(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G, E>(&self, f: impl FnMut(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Nonzero entries of each row, as `(column, value)` pairs.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, &F)>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect()
    }

    /// Matrix product; zero entries are skipped on both sides.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let b_rows = other.sparse_rows();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &b_rows[k] {
                    out.add_at(i, *j, &a.times(b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(F::zero(), |acc, (a, x)| {
                    if a.is_zero() || x.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(x))
                    }
                })
            })
            .collect()
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|a| a.times(s))
    }

    /// Kronecker product `self ⊗ other` with big-endian composite indices.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.times(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    /// Gauss-Jordan elimination. Within each column the pivot with the
    /// smallest [`Field::complexity`] is chosen.
    pub fn row_reduce(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by_key(|&i| m.get(i, c).complexity());
            let Some(p) = best else { continue };
            m.swap_rows(r, p);
            let inv = F::one().over(m.get(r, c));
            for j in c..m.cols {
                let v = m.get(r, j);
                if !v.is_zero() {
                    let nv = v.times(&inv);
                    m.set(r, j, nv);
                }
            }
            let pivot_row: Vec<(usize, F)> = (c..m.cols)
                .filter(|&j| !m.get(r, j).is_zero())
                .map(|j| (j, m.get(r, j).clone()))
                .collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, pv) in &pivot_row {
                    let nv = m.get(i, *j).minus(&factor.times(pv));
                    m.set(i, *j, nv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().pivots.len()
    }

    /// Basis of the right kernel `{v : A v = 0}`, one vector per free column,
    /// with a 1 in that free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Echelon { rref, pivots } = self.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    let x = rref.get(row, f);
                    if !x.is_zero() {
                        v[pc] = x.negated();
                    }
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let Echelon { rref, pivots } = aug.row_reduce();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| rref.get(i, n + j).clone()))
    }
}

impl QMatrix {
    /// Monic minimal polynomial, little-endian coefficients.
    pub fn minimal_polynomial(&self) -> Vec<Rational> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut powers = vec![Self::identity(n)];
        loop {
            let next = powers.last().unwrap().mul(self);
            powers.push(next);
            let k = powers.len();
            let krylov = Self::from_fn(n * n, k, |idx, col| powers[col].data[idx].clone());
            let kernel = krylov.kernel_basis();
            if let Some(v) = kernel.first() {
                let lead = v[k - 1].clone();
                let mut p: Vec<Rational> = v.iter().map(|c| c / &lead).collect();
                poly::trim(&mut p);
                return p;
            }
        }
    }

    /// Semisimple (diagonalizable over an algebraic closure) iff the minimal polynomial is squarefree.
    pub fn is_semisimple(&self) -> bool {
        poly::is_squarefree(&self.minimal_polynomial())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).minus(&other.mul(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_of_singular_is_none() {
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let m = qm(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), QMatrix::identity(2));
    }

    #[test]
    fn minimal_polynomials() {
        // nilpotent Jordan block: t^2
        let j = qm(&[&[0, 1], &[0, 0]]);
        assert_eq!(j.minimal_polynomial(), vec![q(0), q(0), q(1)]);
        assert!(!j.is_semisimple());
        let d = qm(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -1]]);
        assert_eq!(d.minimal_polynomial(), vec![q(-2), q(-1), q(1)]);
        assert!(d.is_semisimple());
        assert!(QMatrix::zeros(2, 2).is_semisimple());
        assert!(QMatrix::identity(3).minimal_polynomial()[1].is_one());
    }
}
