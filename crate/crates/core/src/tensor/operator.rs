use num_rational::BigRational;

use super::{index_word, word_index, Word};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, QMatrix};
use crate::scalar::RationalFunction;

/// An operator on the degree-`m` component `V^{⊗m}`, `dim V = n`,
/// as an `n^m × n^m` matrix over Q(q).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedOperator {
    dim: usize,
    degree: usize,
    matrix: Matrix<RationalFunction>,
}

impl GradedOperator {
    pub fn new(dim: usize, degree: usize, matrix: Matrix<RationalFunction>) -> Result<Self> {
        let side = dim.pow(degree as u32);
        if matrix.rows() != side || matrix.cols() != side {
            return Err(Error::DimensionMismatch(format!(
                "operator on degree {degree} over dim {dim} needs side {side}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { dim, degree, matrix })
    }

    pub fn identity(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            matrix: Matrix::identity(dim.pow(degree as u32)),
        }
    }

    pub fn zero(dim: usize, degree: usize) -> Self {
        let side = dim.pow(degree as u32);
        Self {
            dim,
            degree,
            matrix: Matrix::zeros(side, side),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn side(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<RationalFunction> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<RationalFunction> {
        self.matrix
    }

    /// Entry `[row_word, col_word]`: coefficient of `row_word` in the image of `col_word`.
    pub fn entry(&self, row: &[usize], col: &[usize]) -> &RationalFunction {
        self.matrix.get(word_index(row, self.dim), word_index(col, self.dim))
    }

    /// Image of a basis word, as `(word, coefficient)` pairs.
    pub fn apply_to_word(&self, col: &[usize]) -> Vec<(Word, RationalFunction)> {
        let j = word_index(col, self.dim);
        (0..self.side())
            .filter_map(|i| {
                let v = self.matrix.get(i, j);
                (!v.is_zero()).then(|| (index_word(i, self.dim, self.degree), v.clone()))
            })
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.degree != other.degree {
            return Err(Error::DimensionMismatch(format!(
                "operators on (dim {}, degree {}) and (dim {}, degree {})",
                self.dim, self.degree, other.dim, other.degree
            )));
        }
        Ok(())
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            dim: self.dim,
            degree: self.degree,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            dim: self.dim,
            degree: self.degree,
            matrix: self.matrix.plus(&other.matrix),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            dim: self.dim,
            degree: self.degree,
            matrix: self.matrix.minus(&other.matrix),
        })
    }

    /// `id^{⊗left} ⊗ self ⊗ id^{⊗right}`.
    pub fn tensor_id(&self, left: usize, right: usize) -> Self {
        let n = self.dim;
        let lside = n.pow(left as u32);
        let rside = n.pow(right as u32);
        let inner = self.side();
        let side = lside * inner * rside;
        let mut out = Matrix::zeros(side, side);
        for (a, row) in self.matrix.sparse_rows().into_iter().enumerate() {
            for (b, v) in row {
                for l in 0..lside {
                    for r in 0..rside {
                        out.set((l * inner + a) * rside + r, (l * inner + b) * rside + r, v.clone());
                    }
                }
            }
        }
        Self {
            dim: n,
            degree: left + self.degree + right,
            matrix: out,
        }
    }

    /// Place a two-site operator on slots `k, k+1` (1-based) of `m` slots.
    pub fn embed_at(two_site: &Self, k: usize, m: usize) -> Result<Self> {
        if two_site.degree != 2 {
            return Err(Error::DimensionMismatch(format!(
                "embed_at expects a degree-2 operator, got degree {}",
                two_site.degree
            )));
        }
        if k < 1 || k + 1 > m {
            return Err(Error::DimensionMismatch(format!(
                "slot {k} out of range for degree {m}"
            )));
        }
        Ok(two_site.tensor_id(k - 1, m - k - 1))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.side())
    }

    pub fn rank_over_field(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<RationalFunction>> {
        self.matrix.kernel_basis()
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(|matrix| Self {
            dim: self.dim,
            degree: self.degree,
            matrix,
        })
    }

    /// Specialize every entry at `q = q0`.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<QMatrix> {
        self.matrix.try_map(|e| e.evaluate_at(q0))
    }
}
