//! Braided integers, factorials and binomials as operators on `V^{⊗m}`.
//!
//! `Ψ_k` denotes the braiding acting in slots `k, k+1` (1-based) and `A∘B`
//! applies `B` first. With that reading `Ψ_1∘Ψ_2∘…∘Ψ_k` moves the letter in
//! slot `k+1` to the front, and `Ψ_{m-1}∘…∘Ψ_k` moves the letter in slot `k`
//! to the end.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::tensor::{GradedOperator, RMatrix};

fn ensure_checked(r: &RMatrix) -> Result<()> {
    if r.is_checked() {
        return Ok(());
    }
    r.clone().checked().map(|_| ())
}

fn degree_at_least_one(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    Ok(())
}

/// `Ψ_k` on `m` slots.
fn psi_at(psi: &GradedOperator, k: usize, m: usize) -> GradedOperator {
    GradedOperator::embed_at(psi, k, m).expect("slot in range")
}

/// `Ψ_from ∘ Ψ_{from+1} ∘ … ∘ Ψ_to` on `m` slots (identity when `from > to`).
fn psi_chain_up(psi: &GradedOperator, from: usize, to: usize, m: usize) -> GradedOperator {
    (from..=to).fold(GradedOperator::identity(psi.dim(), m), |acc, k| {
        acc.compose(&psi_at(psi, k, m)).expect("same shape")
    })
}

/// `Ψ_to ∘ Ψ_{to-1} ∘ … ∘ Ψ_from` on `m` slots (identity when `from > to`).
fn psi_chain_down(psi: &GradedOperator, from: usize, to: usize, m: usize) -> GradedOperator {
    (from..=to).fold(GradedOperator::identity(psi.dim(), m), |acc, k| {
        psi_at(psi, k, m).compose(&acc).expect("same shape")
    })
}

/// `[m;R]` by the defining series `id + Ψ_1 + Ψ_1Ψ_2 + … + Ψ_1⋯Ψ_{m-1}`.
pub fn braided_integer_series(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    degree_at_least_one(m)?;
    ensure_checked(r)?;
    let psi = r.braiding();
    let mut total = GradedOperator::zero(r.dim(), m);
    for k in 0..m {
        total = total.add(&psi_chain_up(&psi, 1, k, m))?;
    }
    Ok(total)
}

/// `[m;R]` via `[m;R] = id + Ψ_1∘(id⊗[m-1;R])`.
pub fn braided_integer(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    ensure_checked(r)?;
    integer_unchecked(m, r)
}

fn integer_unchecked(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    degree_at_least_one(m)?;
    let psi = r.braiding();
    let mut cur = GradedOperator::identity(r.dim(), 1);
    for k in 2..=m {
        let shifted = cur.tensor_id(1, 0);
        cur = GradedOperator::identity(r.dim(), k).add(&psi_at(&psi, 1, k).compose(&shifted)?)?;
    }
    Ok(cur)
}

/// Mirror braided integer `Σ_k Ψ_{m-1}∘…∘Ψ_k`, which moves each letter to the end.
pub fn braided_integer_right(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    ensure_checked(r)?;
    integer_right_unchecked(m, r)
}

fn integer_right_unchecked(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    degree_at_least_one(m)?;
    let psi = r.braiding();
    let mut total = GradedOperator::zero(r.dim(), m);
    for k in 1..=m {
        total = total.add(&psi_chain_down(&psi, k, m - 1, m))?;
    }
    Ok(total)
}

/// `[m;R]! = (id⊗[m-1;R]!)∘[m;R]`, `[1;R]! = id`.
pub fn braided_factorial(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    degree_at_least_one(m)?;
    let mut fact = GradedOperator::identity(r.dim(), 1);
    for k in 2..=m {
        fact = fact.tensor_id(1, 0).compose(&braided_integer(k, r)?)?;
    }
    Ok(fact)
}

/// The same factorial built from the mirror integers: `([m-1;R]!⊗id)∘[m;R]_right`.
pub fn braided_factorial_right(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    degree_at_least_one(m)?;
    let mut fact = GradedOperator::identity(r.dim(), 1);
    for k in 2..=m {
        fact = fact.tensor_id(0, 1).compose(&braided_integer_right(k, r)?)?;
    }
    Ok(fact)
}

pub fn braided_factorial_inverse(m: usize, r: &RMatrix) -> Result<GradedOperator> {
    let fact = braided_factorial(m, r)?;
    fact.inverse().ok_or_else(|| Error::Singular {
        degree: m,
        kernel_dim: fact.side() - fact.rank_over_field(),
    })
}

/// `[m r;R]`, with `Δ(x_I) = Σ_r Σ_J [m r;R]^J_I x_{J_1..J_r} ⊗ x_{J_{r+1}..J_m}`.
///
/// Computed by the recursion
/// `[m r] = [m-1 r]⊗id + (Ψ_r∘Ψ_{r+1}∘…∘Ψ_{m-1})∘([m-1 r-1]⊗id)`,
/// which splits on whether the last letter lands in the right or left factor.
pub fn braided_binomial(m: usize, r_split: usize, r: &RMatrix) -> Result<GradedOperator> {
    if r_split > m {
        return Err(Error::InvalidInput(format!(
            "binomial needs r <= m, got r={r_split}, m={m}"
        )));
    }
    ensure_checked(r)?;
    binomial_unchecked(m, r_split, r)
}

fn binomial_unchecked(m: usize, r_split: usize, r: &RMatrix) -> Result<GradedOperator> {
    if r_split > m {
        return Err(Error::InvalidInput(format!(
            "binomial needs r <= m, got r={r_split}, m={m}"
        )));
    }
    let psi = r.braiding();
    binomial_rec(m, r_split, &psi, &mut BTreeMap::new())
}

fn binomial_rec(
    m: usize,
    s: usize,
    psi: &GradedOperator,
    memo: &mut BTreeMap<(usize, usize), GradedOperator>,
) -> Result<GradedOperator> {
    if s == 0 || s == m {
        return Ok(GradedOperator::identity(psi.dim(), m));
    }
    if let Some(op) = memo.get(&(m, s)) {
        return Ok(op.clone());
    }
    let stay = binomial_rec(m - 1, s, psi, memo)?.tensor_id(0, 1);
    let moved = binomial_rec(m - 1, s - 1, psi, memo)?.tensor_id(0, 1);
    let out = stay.add(&psi_chain_up(psi, s, m - 1, m).compose(&moved)?)?;
    memo.insert((m, s), out.clone());
    Ok(out)
}

/// Memoized combinatorics for one R-matrix. Readers share the cache; each
/// missing entry is computed outside the lock and inserted under a write lock.
#[derive(Debug)]
pub struct Combinatorics {
    r: RMatrix,
    cache: RwLock<Cache>,
}

#[derive(Debug, Default)]
struct Cache {
    integers: BTreeMap<usize, Arc<GradedOperator>>,
    integers_right: BTreeMap<usize, Arc<GradedOperator>>,
    factorials: BTreeMap<usize, Arc<GradedOperator>>,
    binomials: BTreeMap<(usize, usize), Arc<GradedOperator>>,
}

impl Combinatorics {
    pub fn new(r: RMatrix) -> Result<Self> {
        let r = if r.is_checked() { r } else { r.checked()? };
        Ok(Self {
            r,
            cache: RwLock::new(Cache::default()),
        })
    }

    /// Skips the Yang-Baxter check; identities that rely on it may then fail.
    pub fn unchecked(r: RMatrix) -> Self {
        Self {
            r,
            cache: RwLock::new(Cache::default()),
        }
    }

    pub fn rmatrix(&self) -> &RMatrix {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.r.dim()
    }

    fn cached<K: Ord + Copy>(
        &self,
        key: K,
        slot: fn(&Cache) -> &BTreeMap<K, Arc<GradedOperator>>,
        slot_mut: fn(&mut Cache) -> &mut BTreeMap<K, Arc<GradedOperator>>,
        compute: impl FnOnce() -> Result<GradedOperator>,
    ) -> Result<Arc<GradedOperator>> {
        if let Some(v) = slot(&self.cache.read().expect("cache lock poisoned")).get(&key) {
            return Ok(Arc::clone(v));
        }
        let value = Arc::new(compute()?);
        let mut guard = self.cache.write().expect("cache lock poisoned");
        Ok(Arc::clone(slot_mut(&mut guard).entry(key).or_insert(value)))
    }

    pub fn integer(&self, m: usize) -> Result<Arc<GradedOperator>> {
        self.cached(
            m,
            |c| &c.integers,
            |c| &mut c.integers,
            || integer_unchecked(m, &self.r),
        )
    }

    pub fn integer_right(&self, m: usize) -> Result<Arc<GradedOperator>> {
        self.cached(
            m,
            |c| &c.integers_right,
            |c| &mut c.integers_right,
            || integer_right_unchecked(m, &self.r),
        )
    }

    pub fn factorial(&self, m: usize) -> Result<Arc<GradedOperator>> {
        if m <= 1 {
            return Ok(Arc::new(GradedOperator::identity(self.dim(), m)));
        }
        self.cached(
            m,
            |c| &c.factorials,
            |c| &mut c.factorials,
            || {
                let prev = self.factorial(m - 1)?;
                let int = self.integer(m)?;
                prev.tensor_id(1, 0).compose(&int)
            },
        )
    }

    pub fn factorial_inverse(&self, m: usize) -> Result<GradedOperator> {
        let fact = self.factorial(m)?;
        fact.inverse().ok_or_else(|| Error::Singular {
            degree: m,
            kernel_dim: fact.side() - fact.rank_over_field(),
        })
    }

    pub fn binomial(&self, m: usize, s: usize) -> Result<Arc<GradedOperator>> {
        self.cached(
            (m, s),
            |c| &c.binomials,
            |c| &mut c.binomials,
            || binomial_unchecked(m, s, &self.r),
        )
    }
}
