//! The free braided Hopf algebra `C⟨x_i⟩`, its graded dual `C⟨y^i⟩`, the braided
//! tensor product and the multiplicative coproduct.
//!
//! Dual words are stored exactly as written: `y^{i_m…i_1}` is the word
//! `[i_m, …, i_1]`, and a product `y^{a_1}⋯y^{a_m}` in `T(V*)` is `[a_1, …, a_m]`.
//! The plain pairing of a stored dual word `u` with `x_K` is `δ(rev u, K)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::Combinatorics;
use crate::error::{Error, Result};
use crate::scalar::RationalFunction;
use crate::tensor::{display_word, word_index, GradedOperator, RMatrix, Word};

type RF = RationalFunction;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, RF>, key: K, value: RF) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// A finite linear combination of words; `dual` marks elements of `C⟨y^i⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeElement {
    dim: usize,
    dual: bool,
    terms: BTreeMap<Word, RF>,
}

impl FreeElement {
    pub fn zero(dim: usize, dual: bool) -> Self {
        Self {
            dim,
            dual,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize, dual: bool) -> Self {
        Self::monomial(dim, dual, Vec::new(), RF::one())
    }

    pub fn monomial(dim: usize, dual: bool, word: Word, coeff: RF) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, word, coeff);
        Self { dim, dual, terms }
    }

    pub fn word(dim: usize, word: &[usize]) -> Self {
        Self::monomial(dim, false, word.to_vec(), RF::one())
    }

    pub fn dual_word(dim: usize, word: &[usize]) -> Self {
        Self::monomial(dim, true, word.to_vec(), RF::one())
    }

    /// Builds an element, rejecting letters outside `0..dim`.
    pub fn from_terms(dim: usize, dual: bool, terms: impl IntoIterator<Item = (Word, RF)>) -> Result<Self> {
        let mut out = Self::zero(dim, dual);
        for (w, c) in terms {
            if let Some(&bad) = w.iter().find(|&&l| l >= dim) {
                return Err(Error::InvalidInput(format!(
                    "letter {} out of range for dim {dim}",
                    bad + 1
                )));
            }
            accumulate(&mut out.terms, w, c);
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, RF> {
        &self.terms
    }

    pub fn coeff(&self, word: &[usize]) -> RF {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Longest word length present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn homogeneous_part(&self, m: usize) -> Self {
        Self {
            dim: self.dim,
            dual: self.dual,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Counit: the coefficient of the empty word.
    pub fn counit(&self) -> RF {
        self.coeff(&[])
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "elements over dim {} and {}",
                self.dim, other.dim
            )));
        }
        if self.dual != other.dual {
            return Err(Error::InvalidInput("cannot combine primal and dual elements".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RF::from_int(-1)))
    }

    pub fn scale(&self, s: &RF) -> Self {
        let mut out = Self::zero(self.dim, self.dual);
        for (w, c) in &self.terms {
            accumulate(&mut out.terms, w.clone(), c * s);
        }
        out
    }

    /// Concatenation product, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = Self::zero(self.dim, self.dual);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                accumulate(&mut out.terms, w, a * b);
            }
        }
        Ok(out)
    }

    /// Coefficient vector of the degree-`m` part in composite-index order.
    pub fn to_vector(&self, m: usize) -> Vec<RF> {
        let mut v = vec![RF::zero(); self.dim.pow(m as u32)];
        for (w, c) in &self.terms {
            if w.len() == m {
                v[word_index(w, self.dim)] = c.clone();
            }
        }
        v
    }

    pub fn from_vector(dim: usize, dual: bool, m: usize, v: &[RF]) -> Self {
        let mut out = Self::zero(dim, dual);
        for (idx, c) in v.iter().enumerate() {
            accumulate(&mut out.terms, crate::tensor::index_word(idx, dim, m), c.clone());
        }
        out
    }
}

fn fmt_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a RF)>) -> fmt::Result {
    let mut first = true;
    for (basis, c) in terms {
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        if c.is_one() {
            f.write_str(&basis)?;
        } else {
            write!(f, "({c})*{basis}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn basis_name(word: &[usize], dual: bool) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        format!("{}{}", if dual { "y" } else { "x" }, display_word(word))
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(w, c)| (basis_name(w, self.dual), c)))
    }
}

/// An element of `B⊗B` as a combination of word pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    dim: usize,
    terms: BTreeMap<(Word, Word), RF>,
}

impl TensorElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(dim: usize, left: Word, right: Word, coeff: RF) -> Self {
        let mut out = Self::zero(dim);
        accumulate(&mut out.terms, (left, right), coeff);
        out
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = ((Word, Word), RF)>) -> Self {
        let mut out = Self::zero(dim);
        for (k, c) in terms {
            accumulate(&mut out.terms, k, c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), RF> {
        &self.terms
    }

    pub fn coeff(&self, left: &[usize], right: &[usize]) -> RF {
        self.terms
            .get(&(left.to_vec(), right.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "tensors over dim {} and {}",
                self.dim, other.dim
            )));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &RF) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(k, c)| (k.clone(), c * s)))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms
                .iter()
                .map(|((l, r), c)| (format!("{}⊗{}", basis_name(l, false), basis_name(r, false)), c)),
        )
    }
}

/// The braiding `Ψ` extended to pairs of words by iterated adjacent braidings.
#[derive(Clone, Debug)]
pub struct WordBraiding {
    dim: usize,
    table: crate::tensor::BraidTable,
}

impl WordBraiding {
    pub fn new(r: &RMatrix) -> Self {
        Self {
            dim: r.dim(),
            table: r.braid_table(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Applies `Ψ` in slots `k, k+1` (0-based `k`) to a combination of words.
    fn apply_at(&self, state: BTreeMap<Word, RF>, k: usize) -> BTreeMap<Word, RF> {
        let mut next = BTreeMap::new();
        for (w, c) in state {
            for (a, b, coeff) in &self.table[w[k] * self.dim + w[k + 1]] {
                let mut nw = w.clone();
                nw[k] = *a;
                nw[k + 1] = *b;
                accumulate(&mut next, nw, &c * coeff);
            }
        }
        next
    }

    /// `Ψ(u⊗v) = Σ v'⊗u'`, returned as `(v', u', coefficient)`.
    pub fn braid(&self, u: &[usize], v: &[usize]) -> Vec<(Word, Word, RF)> {
        let p = u.len();
        let mut word = u.to_vec();
        word.extend_from_slice(v);
        let mut state: BTreeMap<Word, RF> = [(word, RF::one())].into_iter().collect();
        // move each letter of v leftwards across all of u
        for t in 0..v.len() {
            for k in (t..p + t).rev() {
                state = self.apply_at(state, k);
            }
        }
        state
            .into_iter()
            .map(|(w, c)| (w[..v.len()].to_vec(), w[v.len()..].to_vec(), c))
            .collect()
    }

    /// Braided tensor product `(a⊗b)(c⊗d) = a Ψ(b⊗c) d`.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        if x.dim != self.dim || y.dim != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "tensor product over dim {} with operands over dims {} and {}",
                self.dim, x.dim, y.dim
            )));
        }
        let mut out = TensorElement::zero(self.dim);
        for ((a, b), s) in &x.terms {
            for ((c, d), t) in &y.terms {
                let st = s * t;
                for (c2, b2, coeff) in self.braid(b, c) {
                    let mut left = a.clone();
                    left.extend_from_slice(&c2);
                    let mut right = b2;
                    right.extend_from_slice(d);
                    accumulate(&mut out.terms, (left, right), &st * &coeff);
                }
            }
        }
        Ok(out)
    }

    /// `Δ(x_i) = x_i⊗1 + 1⊗x_i`, extended as an algebra map into the braided tensor product.
    pub fn coproduct_word(&self, word: &[usize]) -> TensorElement {
        let mut acc = TensorElement::pure(self.dim, Vec::new(), Vec::new(), RF::one());
        for &l in word {
            let gen = TensorElement::from_terms(
                self.dim,
                [((vec![l], vec![]), RF::one()), ((vec![], vec![l]), RF::one())],
            );
            acc = self.tensor_multiply(&acc, &gen).expect("same dim");
        }
        acc
    }

    pub fn coproduct(&self, f: &FreeElement) -> Result<TensorElement> {
        if f.dual {
            return Err(Error::InvalidInput("coproduct expects a primal element".into()));
        }
        if f.dim != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element over dim {}, braiding over dim {}",
                f.dim, self.dim
            )));
        }
        let mut out = TensorElement::zero(self.dim);
        for (w, c) in &f.terms {
            out = out.add(&self.coproduct_word(w).scale(c))?;
        }
        Ok(out)
    }

    /// `[m r;R]` read off from the multiplicative coproduct of every degree-`m` word.
    pub fn coproduct_binomial(&self, m: usize, r: usize) -> Result<GradedOperator> {
        if r > m {
            return Err(Error::InvalidInput(format!("binomial needs r <= m, got r={r}, m={m}")));
        }
        let side = self.dim.pow(m as u32);
        let mut mat = crate::linalg::Matrix::zeros(side, side);
        for col in 0..side {
            let word = crate::tensor::index_word(col, self.dim, m);
            for ((left, right), c) in self.coproduct_word(&word).terms {
                if left.len() == r {
                    let mut full = left;
                    full.extend_from_slice(&right);
                    mat.set(word_index(&full, self.dim), col, c);
                }
            }
        }
        GradedOperator::new(self.dim, m, mat)
    }

    /// `(Δ⊗id)Δ = (id⊗Δ)Δ` on one word, compared as triples of words.
    pub fn coassociative_on(&self, word: &[usize]) -> bool {
        let delta = self.coproduct_word(word);
        let mut lhs: BTreeMap<(Word, Word, Word), RF> = BTreeMap::new();
        let mut rhs: BTreeMap<(Word, Word, Word), RF> = BTreeMap::new();
        for ((a, b), c) in delta.terms() {
            for ((a1, a2), c1) in self.coproduct_word(a).terms {
                accumulate(&mut lhs, (a1, a2, b.clone()), c * &c1);
            }
            for ((b1, b2), c2) in self.coproduct_word(b).terms {
                accumulate(&mut rhs, (a.clone(), b1, b2), c * &c2);
            }
        }
        lhs == rhs
    }
}

/// True iff `Δ(x_I) = Σ_r Σ_J [m r;R]^J_I x_{J_1..J_r}⊗x_{J_{r+1}..J_m}` for the
/// given word, with the binomials taken from the combinatorics recursion.
pub fn binomial_formula_check(word: &[usize], comb: &Combinatorics) -> Result<bool> {
    let n = comb.dim();
    let braiding = WordBraiding::new(comb.rmatrix());
    let m = word.len();
    let col = word_index(word, n);
    let mut expected = TensorElement::zero(n);
    for r in 0..=m {
        let b = comb.binomial(m, r)?;
        for (full, c) in b.apply_to_word(word) {
            debug_assert_eq!(word_index(word, n), col);
            let (l, rt) = full.split_at(r);
            expected = expected.add(&TensorElement::pure(n, l.to_vec(), rt.to_vec(), c))?;
        }
    }
    Ok(braiding.coproduct_word(word) == expected)
}

fn require_dual(f: &FreeElement) -> Result<()> {
    if !f.dual {
        return Err(Error::InvalidInput("expected a dual (y) element".into()));
    }
    Ok(())
}

/// Quantum shuffle product: `y^{i_m…i_{r+1}} · y^{i_r…i_1} = [m r;R]^{I}_{J} y^{j_m…j_1}`.
pub fn shuffle_product(f: &FreeElement, g: &FreeElement, comb: &Combinatorics) -> Result<FreeElement> {
    require_dual(f)?;
    require_dual(g)?;
    f.check_same_space(g)?;
    let n = comb.dim();
    let mut out = FreeElement::zero(n, true);
    for (a, s) in &f.terms {
        for (b, t) in &g.terms {
            let m = a.len() + b.len();
            let mut upper: Word = a.iter().chain(b).copied().collect();
            upper.reverse();
            if m == 0 {
                accumulate(&mut out.terms, Vec::new(), s * t);
                continue;
            }
            let binom = comb.binomial(m, b.len())?;
            let row = word_index(&upper, n);
            let st = s * t;
            for (col, c) in binom.matrix().row(row).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut lower = crate::tensor::index_word(col, n, m);
                lower.reverse();
                accumulate(&mut out.terms, lower, &st * c);
            }
        }
    }
    Ok(out)
}

/// `π(y^{i_m}⋯y^{i_1}) = [m;R]!^{i_1⋯i_m}_{j_1⋯j_m} y^{j_m⋯j_1}`, degreewise.
pub fn pi_map(f: &FreeElement, comb: &Combinatorics) -> Result<FreeElement> {
    require_dual(f)?;
    let n = comb.dim();
    let mut out = FreeElement::zero(n, true);
    for (u, s) in &f.terms {
        let m = u.len();
        if m == 0 {
            accumulate(&mut out.terms, Vec::new(), s.clone());
            continue;
        }
        let fact = comb.factorial(m)?;
        let mut upper = u.clone();
        upper.reverse();
        let row = word_index(&upper, n);
        for (col, c) in fact.matrix().row(row).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut lower = crate::tensor::index_word(col, n, m);
            lower.reverse();
            accumulate(&mut out.terms, lower, s * c);
        }
    }
    Ok(out)
}
