use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, DensePoly};
use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with rational coefficients, stored sparsely.
/// No stored coefficient is ever zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `c * q^exp`
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// Single term `c q^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Dense coefficients of `q^{-min_exp} * self`, together with `min_exp`.
    pub(crate) fn to_dense(&self) -> (DensePoly, i64) {
        let Some(lo) = self.min_exp() else {
            return (Vec::new(), 0);
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut out = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (out, lo)
    }

    pub(crate) fn from_dense(p: &DensePoly, shift: i64) -> Self {
        Self::from_terms(p.iter().enumerate().map(|(k, c)| (k as i64 + shift, c.clone())))
    }

    /// Exact division by a nonzero Laurent polynomial, when the quotient is a Laurent polynomial.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if let Some((e, c)) = other.as_monomial() {
            return Some(self.shift(-e).scale(&c.recip()));
        }
        let (a, sa) = self.to_dense();
        let (b, sb) = other.to_dense();
        let (q, r) = poly::div_rem(&a, &b);
        if r.is_empty() {
            Some(Self::from_dense(&q, sa - sb))
        } else {
            None
        }
    }

    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::Pole { at: "0".into() });
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(q0, *e);
        }
        Ok(acc)
    }

    /// Rational content scaled so the result has coprime integer coefficients.
    /// Returns the factor `s` with `self * s` primitive and leading coefficient positive.
    pub(crate) fn primitive_scale(&self) -> BigRational {
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::Integer::gcd(&num_gcd, &n);
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let mut s = BigRational::new(den_lcm, num_gcd);
        if self.leading_coeff().is_some_and(|c| c.is_negative()) {
            s = -s;
        }
        s
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing powers of `q`, e.g. `-q^-1 + 3/2 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match *e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{e}")),
            };
            match mono {
                None => write!(f, "{abs}")?,
                Some(m) if abs.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_orders_by_exponent() {
        let p = LaurentPoly::from_terms([
            (2, BigRational::from_integer(1.into())),
            (-1, BigRational::from_integer((-1).into())),
            (0, BigRational::new(3.into(), 2.into())),
        ]);
        assert_eq!(p.to_string(), "-q^-1 + 3/2 + q^2");
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly::q_pow(1);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn exact_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::one();
        let quo = num.div_exact(&den).unwrap();
        assert_eq!(quo, &LaurentPoly::q_pow(1) + &LaurentPoly::one());
        assert!(LaurentPoly::one().div_exact(&den).is_none());
    }

    #[test]
    fn negative_power_at_zero_is_pole() {
        let p = LaurentPoly::q_pow(-2);
        assert!(p.evaluate(&BigRational::zero()).is_err());
        assert_eq!(
            p.evaluate(&BigRational::from_integer(2.into())).unwrap(),
            BigRational::new(1.into(), 4.into())
        );
    }
}
