//! Exact scalars: Laurent polynomials and the rational function field Q(q),
//! plus the scalar q-integers, q-factorials and q-binomials.

mod laurent;
mod parse;
pub(crate) mod poly;
mod ratfunc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use laurent::LaurentPoly;
pub use parse::parse_scalar;
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rationals, the ground field of the Lie layer.
pub type Rational = BigRational;

/// The operations Gaussian elimination needs from a coefficient field.
pub trait Field: Clone + PartialEq + std::fmt::Debug + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Caller guarantees `other` is nonzero.
    fn over(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Pivot cost; smaller is preferred.
    fn complexity(&self) -> usize;
}

macro_rules! impl_field {
    ($t:ty, $cost:expr) => {
        impl Field for $t {
            fn plus(&self, other: &Self) -> Self {
                self + other
            }
            fn minus(&self, other: &Self) -> Self {
                self - other
            }
            fn times(&self, other: &Self) -> Self {
                self * other
            }
            fn over(&self, other: &Self) -> Self {
                self / other
            }
            fn negated(&self) -> Self {
                -self
            }
            fn complexity(&self) -> usize {
                $cost(self)
            }
        }
    };
}

impl_field!(RationalFunction, RationalFunction::complexity);
impl_field!(BigRational, |x: &BigRational| {
    (x.numer().bits() + x.denom().bits()) as usize + usize::from(x.is_negative())
});

/// `[m]_q = 1 + q + ... + q^{m-1}`; `[0]_q = 0`.
pub fn q_integer(m: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..m as i64).map(|e| (e, BigRational::one())))
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: u32) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, k| &acc * &q_integer(k))
}

/// Gaussian binomial `[m]_q! / ([r]_q! [m-r]_q!)`, or `None` when `r > m`.
pub fn q_binomial(m: u32, r: u32) -> Option<RationalFunction> {
    if r > m {
        return None;
    }
    let num = q_factorial(m);
    let den = &q_factorial(r) * &q_factorial(m - r);
    RationalFunction::new(num, den).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn q_numbers() {
        assert!(q_integer(1).is_one());
        assert_eq!(q_factorial(3).to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(q_binomial(2, 1).unwrap().to_string(), "1 + q");
        assert!(q_binomial(2, 3).is_none());
    }

    #[test]
    fn q_binomials_are_laurent_polynomials() {
        for m in 0..=12 {
            for r in 0..=m {
                let b = q_binomial(m, r).unwrap();
                assert!(b.as_laurent().is_some(), "[{m} choose {r}]_q = {b}");
                // q = 1 gives the ordinary binomial
                let at_one = b.evaluate_at(&BigRational::one()).unwrap();
                let classical: u64 = (1..=r as u64).fold(1, |acc, k| acc * (m as u64 + 1 - k) / k);
                assert_eq!(at_one, BigRational::from_integer(classical.into()));
            }
        }
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..4, -4i64..5), 0..4).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into()))))
        })
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_laurent(), arb_laurent()).prop_map(|(n, d)| {
            if d.is_zero() {
                RationalFunction::from_laurent(n)
            } else {
                RationalFunction::new(n, d).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a - &a, RationalFunction::zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_form_idempotent(a in arb_rf()) {
            let again = RationalFunction::new(a.numerator().clone(), a.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            let reparsed: RationalFunction = a.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, a);
        }
    }
}
