//! Dense univariate polynomials over Q, stored little-endian. Only the
//! handful of routines needed for gcd reduction and minimal polynomials.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type DensePoly = Vec<BigRational>;

pub fn trim(p: &mut DensePoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &DensePoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Euclidean division, `a = q*b + r`. Panics if `b` is zero.
pub fn div_rem(a: &DensePoly, b: &DensePoly) -> (DensePoly, DensePoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                let t = &c * bk;
                rem[shift + k] -= t;
            }
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn make_monic(p: &mut DensePoly) {
    trim(p);
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

/// Monic gcd. `gcd(0, 0)` is the zero polynomial.
pub fn gcd(a: &DensePoly, b: &DensePoly) -> DensePoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
        make_monic(&mut y);
    }
    make_monic(&mut x);
    x
}

pub fn derivative(p: &DensePoly) -> DensePoly {
    let mut out: DensePoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(k.into()))
        .collect();
    trim(&mut out);
    out
}

/// True when `p` has no repeated factor over Q (and hence none over its splitting field).
pub fn is_squarefree(p: &DensePoly) -> bool {
    let g = gcd(p, &derivative(p));
    degree(&g) == Some(0)
}

pub fn format_in(p: &DensePoly, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigRational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> DensePoly {
        cs.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q-1)(q+1) and (q-1)(q+2)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-2, 1, 1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn division_is_exact() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = div_rem(&a, &b);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&p(&[-1, 0, 1])));
        assert!(!is_squarefree(&p(&[1, 2, 1])));
        assert_eq!(format_in(&p(&[1, -2, 1]), "t"), "t^2 - 2*t + 1");
    }
}
