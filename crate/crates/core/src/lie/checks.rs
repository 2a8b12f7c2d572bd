use std::fmt;

use serde::Serialize;

use super::algebra::{basis_vector, cybe, Cobracket, LieAlgebra, LieBialgebra, Tensor2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Named pass/fail results; failures carry the first violating component.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<20} {}", c.name, if c.passed { "ok" } else { "FAILED" })?;
            if let Some(d) = &c.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn jacobi_detail(alg: &LieAlgebra) -> Option<String> {
    alg.jacobi_failure().map(|(i, j, k)| {
        let l = alg.labels();
        format!("Jacobi fails on ({}, {}, {})", l[i], l[j], l[k])
    })
}

pub(crate) fn co_antisymmetry_detail(alg: &LieAlgebra, delta: &Cobracket) -> Option<String> {
    delta
        .co_antisymmetry_failure()
        .map(|i| format!("δ({}) is not antisymmetric", alg.labels()[i]))
}

pub(crate) fn co_jacobi_detail(alg: &LieAlgebra, delta: &Cobracket) -> Option<String> {
    delta
        .co_jacobi_failure()
        .map(|i| format!("co-Jacobi fails on {}", alg.labels()[i]))
}

/// `δ[x,y] = ad_x δy - ad_y δx` on basis pairs.
pub(crate) fn cocycle_detail(alg: &LieAlgebra, delta: &Cobracket) -> Option<String> {
    let d = alg.dim();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = delta.apply(alg.bracket_basis(i, j));
            let rhs = alg
                .ad2(&basis_vector(d, i), delta.image(j))
                .minus(&alg.ad2(&basis_vector(d, j), delta.image(i)));
            if lhs != rhs {
                let l = alg.labels();
                return Some(format!(
                    "δ[{0},{1}] = {2}, ad_{0}δ{1} - ad_{1}δ{0} = {3}",
                    l[i],
                    l[j],
                    alg.format_tensor(&lhs),
                    alg.format_tensor(&rhs)
                ));
            }
        }
    }
    None
}

fn dims_detail(alg: &LieAlgebra, delta: &Cobracket, r: Option<&Tensor2>) -> Option<String> {
    let d = alg.dim();
    if delta.dim() != d {
        return Some(format!("cobracket has dim {}, algebra has dim {d}", delta.dim()));
    }
    if let Some(r) = r {
        if r.rows() != d || r.cols() != d {
            return Some(format!("r is {}x{}, algebra has dim {d}", r.rows(), r.cols()));
        }
    }
    None
}

/// Jacobi, co-antisymmetry, co-Jacobi and the cocycle condition.
pub fn check_bialgebra(b: &LieBialgebra) -> CheckReport {
    let mut rep = CheckReport::default();
    if let Some(msg) = dims_detail(&b.algebra, &b.cobracket, None) {
        rep.push("dimensions", Some(msg));
        return rep;
    }
    rep.push("jacobi", jacobi_detail(&b.algebra));
    rep.push("co_antisymmetry", co_antisymmetry_detail(&b.algebra, &b.cobracket));
    rep.push("co_jacobi", co_jacobi_detail(&b.algebra, &b.cobracket));
    rep.push("cocycle", cocycle_detail(&b.algebra, &b.cobracket));
    rep
}

/// Full quasitriangular report: the bialgebra checks plus CYBE for `r`,
/// `δx = [x⊗1 + 1⊗x, r]`, and ad-invariance of `r + τr`.
pub fn check_quasitriangular(alg: &LieAlgebra, delta: &Cobracket, r: &Tensor2) -> CheckReport {
    let mut rep = CheckReport::default();
    if let Some(msg) = dims_detail(alg, delta, Some(r)) {
        rep.push("dimensions", Some(msg));
        return rep;
    }
    let l = alg.labels();
    rep.push("jacobi", jacobi_detail(alg));
    rep.push("co_antisymmetry", co_antisymmetry_detail(alg, delta));
    rep.push("co_jacobi", co_jacobi_detail(alg, delta));
    rep.push("cocycle", cocycle_detail(alg, delta));
    rep.push(
        "cybe",
        cybe(alg, r)
            .first_nonzero()
            .map(|([i, j, k], v)| format!("CYBE component {}⊗{}⊗{} = {v}", l[i], l[j], l[k])),
    );
    let co = Cobracket::coboundary(alg, r);
    rep.push(
        "coboundary",
        (0..alg.dim()).find(|&i| co.image(i) != delta.image(i)).map(|i| {
            format!(
                "δ({}) = {}, but [x⊗1+1⊗x, r] = {}",
                l[i],
                alg.format_tensor(delta.image(i)),
                alg.format_tensor(co.image(i))
            )
        }),
    );
    let sym = r.plus(&r.transpose());
    rep.push(
        "invariance",
        (0..alg.dim())
            .find(|&i| !alg.ad2(&basis_vector(alg.dim(), i), &sym).is_zero())
            .map(|i| format!("r + τr is not invariant under ad_{}", l[i])),
    );
    rep
}

/// Runs [`check_quasitriangular`] when `r` is present, otherwise [`check_bialgebra`].
pub fn check_lie_bialgebra(b: &LieBialgebra) -> CheckReport {
    match &b.r {
        Some(r) => check_quasitriangular(&b.algebra, &b.cobracket, r),
        None => check_bialgebra(b),
    }
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{q, sl2_standard_r, LieBialgebra};
    use super::*;
    use crate::linalg::QMatrix;

    #[test]
    fn sl2_standard_passes() {
        let b = LieBialgebra::sl2_standard();
        let rep = check_lie_bialgebra(&b);
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(rep.checks.len(), 7);
    }

    #[test]
    fn trivial_structure_passes() {
        let g = LieAlgebra::sl2();
        let rep = check_quasitriangular(&g, &Cobracket::zero(3), &QMatrix::zeros(3, 3));
        assert!(rep.all_passed());
    }

    #[test]
    fn wrong_r_fails_cybe() {
        let g = LieAlgebra::sl2();
        let mut r = QMatrix::zeros(3, 3);
        r.set(1, 2, q(1));
        r.set(0, 0, q(1));
        let delta = Cobracket::coboundary(&g, &r);
        let rep = check_quasitriangular(&g, &delta, &r);
        assert!(!rep.passed("cybe"));
        assert!(rep
            .get("cybe")
            .unwrap()
            .detail
            .as_ref()
            .unwrap()
            .contains("CYBE component"));
        assert!(rep.passed("coboundary"));
    }

    #[test]
    fn mismatched_cobracket_fails_coboundary() {
        let g = LieAlgebra::sl2();
        let rep = check_quasitriangular(&g, &Cobracket::zero(3), &sl2_standard_r());
        assert!(!rep.passed("coboundary"));
        assert!(rep.passed("cybe"));
    }
}
