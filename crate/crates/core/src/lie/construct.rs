//! Double bosonisation, central extension and the induction step.

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::{basis_vector, outer, Cobracket, LieAlgebra, LieBialgebra, Representation, Tensor2, Q};
use super::braided::{bosonisation_term, embed2, BraidedLieBialgebra};
use super::checks::{check_quasitriangular, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::scalar::poly;

fn axiom_error(stage: &str, rep: &CheckReport) -> Option<Error> {
    rep.failures().next().map(|c| Error::AxiomFailure {
        stage: stage.to_string(),
        detail: format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()),
    })
}

/// Appends primes until `base` is not among `taken`.
fn fresh_label(base: &str, taken: &[String]) -> String {
    let mut s = base.to_string();
    while taken.contains(&s) {
        s.push('\'');
    }
    s
}

fn fresh_labels(prefix: &str, n: usize, taken: &[String]) -> Vec<String> {
    let mut all = taken.to_vec();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let l = fresh_label(&format!("{prefix}{i}"), &all);
        all.push(l.clone());
        out.push(l);
    }
    out
}

fn pairing_checks(b: &BraidedLieBialgebra, b_dual: &BraidedLieBialgebra, ev: &QMatrix) -> Result<()> {
    let m = b.dim();
    let invariance_failure = (0..b.ambient.dim()).find(|&p| {
        let lhs = b.action.matrix(p).transpose().mul(ev);
        !lhs.plus(&ev.mul(b_dual.action.matrix(p))).is_zero()
    });
    if let Some(p) = invariance_failure {
        return Err(Error::AxiomFailure {
            stage: "double_bosonise".into(),
            detail: format!("pairing is not invariant under {}", b.ambient.algebra.labels()[p]),
        });
    }
    // <δ̲φ, x⊗y> = <φ, [x,y]> and <δ̲x, φ⊗ψ> = <x, [φ,ψ]>
    for c in 0..m {
        let lhs = ev.mul(b_dual.cobracket.image(c)).mul(&ev.transpose());
        let rhs = QMatrix::from_fn(m, m, |a, d| {
            b.carrier
                .bracket_basis(a, d)
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (k, v)| acc + v * ev.get(k, c))
        });
        if lhs != rhs {
            return Err(Error::AxiomFailure {
                stage: "double_bosonise".into(),
                detail: format!(
                    "cobracket of {} is not dual to the bracket of b",
                    b_dual.carrier.labels()[c]
                ),
            });
        }
    }
    for a in 0..m {
        let lhs = ev.transpose().mul(b.cobracket.image(a)).mul(ev);
        let rhs = QMatrix::from_fn(m, m, |c, d| {
            b_dual
                .carrier
                .bracket_basis(c, d)
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (k, v)| acc + v * ev.get(a, k))
        });
        if lhs != rhs {
            return Err(Error::AxiomFailure {
                stage: "double_bosonise".into(),
                detail: format!(
                    "cobracket of {} is not dual to the bracket of b_dual",
                    b.carrier.labels()[a]
                ),
            });
        }
    }
    Ok(())
}

/// Lie bialgebra on `b ⊕ g ⊕ b_dual` (basis in that order) with
/// `r^new = r - Σ_a f^a⊗e_a`, where `ev[a][c] = ev(x_a, φ_c)` and `f^a` is
/// the basis of `b_dual` dual to `x_a`.
pub fn double_bosonise(b: &BraidedLieBialgebra, b_dual: &BraidedLieBialgebra, ev: &QMatrix) -> Result<LieBialgebra> {
    if b.ambient != b_dual.ambient {
        return Err(Error::InvalidInput(
            "b and b_dual must live over the same Lie bialgebra".into(),
        ));
    }
    let (m, d) = (b.dim(), b.ambient.dim());
    if b_dual.dim() != m || ev.rows() != m || ev.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "b has dim {m}, b_dual has dim {}, pairing is {}x{}",
            b_dual.dim(),
            ev.rows(),
            ev.cols()
        )));
    }
    let ev_inv = ev.inverse().ok_or(Error::DegeneratePairing)?;
    for (name, part) in [("double_bosonise: b", b), ("double_bosonise: b_dual", b_dual)] {
        if let Some(e) = axiom_error(name, &part.axiom_check()) {
            return Err(e);
        }
    }
    pairing_checks(b, b_dual, ev)?;

    let g = &b.ambient;
    let r = g.r.as_ref().expect("ambient is quasitriangular");
    let s2 = r.plus(&r.transpose());
    let total = 2 * m + d;
    let (gb, gd) = (m, m + d);
    let mut labels = b.carrier.labels().to_vec();
    labels.extend_from_slice(g.algebra.labels());
    labels.extend_from_slice(b_dual.carrier.labels());

    let rho = &b.action;
    let rho_d = &b_dual.action;
    let algebra = LieAlgebra::from_fn(labels, |i, j| {
        let mut v = vec![Q::zero(); total];
        let block = |k: usize| {
            if k < gb {
                0
            } else if k < gd {
                1
            } else {
                2
            }
        };
        match (block(i), block(j)) {
            (0, 0) => v[..m].clone_from_slice(b.carrier.bracket_basis(i, j)),
            (1, 1) => v[gb..gd].clone_from_slice(g.algebra.bracket_basis(i - gb, j - gb)),
            (2, 2) => {
                for (k, c) in b_dual.carrier.bracket_basis(i - gd, j - gd).iter().enumerate() {
                    v[gd + k] = -c;
                }
            }
            (1, 0) => v[..m].clone_from_slice(&rho.matrix(i - gb).column(j)),
            (0, 1) => {
                for (k, c) in rho.matrix(j - gb).column(i).into_iter().enumerate() {
                    v[k] = -c;
                }
            }
            (1, 2) => v[gd..].clone_from_slice(&rho_d.matrix(i - gb).column(j - gd)),
            (2, 1) => {
                for (k, c) in rho_d.matrix(j - gb).column(i - gd).into_iter().enumerate() {
                    v[gd + k] = -c;
                }
            }
            (0, 2) => v = cross_bracket(b, b_dual, ev, &s2, i, j - gd, total),
            (2, 0) => {
                v = cross_bracket(b, b_dual, ev, &s2, j, i - gd, total)
                    .into_iter()
                    .map(|c| -c)
                    .collect()
            }
            _ => unreachable!(),
        }
        v
    })?;

    let mut images = Vec::with_capacity(total);
    for a in 0..m {
        let t = embed2(b.cobracket.image(a), total, 0, 0).plus(&bosonisation_term(
            r,
            rho,
            &basis_vector(m, a),
            total,
            0,
            gb,
        ));
        images.push(t);
    }
    for p in 0..d {
        images.push(embed2(g.cobracket.image(p), total, gb, gb));
    }
    for c in 0..m {
        // δφ = δ̲φ + Σ r^{pq} (ρ_q φ⊗ξ_p - ξ_p⊗ρ_q φ)
        let mut t = embed2(b_dual.cobracket.image(c), total, gd, gd);
        let phi = basis_vector(m, c);
        for p in 0..d {
            for qq in 0..d {
                let coeff = r.get(p, qq);
                if coeff.is_zero() {
                    continue;
                }
                let acted = rho_d.matrix(qq).apply(&phi);
                let mut full = vec![Q::zero(); total];
                full[gd..].clone_from_slice(&acted);
                let xi = basis_vector(total, gb + p);
                t = t.plus(&outer(&full, &xi).minus(&outer(&xi, &full)).scale(coeff));
            }
        }
        images.push(t);
    }
    let cobracket = Cobracket::new(images)?;

    let mut r_new = embed2(r, total, gb, gb);
    for a in 0..m {
        for bb in 0..m {
            let c = ev_inv.get(bb, a);
            if !c.is_zero() {
                r_new.add_at(gd + bb, a, &-c);
            }
        }
    }
    let out = LieBialgebra {
        algebra,
        cobracket,
        r: Some(r_new),
    };
    let rep = check_quasitriangular(&out.algebra, &out.cobracket, out.r.as_ref().unwrap());
    if let Some(e) = axiom_error("double_bosonise output", &rep) {
        return Err(e);
    }
    Ok(out)
}

/// `[x_a, φ_c] = ev(x₍₁₎, φ)x₍₂₎ + ev(x, φ₍₁₎)φ₍₂₎ + Σ (2r₊)^{pq} ξ_p ev(x, ρ_q φ)`.
fn cross_bracket(
    b: &BraidedLieBialgebra,
    b_dual: &BraidedLieBialgebra,
    ev: &QMatrix,
    s2: &Tensor2,
    a: usize,
    c: usize,
    total: usize,
) -> Vec<Q> {
    let (m, d) = (b.dim(), b.ambient.dim());
    let (gb, gd) = (m, m + d);
    let mut v = vec![Q::zero(); total];
    let dx = b.cobracket.image(a);
    for j in 0..m {
        let e = ev.get(j, c);
        if e.is_zero() {
            continue;
        }
        for k in 0..m {
            v[k] = &v[k] + &(dx.get(j, k) * e);
        }
    }
    let dphi = b_dual.cobracket.image(c);
    for j in 0..m {
        let e = ev.get(a, j);
        if e.is_zero() {
            continue;
        }
        for k in 0..m {
            v[gd + k] = &v[gd + k] + &(dphi.get(j, k) * e);
        }
    }
    let phi = basis_vector(m, c);
    for p in 0..d {
        for qq in 0..d {
            let coeff = s2.get(p, qq);
            if coeff.is_zero() {
                continue;
            }
            let acted = b_dual.action.matrix(qq).apply(&phi);
            let pairing = acted
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (k, w)| acc + w * ev.get(a, k));
            v[gb + p] = &v[gb + p] + &(coeff * &pairing);
        }
    }
    v
}

/// `g̃ = g ⊕ C·c` with `r̃ = r + λ c⊗c`, and the module extended by `c ↦ μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralExtension {
    pub algebra: LieBialgebra,
    pub action: Representation,
    pub dual_action: Representation,
    pub lambda: Q,
    pub mu: Q,
}

fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `Σ s^{pq} ρ_p⊗ρ_q` restricted to `Λ²V` in the basis `v_i∧v_j`, `i < j`.
fn casimir_on_wedge(s: &Tensor2, rho: &Representation) -> QMatrix {
    let n = rho.carrier_dim();
    let pairs = wedge_pairs(n);
    let mut omega = QMatrix::zeros(n * n, n * n);
    for p in 0..s.rows() {
        for qq in 0..s.cols() {
            let c = s.get(p, qq);
            if !c.is_zero() {
                omega = omega.plus(&rho.matrix(p).kron(rho.matrix(qq)).scale(c));
            }
        }
    }
    QMatrix::from_fn(pairs.len(), pairs.len(), |row, col| {
        let (i, j) = pairs[col];
        let (k, l) = pairs[row];
        omega.get(k * n + l, i * n + j) - omega.get(k * n + l, j * n + i)
    })
}

/// The `λ` for which `r̃ = r + λ c⊗c` makes the infinitesimal braiding vanish
/// on the module, with `c` acting by `μ`.
pub fn solve_central_charge(g: &LieAlgebra, r: &Tensor2, module: &Representation, mu: &Q) -> Result<Q> {
    module.check_for(g)?;
    if mu.is_zero() {
        return Err(Error::InvalidInput("the central scalar μ must be nonzero".into()));
    }
    let n = module.carrier_dim();
    if n < 2 {
        return Ok(Q::zero());
    }
    if !module.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let s2 = r.plus(&r.transpose());
    let w = casimir_on_wedge(&s2, module);
    let s = w.get(0, 0).clone();
    if w != QMatrix::identity(w.rows()).scale(&s) {
        return Err(Error::NotIsotypical {
            minimal_polynomial: poly::format_in(&w.minimal_polynomial(), "t"),
        });
    }
    Ok(-s / (Q::from_integer(2.into()) * mu * mu))
}

/// Appends a central `c`; `λ` defaults to [`solve_central_charge`].
pub fn central_extend(
    g: &LieBialgebra,
    module: &Representation,
    mu: Option<Q>,
    lambda: Option<Q>,
) -> Result<CentralExtension> {
    let r =
        g.r.as_ref()
            .ok_or_else(|| Error::InvalidInput("central extension needs an r-matrix".into()))?;
    let mu = mu.unwrap_or_else(Q::one);
    let lambda = match lambda {
        Some(l) => {
            module.check_for(&g.algebra)?;
            l
        }
        None => solve_central_charge(&g.algebra, r, module, &mu)?,
    };
    let d = g.dim();
    let mut labels = g.algebra.labels().to_vec();
    labels.push(fresh_label("c", &labels));
    let algebra = LieAlgebra::from_fn(labels, |i, j| {
        let mut v = vec![Q::zero(); d + 1];
        if i < d && j < d {
            v[..d].clone_from_slice(g.algebra.bracket_basis(i, j));
        }
        v
    })?;
    let mut r_new = embed2(r, d + 1, 0, 0);
    r_new.set(d, d, lambda.clone());
    let n = module.carrier_dim();
    let mut mats = module.matrices().to_vec();
    mats.push(QMatrix::identity(n).scale(&mu));
    let action = Representation::new(n, mats)?;
    let dual_action = action.dual();
    Ok(CentralExtension {
        algebra: LieBialgebra::from_r(algebra, r_new)?,
        action,
        dual_action,
        lambda,
        mu,
    })
}

/// Computable invariants of an induction output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub dim: usize,
    pub killing_rank: usize,
    pub killing_nondegenerate: bool,
    pub toral_rank: usize,
    pub jacobi: bool,
    pub co_jacobi: bool,
    pub cybe: bool,
    pub coboundary: bool,
    pub invariance: bool,
    pub factorisable: bool,
}

impl Certificate {
    pub fn of(b: &LieBialgebra) -> Self {
        let d = b.dim();
        let killing_rank = b.algebra.killing_form().rank();
        let rep = match &b.r {
            Some(r) => check_quasitriangular(&b.algebra, &b.cobracket, r),
            None => super::checks::check_bialgebra(b),
        };
        let factorisable = b.r_plus().is_some_and(|s| s.rank() == d);
        Self {
            dim: d,
            killing_rank,
            killing_nondegenerate: killing_rank == d,
            toral_rank: toral_rank(&b.algebra),
            jacobi: rep.passed("jacobi"),
            co_jacobi: rep.passed("co_jacobi"),
            cybe: rep.passed("cybe"),
            coboundary: rep.passed("coboundary"),
            invariance: rep.passed("invariance"),
            factorisable,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.killing_nondegenerate
            && self.jacobi
            && self.co_jacobi
            && self.cybe
            && self.coboundary
            && self.invariance
            && self.factorisable
    }
}

/// Size of a toral subalgebra built greedily from basis vectors in order: a
/// vector is taken when its `ad` is semisimple and it commutes with those
/// already taken.
pub fn toral_rank(g: &LieAlgebra) -> usize {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..g.dim() {
        if chosen
            .iter()
            .any(|&j| !super::algebra::is_zero_vector(g.bracket_basis(i, j)))
        {
            continue;
        }
        if g.ad_basis(i).is_semisimple() {
            chosen.push(i);
        }
    }
    chosen.len()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Induction {
    pub bialgebra: LieBialgebra,
    pub certificate: Certificate,
    pub lambda: Q,
    pub mu: Q,
}

/// Central extension, zero-bracket braided-Lie bialgebras on the module and
/// its dual, and double bosonisation with the identity pairing.
pub fn induction_step(
    g: &LieBialgebra,
    module: &Representation,
    mu: Option<Q>,
    lambda: Option<Q>,
) -> Result<Induction> {
    let r =
        g.r.as_ref()
            .ok_or_else(|| Error::InvalidInput("induction needs a quasitriangular Lie bialgebra".into()))?;
    if let Some(e) = axiom_error("input", &check_quasitriangular(&g.algebra, &g.cobracket, r)) {
        return Err(e);
    }
    let ext = central_extend(g, module, mu, lambda)?;
    let n = module.carrier_dim();
    let taken = ext.algebra.algebra.labels().to_vec();
    let xs = fresh_labels("x", n, &taken);
    let mut taken2 = taken.clone();
    taken2.extend(xs.iter().cloned());
    let ys = fresh_labels("y", n, &taken2);
    let b = BraidedLieBialgebra::trivial_on(ext.algebra.clone(), ext.action.clone(), xs)?;
    let b_dual = BraidedLieBialgebra::trivial_on(ext.algebra.clone(), ext.dual_action.clone(), ys)?;
    for (stage, part) in [("zero-bracket module", &b), ("zero-bracket dual", &b_dual)] {
        if let Some(e) = axiom_error(stage, &part.axiom_check()) {
            return Err(e);
        }
    }
    let bialgebra = double_bosonise(&b, &b_dual, &QMatrix::identity(n))?;
    Ok(Induction {
        certificate: Certificate::of(&bialgebra),
        bialgebra,
        lambda: ext.lambda,
        mu: ext.mu,
    })
}
