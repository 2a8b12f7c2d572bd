//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact; the only pinned
//! tolerances are the wall-clock limits below.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use braided_core::calculus::{
    braided_exp, ev_pairing, exp_eigenfunction_check, graded_kernel, graded_rank, gram_matrix, gram_matrix_via,
    CartanData, Side,
};
use braided_core::combinatorics::Combinatorics;
use braided_core::free_algebra::{binomial_formula_check, FreeElement, WordBraiding};
use braided_core::lie::{
    basis_vector, check_quasitriangular, induction_step, outer, q, qr, self_transmute, solve_central_charge,
    transmute_closed_form, LieBialgebra, Representation, Tensor2,
};
use braided_core::linalg::{Matrix, QMatrix};
use braided_core::scalar::{parse_scalar, LaurentPoly, Rational, RationalFunction as RF};
use braided_core::tensor::{all_words, index_word, word_index, yang_baxter_check, RMatrix};
use braided_core::Error;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_LINE: Duration = Duration::from_secs(1);
const LIMIT_A2: Duration = Duration::from_secs(10);
const LIMIT_B2: Duration = Duration::from_secs(30);
const LIMIT_INDUCTION: Duration = Duration::from_secs(5);
const SEED: u64 = 0x5eed_b1a5;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(t < limit, format!("{what} took {:.2?}, limit {limit:?}", t))
}

fn e<E: std::fmt::Debug>(x: E) -> String {
    format!("{x:?}")
}

/// Scalar `[m]_q! = Π_k (1 + q + ... + q^{k-1})`, built from monomials.
fn scalar_q_factorial(m: usize) -> RF {
    let mut acc = RF::one();
    for k in 1..=m {
        let int = (0..k).fold(RF::zero(), |s, j| &s + &RF::q_pow(j as i64));
        acc = &acc * &int;
    }
    acc
}

/// Coefficients of `Π_i 1/(1 - t^{d_i})` up to `t^max`.
fn hilbert_series(degrees: &[usize], max: usize) -> Vec<usize> {
    let mut c = vec![0usize; max + 1];
    c[0] = 1;
    for &d in degrees {
        for k in d..=max {
            c[k] += c[k - d];
        }
    }
    c
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = RMatrix::from_entries(1, Matrix::from_rows(vec![vec![RF::q_pow(1)]])).map_err(e)?;
    let comb = Combinatorics::new(r).map_err(e)?;
    for m in 0..=8 {
        let y = FreeElement::dual_word(1, &vec![0; m]);
        let x = FreeElement::word(1, &vec![0; m]);
        let got = ev_pairing(&y, &x, &comb).map_err(e)?;
        ensure(got == scalar_q_factorial(m), format!("ev(y^{m}, x^{m}) = {got}"))?;
    }
    let t = start.elapsed();
    within(t, LIMIT_LINE, "m <= 8")?;
    Ok(format!("ev(y^m, x^m) = [m]_q! for m <= 8 in {t:.2?}"))
}

fn a2() -> CartanData {
    CartanData::new(vec![vec![2, -1], vec![-1, 2]], None).unwrap()
}

fn b2() -> CartanData {
    CartanData::new(vec![vec![2, -2], vec![-1, 2]], Some(vec![1, 2])).unwrap()
}

fn at_one(c: &RF) -> Result<Rational, String> {
    c.evaluate_at(&Rational::one()).map_err(e)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let comb = Combinatorics::new(a2().rmatrix()).map_err(e)?;
    let oracle = hilbert_series(&[1, 1, 2], 5);
    let mut ranks = Vec::new();
    for m in 0..=5 {
        ranks.push(graded_rank(m, &comb).map_err(e)?);
    }
    let t = start.elapsed();
    ensure(ranks[..5] == [1, 2, 4, 6, 9], format!("ranks 0..4 = {:?}", &ranks[..5]))?;
    ensure(ranks == oracle, format!("ranks {ranks:?} vs Hilbert series {oracle:?}"))?;
    within(t, LIMIT_A2, "degrees 0..5")?;

    let rel = graded_kernel(3, &comb).map_err(e)?;
    ensure(rel.kernel_dim == 2, format!("degree-3 kernel dim {}", rel.kernel_dim))?;
    // classical Serre elements ad_{x_i}^2 x_j written on the 8 words of degree 3
    let serre = |i: usize, j: usize| {
        let mut v = vec![Rational::zero(); 8];
        for (w, c) in [(vec![i, i, j], 1), (vec![i, j, i], -2), (vec![j, i, i], 1)] {
            v[word_index(&w, 2)] += Rational::from_integer(c.into());
        }
        v
    };
    let mut rows = Vec::new();
    for g in &rel.generators {
        let v = g.to_vector(3).iter().map(at_one).collect::<Result<Vec<_>, _>>()?;
        rows.push(v);
    }
    let gens_rank = QMatrix::from_rows(rows.clone()).rank();
    rows.push(serre(0, 1));
    rows.push(serre(1, 0));
    let joint = QMatrix::from_rows(rows).rank();
    ensure(
        gens_rank == 2 && joint == 2,
        format!("q=1 span has rank {gens_rank}, joint with Serre {joint}"),
    )?;
    Ok(format!(
        "ranks {ranks:?} match 1/((1-t)^2(1-t^2)); q=1 kernel = classical Serre span; {t:.2?}"
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let comb = Combinatorics::new(b2().rmatrix()).map_err(e)?;
    let mut ranks = Vec::new();
    for m in 0..=4 {
        ranks.push(graded_rank(m, &comb).map_err(e)?);
    }
    let t = start.elapsed();
    let oracle = hilbert_series(&[1, 1, 2, 3], 4);
    ensure(ranks == [1, 2, 4, 7, 11], format!("ranks {ranks:?}"))?;
    ensure(ranks == oracle, format!("ranks {ranks:?} vs Hilbert series {oracle:?}"))?;
    within(t, LIMIT_B2, "degrees 0..4")?;
    Ok(format!("ranks {ranks:?} match 1/((1-t)^2(1-t^2)(1-t^3)); {t:.2?}"))
}

fn random_beta(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
        .collect()
}

fn structural_identities(r: RMatrix, max_degree: usize) -> Result<(), String> {
    let n = r.dim();
    ensure(yang_baxter_check(&r).holds, "Yang-Baxter fails")?;
    let braiding = WordBraiding::new(&r);
    let comb = Combinatorics::new(r).map_err(e)?;
    for m in 0..=max_degree {
        for w in all_words(n, m) {
            ensure(braiding.coassociative_on(&w), format!("coassociativity fails on {w:?}"))?;
            ensure(
                binomial_formula_check(&w, &comb).map_err(e)?,
                format!("binomial coproduct formula fails on {w:?}"),
            )?;
        }
        for split in 0..=m {
            for u in all_words(n, split) {
                for v in all_words(n, m - split) {
                    let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
                    let lhs = braiding.coproduct_word(&uv);
                    let rhs = braiding
                        .tensor_multiply(&braiding.coproduct_word(&u), &braiding.coproduct_word(&v))
                        .map_err(e)?;
                    ensure(lhs == rhs, format!("Δ(uv) ≠ Δ(u)Δ(v) for u={u:?}, v={v:?}"))?;
                }
            }
        }
        let gram = gram_matrix(m, &comb).map_err(e)?;
        let fact = comb.factorial(m).map_err(e)?;
        ensure(
            gram.matrix() == fact.matrix(),
            format!("Gram ≠ factorial in degree {m}"),
        )?;
        let right = gram_matrix_via(m, &comb, Side::Right).map_err(e)?;
        ensure(
            gram.matrix() == right.matrix(),
            format!("left and right pairings differ in degree {m}"),
        )?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases: Vec<(String, RMatrix)> = Vec::new();
    for k in 0..10 {
        let n = 1 + k % 3;
        let beta = random_beta(&mut rng, n);
        cases.push((format!("beta {beta:?}"), RMatrix::from_bilinear_form(&beta).map_err(e)?));
    }
    cases.push(("flip n=2".into(), RMatrix::flip(2)));
    let start = Instant::now();
    for (name, r) in &cases {
        structural_identities(r.clone(), 4).map_err(|m| format!("{name}: {m}"))?;
    }
    Ok(format!(
        "{} R-matrices: YBE, coassociativity, Δ multiplicative, binomial formula, Gram = factorial, left = right through degree 4; {:.2?}",
        cases.len(),
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let line = Combinatorics::new(RMatrix::from_bilinear_form(&[vec![1]]).map_err(e)?).map_err(e)?;
    ensure(
        exp_eigenfunction_check(&line, 5).map_err(e)?,
        "braided line eigenfunction check fails",
    )?;
    let series = braided_exp(&line, 5).map_err(e)?.series;
    for m in 0..=5 {
        let c = series.coeff(&vec![0; m], &vec![0; m]);
        let expect = scalar_q_factorial(m).inv().map_err(e)?;
        ensure(c == expect, format!("line coefficient in degree {m} is {c}"))?;
    }
    // generic diagonal β: redraw until the factorials are invertible through degree 5
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut tried = Vec::new();
    let generic = loop {
        let beta = random_beta(&mut rng, 2);
        let comb = Combinatorics::new(RMatrix::from_bilinear_form(&beta).map_err(e)?).map_err(e)?;
        match braided_exp(&comb, 5) {
            Ok(_) => break (beta, comb),
            Err(Error::Singular { .. }) => tried.push(beta),
            Err(other) => return Err(e(other)),
        }
    };
    ensure(
        exp_eigenfunction_check(&generic.1, 5).map_err(e)?,
        format!("eigenfunction check fails for beta {:?}", generic.0),
    )?;
    let a2comb = Combinatorics::new(a2().rmatrix()).map_err(e)?;
    match braided_exp(&a2comb, 5) {
        Err(Error::Singular { degree: 3, kernel_dim }) => ensure(kernel_dim == 2, format!("A2 kernel {kernel_dim}"))?,
        other => return Err(format!("A2 exp should be singular at degree 3, got {other:?}")),
    }
    Ok(format!(
        "line and beta {:?} ({} singular draws skipped) pass at N=5; A2 singular at degree 3; {:.2?}",
        generic.0,
        tried.len(),
        start.elapsed()
    ))
}

fn tensor(terms: &[(usize, usize, Rational)]) -> Tensor2 {
    let mut t = QMatrix::zeros(3, 3);
    for (i, j, c) in terms {
        t = t.plus(&outer(&basis_vector(3, *i), &basis_vector(3, *j)).scale(c));
    }
    t
}

fn criterion_6() -> Outcome {
    let (h, ee, f) = (0, 1, 2);
    let g = LieBialgebra::sl2_standard();
    let rep = check_quasitriangular(&g.algebra, &g.cobracket, g.r.as_ref().unwrap());
    ensure(rep.all_passed(), format!("sl2 quasitriangular checks:\n{rep}"))?;
    let b = self_transmute(&g).map_err(e)?;
    let kk = transmute_closed_form(&g).map_err(e)?;
    ensure(
        b.cobracket == kk,
        "general transmutation formula differs from the closed form",
    )?;
    let axioms = b.axiom_check();
    ensure(axioms.all_passed(), format!("braided axioms:\n{axioms}"))?;
    let expected = [
        ("e", ee, tensor(&[(ee, h, q(1)), (h, ee, q(-1))])),
        ("h", h, tensor(&[])),
        ("f", f, tensor(&[(h, f, q(1)), (f, h, q(-1))])),
    ];
    let mut wrong = Vec::new();
    for (name, idx, t) in &expected {
        let got = b.cobracket.image(*idx);
        if got != t {
            wrong.push(format!(
                "δ̲{name} = {} (expected {})",
                g.algebra.format_tensor(got),
                g.algebra.format_tensor(t)
            ));
        }
    }
    ensure(wrong.is_empty(), wrong.join("; "))?;
    Ok("quasitriangular checks, closed form, displayed δ̲ values and braided axioms all hold".into())
}

fn c2() -> Representation {
    let h = QMatrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]]);
    let e = QMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
    let f = QMatrix::from_rows(vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
    Representation::new(2, vec![h, e, f]).unwrap()
}

fn c3() -> Representation {
    let h = QMatrix::from_rows(vec![
        vec![q(2), q(0), q(0)],
        vec![q(0), q(0), q(0)],
        vec![q(0), q(0), q(-2)],
    ]);
    let e = QMatrix::from_rows(vec![
        vec![q(0), q(2), q(0)],
        vec![q(0), q(0), q(1)],
        vec![q(0), q(0), q(0)],
    ]);
    let f = QMatrix::from_rows(vec![
        vec![q(0), q(0), q(0)],
        vec![q(1), q(0), q(0)],
        vec![q(0), q(2), q(0)],
    ]);
    Representation::new(3, vec![h, e, f]).unwrap()
}

fn criterion_7() -> Outcome {
    let g = LieBialgebra::sl2_standard();
    let mut notes = Vec::new();
    for (name, module, dim) in [("C2", c2(), 8), ("C3", c3(), 10)] {
        let start = Instant::now();
        let ind = induction_step(&g, &module, None, None).map_err(e)?;
        let t = start.elapsed();
        let c = &ind.certificate;
        ensure(c.dim == dim, format!("{name}: dimension {}", c.dim))?;
        ensure(
            c.killing_nondegenerate,
            format!("{name}: Killing rank {}", c.killing_rank),
        )?;
        ensure(
            c.cybe && c.factorisable && c.jacobi && c.co_jacobi,
            format!("{name}: {c:?}"),
        )?;
        // factorisability recomputed from r directly
        let s = ind.bialgebra.r_plus().unwrap();
        ensure(s.rank() == dim, format!("{name}: r+ rank {}", s.rank()))?;
        within(t, LIMIT_INDUCTION, name)?;
        notes.push(format!("{name} -> dim {dim} ({t:.2?})"));
    }
    Ok(notes.join(", "))
}

/// `(R12 R13 R23)` and `(R23 R13 R12)` entries by explicit index sums.
fn ybe_component(r: &RMatrix, row: &[usize], col: &[usize]) -> (RF, RF) {
    let n = r.dim();
    let (a, b, c) = (row[0], row[1], row[2]);
    let (i, j, k) = (col[0], col[1], col[2]);
    let mut lhs = RF::zero();
    let mut rhs = RF::zero();
    for p in 0..n {
        for s in 0..n {
            for t in 0..n {
                // R12: (a,b) <- (p,s); R13: (p,c) <- (i,t); R23: (s,t) <- (j,k)
                let l = &(r.entry(a, p, b, s) * r.entry(p, i, c, t)) * r.entry(s, j, t, k);
                lhs = &lhs + &l;
                // R23: (b,c) <- (s,t); R13: (a,t) <- (p,k); R12: (p,s) <- (i,j)
                let rr = &(r.entry(b, s, c, t) * r.entry(a, p, t, k)) * r.entry(p, i, s, j);
                rhs = &rhs + &rr;
            }
        }
    }
    (lhs, rhs)
}

fn criterion_8() -> Outcome {
    // perturbed identity: R = id + E_{(2,1),(1,2)}
    let mut m = Matrix::<RF>::identity(4);
    m.set(2, 1, RF::one());
    let r = RMatrix::from_entries(2, m).map_err(e)?;
    let rep = yang_baxter_check(&r);
    let fail = rep.failure.ok_or("perturbed R passes the Yang-Baxter check")?;
    let (l, rr) = ybe_component(&r, &fail.row, &fail.col);
    ensure(
        l == fail.lhs && rr == fail.rhs && l != rr,
        format!("cited component {fail} disagrees with the oracle ({l}, {rr})"),
    )?;

    let g = LieBialgebra::sl2_standard();
    let (n2, n3) = (c2(), c3());
    let mixed = Representation::new(
        5,
        (0..3)
            .map(|p| {
                QMatrix::from_fn(5, 5, |i, j| match (i < 2, j < 2) {
                    (true, true) => n2.matrix(p).get(i, j).clone(),
                    (false, false) => n3.matrix(p).get(i - 2, j - 2).clone(),
                    _ => q(0),
                })
            })
            .collect(),
    )
    .map_err(e)?;
    let poly = match solve_central_charge(&g.algebra, g.r.as_ref().unwrap(), &mixed, &q(1)) {
        Err(Error::NotIsotypical { minimal_polynomial }) => minimal_polynomial,
        other => return Err(format!("mixed module should not be isotypical, got {other:?}")),
    };
    // the pure blocks give scalars -3/2 and -2, both must be roots
    let p = parse_scalar(&poly.replace('t', "q")).map_err(e)?;
    let lp: &LaurentPoly = p.as_laurent().ok_or("minimal polynomial has a denominator")?;
    for root in [qr(-3, 2), q(-2)] {
        ensure(
            lp.evaluate(&root).map_err(e)?.is_zero(),
            format!("{root} is not a root of {poly}"),
        )?;
    }
    ensure(
        lp.max_exp().unwrap_or(0) >= 2,
        format!("minimal polynomial {poly} is a scalar test"),
    )?;

    let mut checked = 0;
    for cartan in [a2(), b2()] {
        let comb = Combinatorics::new(cartan.rmatrix()).map_err(e)?;
        for deg in 1..=4 {
            let rel = graded_kernel(deg, &comb).map_err(e)?;
            let gram = gram_matrix(deg, &comb).map_err(e)?;
            for gen in &rel.generators {
                let n = comb.dim();
                // Σ_J G[I, J] c_J over words, entry by entry
                for row in 0..gram.side() {
                    let mut acc = RF::zero();
                    for (w, c) in gen.terms() {
                        acc = &acc + &(gram.matrix().get(row, word_index(w, n)) * c);
                    }
                    ensure(
                        acc.is_zero(),
                        format!("generator {gen} not killed at row {:?}", index_word(row, n, deg)),
                    )?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "YBE failure at {} confirmed; minimal polynomial {poly}; {checked} kernel generators annihilated",
        fail.row
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("braided line exactness", criterion_1),
        ("A2 q-Serre reproduction", criterion_2),
        ("B2 ranks", criterion_3),
        ("structural identities", criterion_4),
        ("braided exponential", criterion_5),
        ("sl2 Lie layer", criterion_6),
        ("induction certificates", criterion_7),
        ("negative controls", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
