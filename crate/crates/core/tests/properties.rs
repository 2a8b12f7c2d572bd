use braided_core::calculus::{ev_pairing, ev_pairing_right, gram_matrix, pairing_compatible};
use braided_core::combinatorics::Combinatorics;
use braided_core::free_algebra::{pi_map, shuffle_product, FreeElement, WordBraiding};
use braided_core::lie::{
    basis_vector, bosonise, check_lie_bialgebra, qr, self_transmute, LieBialgebra, Representation, Vector, Q,
};
use braided_core::linalg::QMatrix;
use braided_core::scalar::{parse_scalar, RationalFunction as RF};
use braided_core::tensor::RMatrix;
use proptest::prelude::*;

fn beta_strategy(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-2i64..=2, n), n))
}

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=max_len)
}

fn scalar_strategy() -> impl Strategy<Value = RF> {
    (-3i64..=3, -2i64..=2, -3i64..=3).prop_map(|(a, e, b)| &(&RF::from_int(a) * &RF::q_pow(e)) + &RF::from_int(b))
}

fn rational_vector(d: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(n, den)| qr(n, den)), d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        // display re-parses to the same canonical value
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn coproduct_is_coassociative_and_multiplicative(
        (beta, u, v) in beta_strategy(2).prop_flat_map(|b| {
            let n = b.len();
            (Just(b), word_strategy(n, 2), word_strategy(n, 2))
        })
    ) {
        let r = RMatrix::from_bilinear_form(&beta).unwrap();
        let br = WordBraiding::new(&r);
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        prop_assert!(br.coassociative_on(&uv));
        let lhs = br.coproduct_word(&uv);
        let rhs = br.tensor_multiply(&br.coproduct_word(&u), &br.coproduct_word(&v)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gram_is_factorial_and_sides_agree(
        (beta, u, w) in beta_strategy(2).prop_flat_map(|b| {
            let n = b.len();
            (Just(b), prop::collection::vec(0..n, 3), prop::collection::vec(0..n, 3))
        })
    ) {
        let comb = Combinatorics::new(RMatrix::from_bilinear_form(&beta).unwrap()).unwrap();
        let n = comb.dim();
        let gram = gram_matrix(3, &comb).unwrap();
        let fact = comb.factorial(3).unwrap();
        prop_assert_eq!(gram.matrix(), fact.matrix());
        let y = FreeElement::dual_word(n, &u);
        let x = FreeElement::word(n, &w);
        prop_assert_eq!(ev_pairing(&y, &x, &comb).unwrap(), ev_pairing_right(&y, &x, &comb).unwrap());
    }

    #[test]
    fn pi_is_a_homomorphism_and_pairing_is_compatible(
        (beta, a, b, w) in beta_strategy(2).prop_flat_map(|bb| {
            let n = bb.len();
            (Just(bb), word_strategy(n, 2), word_strategy(n, 2), word_strategy(n, 3))
        })
    ) {
        let comb = Combinatorics::new(RMatrix::from_bilinear_form(&beta).unwrap()).unwrap();
        let n = comb.dim();
        let (fa, fb) = (FreeElement::dual_word(n, &a), FreeElement::dual_word(n, &b));
        let lhs = pi_map(&fa.multiply(&fb).unwrap(), &comb).unwrap();
        let rhs = shuffle_product(&pi_map(&fa, &comb).unwrap(), &pi_map(&fb, &comb).unwrap(), &comb).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(pairing_compatible(&fa, &fb, &w, &comb).unwrap());
    }

    #[test]
    fn braided_cocycle_is_bilinear(x in rational_vector(3), y in rational_vector(3)) {
        let g = LieBialgebra::sl2_standard();
        let b = self_transmute(&g).unwrap();
        let alg = &b.carrier;
        let lhs = b.cobracket.apply(&alg.bracket(&x, &y));
        let rhs = alg
            .ad2(&x, &b.cobracket.apply(&y))
            .minus(&alg.ad2(&y, &b.cobracket.apply(&x)))
            .minus(&b.infinitesimal_braiding(&x, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaled_r_gives_a_quasitriangular_structure(n in -3i64..=3, d in 1i64..=3) {
        // CYBE is homogeneous quadratic, so every multiple of r solves it
        let g = LieBialgebra::sl2_standard();
        let t = qr(n, d);
        let r = g.r.as_ref().unwrap().scale(&t);
        let scaled = LieBialgebra::from_r(g.algebra.clone(), r).unwrap();
        let rep = check_lie_bialgebra(&scaled);
        prop_assert!(rep.all_passed(), "fails for t = {}", t);
    }

    #[test]
    fn one_dimensional_bosonisations(n in -3i64..=3, d in 1i64..=3, w in -2i64..=2) {
        // a line acted on by weight w over C·t with r = λ t⊗t
        let lambda = qr(n, d);
        let mut r = QMatrix::zeros(1, 1);
        r.set(0, 0, lambda);
        let g = LieBialgebra::from_r(braided_core::lie::LieAlgebra::abelian(vec!["t".into()]), r).unwrap();
        let rho = Representation::new(1, vec![QMatrix::identity(1).scale(&qr(w, 1))]).unwrap();
        let b = braided_core::lie::BraidedLieBialgebra::trivial_on(g, rho, vec!["x".into()]).unwrap();
        let bos = bosonise(&b).unwrap();
        prop_assert!(check_lie_bialgebra(&bos).all_passed());
        let x = basis_vector(2, 0);
        let expect: Vec<Q> = vec![qr(w, 1), qr(0, 1)];
        prop_assert_eq!(bos.algebra.bracket(&basis_vector(2, 1), &x), expect);
    }
}
