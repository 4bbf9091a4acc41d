use std::sync::OnceLock;

use charvar::cohomology::{invariant_symplectic_form, plat_block_monodromy, G1_WORD, H1_WORD};
use charvar::exact::{IntPolynomial, RatPoly, RationalMatrix};
use charvar::groups::{builtin, fox_derivative, Word};
use charvar::quaternions::{
    ad, boct, btet, classify_conjugacy, enumerate_homs, Representation, RotationMatrix,
};
use charvar::zariski::{factor_mod_p, trace_polynomial, FpPoly};
use proptest::prelude::*;

fn letters(max_gen: i32, len: usize) -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec(
        (1..=max_gen, any::<bool>()).prop_map(|(g, inv)| if inv { -g } else { g }),
        0..len,
    )
}

fn homs() -> &'static [Representation] {
    static H: OnceLock<Vec<Representation>> = OnceLock::new();
    H.get_or_init(|| enumerate_homs(&builtin::gamma6662(), &btet()))
}

fn g1_h1() -> &'static (RationalMatrix, RationalMatrix, RationalMatrix) {
    static M: OnceLock<(RationalMatrix, RationalMatrix, RationalMatrix)> = OnceLock::new();
    M.get_or_init(|| {
        let g = plat_block_monodromy(G1_WORD, 0).unwrap();
        let h = plat_block_monodromy(H1_WORD, 0).unwrap();
        let j = invariant_symplectic_form(&[g.clone(), h.clone()]).unwrap();
        (g, h, j)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fox_product_rule(u in letters(4, 8), v in letters(4, 8), g in 0usize..4) {
        let (u, v) = (Word::from_signed(&u), Word::from_signed(&v));
        let lhs = fox_derivative(&u.mul(&v), g);
        let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul(&u));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fox_augmentation_is_exponent_sum(w in letters(4, 12), g in 0usize..4) {
        let w = Word::from_signed(&w);
        prop_assert_eq!(fox_derivative(&w, g).augmentation(), w.abelianize(4)[g]);
    }

    #[test]
    fn ad_is_a_homomorphism(a in 0usize..48, b in 0usize..48) {
        let o = boct();
        let (x, y) = (o.element(a), o.element(b));
        prop_assert_eq!(ad(&(x * y)).unwrap(), &ad(x).unwrap() * &ad(y).unwrap());
        prop_assert_eq!(ad(x).unwrap() == RotationMatrix::identity(), x.is_central());
    }

    #[test]
    fn orbit_sizes_partition_input(mask in proptest::collection::vec(any::<bool>(), 456)) {
        let picked: Vec<Representation> = homs().iter().zip(&mask).filter(|(_, m)| **m).map(|(h, _)| h.clone()).collect();
        let orbits = classify_conjugacy(&picked, &boct());
        let mut members: Vec<usize> = orbits.iter().flat_map(|o| o.members.clone()).collect();
        members.sort_unstable();
        prop_assert_eq!(members, (0..picked.len()).collect::<Vec<_>>());
    }

    #[test]
    fn trace_polynomial_round_trip(q in proptest::collection::vec(-20i64..20, 1..4), shift in -3i64..4) {
        let mut q = q;
        q.push(1);
        let n = q.len() - 1;
        let y = RatPoly::from_i64(&[1, shift, 1]);
        let p = q.iter().enumerate().fold(RatPoly::zero(), |acc, (k, c)| {
            let term = &RatPoly::monomial(charvar::exact::int(*c), n - k) * &y.pow(k as u32);
            &acc + &term
        });
        let back = trace_polynomial(&p.to_int().unwrap(), shift).unwrap();
        prop_assert_eq!(back, IntPolynomial::from_i64(&q));
    }

    #[test]
    fn mod_p_factors_multiply_back(c in proptest::collection::vec(-50i64..50, 1..8), p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 53, 101])) {
        let mut c = c;
        c.push(1);
        let f = IntPolynomial::from_i64(&c);
        let Ok(factors) = factor_mod_p(&f, p) else { return Ok(()) };
        let product = factors.iter().fold(FpPoly::new(p, vec![1]), |acc, g| acc.mul(g));
        prop_assert_eq!(product, FpPoly::reduce(&f, p).monic());
        prop_assert!(factors.iter().all(|g| g.coeffs().last() == Some(&1)));
    }

    #[test]
    fn symplectic_form_is_invariant(w in letters(2, 6)) {
        let (g, h, j) = g1_h1();
        let (gi, hi) = (g.inverse().unwrap(), h.inverse().unwrap());
        let m = w.iter().fold(RationalMatrix::identity(6), |acc, x| {
            let step = match x { 1 => g, -1 => &gi, 2 => h, _ => &hi };
            &acc * step
        });
        prop_assert_eq!(&(&m.transpose() * j) * &m, j.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cayley_hamilton(n in 1usize..=18, seed in proptest::collection::vec(-3i64..=3, 324)) {
        let m = RationalMatrix::from_fn(n, n, |i, j| charvar::exact::int(seed[i * 18 + j]));
        let chi = m.charpoly().unwrap();
        prop_assert_eq!(chi.degree(), Some(n));
        prop_assert!(m.eval_poly(&chi).is_zero());
        prop_assert_eq!(-chi.coeff(n - 1), m.trace());
    }
}
