use charvar::cohomology::{plat_block_monodromy, G1_WORD, H1_WORD};
use charvar::exact::RationalMatrix;
use charvar::zariski::{density_certificate, eigenplane_rank_test, Verdict};

fn g1_h1() -> (RationalMatrix, RationalMatrix) {
    (
        plat_block_monodromy(G1_WORD, 0).unwrap(),
        plat_block_monodromy(H1_WORD, 0).unwrap(),
    )
}

#[test]
fn g1_h1_generate_a_dense_subgroup() {
    let (g, h) = g1_h1();
    let c = density_certificate(&g, &h).unwrap();
    assert_eq!(c.verdict, Verdict::Sp6, "{:?}", c.reasons);
    assert_eq!(c.eigenplane_rank, Some(4));
    assert!(c.h_infinite_order && !c.commute);
    assert_eq!(c.pinching.witness_prime, Some(53));
}

#[test]
fn eigenplane_is_invariant_under_g_itself() {
    let (g, _) = g1_h1();
    assert_eq!(eigenplane_rank_test(&g, &g).unwrap(), 2);
    assert_eq!(
        eigenplane_rank_test(&g, &RationalMatrix::identity(6)).unwrap(),
        2
    );
}

#[test]
fn degenerate_pairs_are_inconclusive() {
    let (g, _) = g1_h1();
    let c = density_certificate(&g, &g).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
    assert!(c.reasons.iter().any(|r| r == "COMMUTING"));
    let minus = -&RationalMatrix::identity(6);
    let c = density_certificate(&g, &minus).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
    assert!(!c.h_infinite_order);
}
