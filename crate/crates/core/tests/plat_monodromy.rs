use charvar::cohomology::{
    axis_blocks, block_structure, induced_matrix, invariant_symplectic_form, plat_space,
    word_monodromy, ProductOrder, PLAT_BLOCKS,
};
use charvar::exact::{RatPoly, RationalMatrix};
use charvar::groups::{builtin, Substitution};
use charvar::quaternions::{boct, UnitQuaternion};

mod common;

use common::{S2_PRINTED, T2_PRINTED};

fn printed(m: &[[i64; 18]; 18]) -> RationalMatrix {
    let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
    RationalMatrix::from_i64_rows(&rows)
}

fn computed() -> (RationalMatrix, RationalMatrix) {
    let space = plat_space().unwrap();
    let o = boct();
    let t = induced_matrix(&space, &builtin::t2_plat(), &o).unwrap();
    let s = induced_matrix(&space, &builtin::s2_plat(), &o).unwrap();
    assert_eq!(t.witness, UnitQuaternion::A());
    assert_eq!(s.witness, UnitQuaternion::A().pow(2));
    (t.matrix, s.matrix)
}

#[test]
fn t2_matches_printed_matrix() {
    assert_eq!(computed().0, printed(&T2_PRINTED));
}

#[test]
fn s2_matches_printed_matrix() {
    assert_eq!(computed().1, printed(&S2_PRINTED));
}

fn restricted(
    t: &RationalMatrix,
    s: &RationalMatrix,
    word: &str,
    order: ProductOrder,
) -> RationalMatrix {
    word_monodromy(
        &[("T", 2, t), ("S", 2, s)],
        word,
        order,
        Some(&PLAT_BLOCKS[0]),
    )
    .unwrap()
}

#[test]
fn restricted_charpolys() {
    let (t, s) = computed();
    let p = RatPoly::from_i64(&[1, -2, -125, -404, -125, -2, 1]);
    let p_tilde = RatPoly::from_i64(&[1, -30, -781, -2540, -781, -30, 1]);
    for order in [ProductOrder::RightToLeft, ProductOrder::LeftToRight] {
        assert_eq!(
            restricted(&t, &s, "T^6 S^4 T^4 S^6", order)
                .charpoly()
                .unwrap(),
            p
        );
        assert_eq!(
            restricted(&t, &s, "T^6 S^4 T^4 S^6 T^6 S^6", order)
                .charpoly()
                .unwrap(),
            p_tilde
        );
    }
}

#[test]
fn g1_h1_do_not_commute_and_share_a_symplectic_form() {
    let (t, s) = computed();
    let g1 = restricted(&t, &s, "T^6 S^4 T^4 S^6", ProductOrder::RightToLeft);
    let h1 = restricted(&t, &s, "T^6 S^4 T^4 S^6 T^6 S^6", ProductOrder::RightToLeft);
    assert_ne!(&g1 * &h1, &h1 * &g1);
    let j = invariant_symplectic_form(&[g1.clone(), h1.clone()]).expect("invariant form");
    assert_eq!(j.transpose(), -&j);
    assert_eq!(&(&g1.transpose() * &j) * &g1, j);
    assert_eq!(&(&h1.transpose() * &j) * &h1, j);
}

#[test]
fn blocks_are_cyclically_permuted() {
    let (t, s) = computed();
    // T²: U1 -> U3 -> U2 -> U1
    assert_eq!(
        block_structure(&t, &PLAT_BLOCKS).unwrap().permutation,
        [2, 0, 1]
    );
    // S²: U1 -> U2 -> U3 -> U1
    assert_eq!(
        block_structure(&s, &PLAT_BLOCKS).unwrap().permutation,
        [1, 2, 0]
    );
    let space = plat_space().unwrap();
    let auto = axis_blocks(&space).unwrap();
    let expected: Vec<Vec<usize>> = PLAT_BLOCKS.iter().map(|b| b.to_vec()).collect();
    assert_eq!(auto, expected);
}

#[test]
fn sixth_powers_are_unipotent_with_rank_three() {
    let (t, s) = computed();
    let id = RationalMatrix::identity(18);
    for m in [&t, &s] {
        let x = &m.pow(3) - &id;
        assert_eq!(x.rank(), 3);
        assert!((&x * &x).is_zero());
    }
}

#[test]
fn induced_matrices_compose_contravariantly() {
    let (t, s) = computed();
    let space = plat_space().unwrap();
    let o = boct();
    let t6 = builtin::t2_plat().power(3).unwrap();
    assert_eq!(induced_matrix(&space, &t6, &o).unwrap().matrix, t.pow(3));
    let ts = Substitution::compose(&builtin::t2_plat(), &builtin::s2_plat()).unwrap();
    let m = induced_matrix(&space, &ts, &o).unwrap().matrix;
    assert_eq!(
        m,
        word_monodromy(
            &[("T", 2, &t), ("S", 2, &s)],
            "T^2 S^2",
            ProductOrder::RightToLeft,
            None
        )
        .unwrap()
    );
    assert_eq!(m, &s * &t);
}

#[test]
fn identity_endomorphism_gives_identity() {
    let space = plat_space().unwrap();
    let id = Substitution::identity(space.presentation());
    assert_eq!(
        induced_matrix(&space, &id, &boct()).unwrap().matrix,
        RationalMatrix::identity(18)
    );
}
