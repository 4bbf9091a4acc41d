use crate::exact::{int, Vector};
use crate::quaternions::rho0;

use super::{
    cohomology, induced_matrix, word_monodromy, CohomologyError, CohomologySpace, MonodromyMatrix,
    ProductOrder, PLAT_BLOCKS,
};
use crate::exact::RationalMatrix;
use crate::groups::builtin;
use crate::quaternions::boct;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;
const H: usize = 7;
const I: usize = 8;

/// `(generator, axis, coefficient)`: the value `coefficient · u_{axis+1}` at that generator.
type Entry = (usize, usize, i64);

/// Values of e₁..e₁₈.
const E_TABLE: [&[Entry]; 18] = [
    &[(A, 0, 1), (D, 0, 1)],
    &[(A, 2, 1), (D, 2, -1)],
    &[(B, 0, 1), (F, 0, -1)],
    &[(B, 1, 1), (D, 1, 1)],
    &[(B, 2, 1), (F, 2, 1)],
    &[(B, 0, 1), (C, 0, 1)],
    &[(C, 1, 1), (E, 1, 1)],
    &[(C, 2, 1), (D, 2, 1)],
    &[(C, 1, 1), (D, 1, 1), (E, 1, 1), (F, 1, 1)],
    &[(G, 0, 1)],
    &[(G, 1, 1)],
    &[(G, 2, 1)],
    &[(H, 0, 1)],
    &[(H, 1, 1)],
    &[(H, 2, 1)],
    &[(I, 0, 1)],
    &[(I, 1, 1)],
    &[(I, 2, 1)],
];

/// ∂₁, ∂₂, ∂₃ on a..f; all vanish on g, h, i.
const DELTA_TABLE: [&[Entry]; 3] = [
    &[(B, 0, -2), (C, 0, -2), (E, 0, -2), (F, 0, -2)],
    &[(A, 1, -2), (B, 1, -2), (D, 1, -2), (F, 1, -2)],
    &[(A, 2, -2), (C, 2, -2), (D, 2, -2), (E, 2, -2)],
];

fn cochain(entries: &[Entry]) -> Vector {
    let mut v = vec![int(0); 27];
    for &(g, k, c) in entries {
        v[3 * g + k] = int(c);
    }
    v
}

/// The eighteen basis cocycles and three coboundaries on π₁(Plat) for ρ₀.
#[derive(Clone, Debug)]
pub struct PaperBasis {
    pub cocycles: Vec<Vector>,
    pub coboundaries: Vec<Vector>,
}

/// Paper cocycles, each checked against the Fox Jacobian. Values not listed
/// (including d and f for e₁₀..e₁₈) are zero.
pub fn paper_basis_plat() -> Result<PaperBasis, CohomologyError> {
    let space = cohomology(&rho0())?;
    let cocycles: Vec<Vector> = E_TABLE.iter().map(|e| cochain(e)).collect();
    if !cocycles.iter().all(|u| space.is_cocycle(u)) {
        return Err(CohomologyError::NotCocycle);
    }
    let coboundaries: Vec<Vector> = DELTA_TABLE.iter().map(|e| cochain(e)).collect();
    Ok(PaperBasis {
        cocycles,
        coboundaries,
    })
}

/// The paper's ∂₁, ∂₂, ∂₃ as listed.
pub fn paper_coboundaries_plat() -> Vec<Vector> {
    DELTA_TABLE.iter().map(|e| cochain(e)).collect()
}

/// `H¹(π₁(Plat), Ad ρ₀)` in the basis e₁..e₁₈.
pub fn plat_space() -> Result<CohomologySpace, CohomologyError> {
    let basis = paper_basis_plat()?;
    let labels = (1..=18).map(|k| format!("e{k}")).collect();
    cohomology(&rho0())?.with_basis(basis.cocycles, labels)
}

/// Word whose U₁ restriction is g₁.
pub const G1_WORD: &str = "T^6 S^4 T^4 S^6";
/// Word whose U₁ restriction is h₁.
pub const H1_WORD: &str = "T^6 S^4 T^4 S^6 T^6 S^6";

/// Induced actions of T² and S² on `H¹` in the basis e₁..e₁₈.
pub fn plat_generators(
    space: &CohomologySpace,
) -> Result<(MonodromyMatrix, MonodromyMatrix), CohomologyError> {
    let o = boct();
    Ok((
        induced_matrix(space, &builtin::t2_plat(), &o)?,
        induced_matrix(space, &builtin::s2_plat(), &o)?,
    ))
}

/// Monodromy of a word in `T` and `S` (even exponents), restricted to block `U_{block+1}`.
pub fn plat_block_monodromy(word: &str, block: usize) -> Result<RationalMatrix, CohomologyError> {
    let space = plat_space()?;
    let (t, s) = plat_generators(&space)?;
    let letters = [("T", 2, &t.matrix), ("S", 2, &s.matrix)];
    word_monodromy(
        &letters,
        word,
        ProductOrder::RightToLeft,
        Some(&PLAT_BLOCKS[block]),
    )
}
