//! Group cohomology `H¹(π, su(2)_{Ad ρ})` over Q by Fox calculus, and the
//! linear action of group endomorphisms on it.

mod blocks;
mod monodromy;
mod plat;
mod space;

pub use blocks::{axis_blocks, block_structure, restrict_to_block, BlockAction, PLAT_BLOCKS};
pub use monodromy::{
    induced_matrix, invariant_symplectic_form, parse_monodromy_word, word_monodromy,
    MonodromyMatrix, ProductOrder,
};
pub use plat::{
    paper_basis_plat, paper_coboundaries_plat, plat_block_monodromy, plat_generators, plat_space,
    PaperBasis, G1_WORD, H1_WORD,
};
pub use space::{cohomology, Cocycle, CohomologySpace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error(transparent)]
    Quat(#[from] crate::quaternions::QuatError),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
    #[error("Ad ρ({0}) has irrational entries")]
    IrrationalAdjoint(String),
    #[error("vector is not a cocycle")]
    NotCocycle,
    #[error("no element of the ambient group conjugates ρ∘endo back to ρ")]
    NoWitness,
    #[error("basis has {got} vectors, expected {expected}")]
    BasisSize { expected: usize, got: usize },
    #[error("basis vectors are dependent modulo coboundaries")]
    DependentBasis,
    #[error("block {0:?} is not invariant")]
    NotInvariant(Vec<usize>),
    #[error("blocks are not permuted")]
    NotPermuted,
    #[error("unknown monodromy letter `{0}`")]
    UnknownLetter(String),
    #[error("bad monodromy word: {0}")]
    BadWord(String),
}
