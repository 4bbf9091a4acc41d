//! Unit quaternions over Q(√2), their finite subgroups and representations
//! of finitely presented groups into them.

mod characters;
mod finite;
mod representation;
mod rotation;
mod unit;

pub use characters::{
    check_fixed, classify_conjugacy, enumerate_homs, filter_irreducible, orbit_of, pushforward,
    FixedCheck, Orbit,
};
pub use finite::{
    automorphism_count, boct, btet, centralizer, generate_group, generate_group_bounded,
    normalizer, quaternion_group, subgroup, FiniteGroup, DEFAULT_CLOSURE_BOUND,
};
pub use representation::{rho0, rho0_gamma, rho_ew, rho_hat, Representation};
pub use rotation::{ad, pauli, RotationMatrix};
pub use unit::UnitQuaternion;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuatError {
    #[error("not a unit quaternion: {0}")]
    NotUnit(String),
    #[error("group closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("relator {relator} evaluates to {value}, not 1")]
    RelatorViolated { relator: String, value: String },
    #[error("expected {expected} generator values, got {got}")]
    AlphabetMismatch { expected: usize, got: usize },
    #[error("generators do not generate the group")]
    DoesNotGenerate,
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
}
