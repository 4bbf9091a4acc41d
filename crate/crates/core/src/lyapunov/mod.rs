//! Monte Carlo Lyapunov spectra of random matrix products, with a symmetry
//! diagnostic and an empirical uniform-expansion probe.

mod probe;
mod qr;
mod walk;

pub use probe::{uniform_expansion_probe, ProbeReport};
pub use walk::{
    half_split_agreement, plat_walk, replica_agreement, spectrum, symmetry_check, LyapunovReport,
    RandomWalkSpec, ReplicaAgreement, SymmetryCheck, DEFAULT_PERIOD, DEFAULT_SYMMETRY_TOLERANCE,
    POSITIVE_THRESHOLD,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LyapunovError {
    #[error("weights must be positive and sum to 1")]
    InvalidWeights,
    #[error("generator `{0}` is singular")]
    Singular(String),
    #[error("generators must be square matrices of one common size")]
    Shape,
    #[error("accumulated product overflowed; use a smaller reorthonormalization period")]
    NonFinite,
    #[error("symmetry check needs an even dimension")]
    OddDimension,
    #[error("need at least one step, one replica and a period of at least 1")]
    EmptyRun,
    #[error("cannot read walk: {0}")]
    Parse(String),
    #[error(transparent)]
    Cohomology(#[from] crate::cohomology::CohomologyError),
}
