//! Divisor and differential calculus on superelliptic curves
//! `w^N = ∏ (z − zᵢ)^{kᵢ}`, twisted Hodge bases and second fundamental forms.

mod curve;
mod differential;
mod enumerate;
mod fermat;
mod sff;

pub use curve::{genus, CurveSpec, Place, PlaceId};
pub use differential::{MonomialDifferential, Pauli};
pub use enumerate::{
    compatible_sets, compatible_triples, holomorphic_basis, quadratic_basis, sqrt_sections,
};
pub use fermat::{fermat_ew_identity, fermat_identity_with, quartic_sum, Cyclo16};
pub use sff::{
    ew_omega, ew_twisted_basis, pairing_integral, plat_omega, plat_twisted_basis,
    second_fundamental_form, surface_sff, SffMatrix,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SuperellError {
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("cannot parse curve {0:?}; expected e.g. \"N=6; k=1,1,1,3\"")]
    Parse(String),
    #[error("exponent {0} is not a multiple of 1/2")]
    BadExponent(String),
    #[error("w-exponent {0} is not an integer")]
    HalfIntegralWPower(String),
    #[error("differentials live on different curves")]
    CurveMismatch,
    #[error("{what}: expected {expected} monomials, found {got}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("pairing of {0} is not decided by the deck symmetry")]
    Indeterminate(String),
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
}
