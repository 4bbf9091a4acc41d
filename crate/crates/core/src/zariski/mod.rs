//! Exact certificate that two symplectic integer matrices generate a Zariski
//! dense subgroup of Sp(6, R): Galois-pinching, infinite order, non-commutation
//! and an eigenplane rank test over the splitting field of the char poly.

mod density;
mod galois;
mod modp;
mod quotient;
mod roots;

pub use density::{density_certificate, eigenplane_rank_test, DensityCertificate, Verdict};
pub use galois::{
    delta31, delta32, discriminant, galois_pinching_certificate, irreducibility_witness, is_square,
    pinching_certificate_for_poly, rational_roots, trace_polynomial, witness_prime,
    PinchingCertificate, WITNESS_PRIME_BOUND,
};
pub use modp::{factor_degrees, factor_mod_p, is_prime, FpPoly};
pub use quotient::{KMatrix, QuotientRingElement};
pub use roots::{
    count_roots, default_eps, isolate_real_roots, refine, root_bound, roots_outside_unit_interval,
    separate_moduli, sturm_sequence, RootInterval,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZariskiError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {0} divides the leading coefficient or the discriminant; choose another prime")]
    BadPrime(u64),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not palindromic of even degree")]
    NotPalindromic,
    #[error("characteristic polynomial is reducible over Q")]
    Reducible,
    #[error("no eigenvector for the requested eigenvalue")]
    ZeroEigenvector,
    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("matrices have incompatible shapes")]
    Shape,
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
}
