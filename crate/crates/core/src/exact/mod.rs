//! Exact arithmetic: rationals, the field Q(√2), dense rational matrices and
//! univariate polynomials.

mod matrix;
mod poly;
mod qsqrt2;
mod rational;

pub use matrix::{charpoly, coords_mod_subspace, kernel, rank, RationalMatrix, Vector};
pub use poly::{IntPolynomial, RatPoly};
pub use qsqrt2::QSqrt2;
pub use rational::{int, parse_rational, rat, to_f64, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector is not in the span of the given basis")]
    NotInSpan,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as an exact number")]
    Parse(String),
}
