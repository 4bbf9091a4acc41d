//! Free-group words, finite presentations, substitution homomorphisms and Fox calculus.

pub mod builtin;
mod fox;
mod parse;
mod presentation;
mod substitution;
mod word;

pub use builtin::{builtin, Builtin};
pub use fox::{fox_derivative, fox_jacobian_row, FoxSum};
pub use parse::{parse_presentation, parse_word};
pub use presentation::Presentation;
pub use substitution::{compose, substitute, Substitution};
pub use word::{Letter, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("unknown generator `{name}` at line {line}, column {col}")]
    UnknownGenerator {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("substitution is not total: missing {0}")]
    PartialMap(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("unknown builtin dataset `{0}`")]
    UnknownBuiltin(String),
}
