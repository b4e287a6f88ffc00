//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("square root not representable in the scalar field: {0}")]
    SqrtNotRepresentable(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("mixed parity: {0}")]
    MixedParity(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("hypergeometric series does not terminate (no vanishing upper parameter within bound)")]
    NonTerminating,

    #[error("no solution exists: {0}")]
    NoSolution(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("json decode error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
