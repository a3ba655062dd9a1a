use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("expansion at infinity needs a positive-power window of {needed}, allowed {allowed}")]
    WindowViolation { needed: usize, allowed: usize },

    #[error("unsupported operator {0:?}")]
    UnsupportedOperator(String),

    #[error("invalid tensor legs: {0}")]
    InvalidLegs(String),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("invalid algebra context: {0}")]
    InvalidContext(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("truncation order exceeded: requested {requested}, available {available}")]
    TruncationExceeded { requested: usize, available: usize },

    #[error("unknown relation family {name:?}; known families: {known}")]
    UnknownFamily { name: String, known: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
