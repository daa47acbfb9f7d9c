use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid symbol {0:?}; expected one of 0, 1, w, v")]
    InvalidSymbol(char),

    #[error("mu must be one of 1, w, v (got {0})")]
    InvalidMu(char),

    #[error("generator matrix is zero")]
    ZeroMatrix,

    #[error("operation requires a nonzero code")]
    ZeroCode,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("code is not Hermitian self-dual")]
    NotSelfDual,

    #[error("minimum weight is not certified")]
    Uncertified,

    #[error("generator polynomial does not divide x^{0} - 1")]
    NotDivisor(usize),

    #[error("first code is not a subcode of the second")]
    NotSubcode,

    #[error("search space too large for exhaustive mode: {0}")]
    SpaceTooLarge(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
