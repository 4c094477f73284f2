use thiserror::Error;

/// Errors raised by the algebraic constructions and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("gaussian weight conflict: {0}")]
    WeightConflict(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown variable: {0}")]
    UnknownVariable(String),
    #[error("solution does not terminate as a polynomial: {0}")]
    NonTerminating(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
