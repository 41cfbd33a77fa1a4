use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("cover ratio must be at least 1")]
    RatioBelowOne,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("guard exceeded: {what} > {cap}")]
    GuardExceeded { what: String, cap: u64 },
    #[error("point {0} cannot be covered")]
    Uncoverable(usize),
    #[error("oracle cannot answer exactly")]
    InexactBackend,
}

pub type Result<T> = std::result::Result<T, Error>;
