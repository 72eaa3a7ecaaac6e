use thiserror::Error;

/// Errors raised by the algebra layers.
///
/// Shape-level failures of the reduction pipeline (a kernel that is not
/// zero left prime, a completion that was not found) are not errors: they
/// are carried as values in the reduction trace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("divisibility error: {0}")]
    Divisibility(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("rank error: {0}")]
    Rank(String),
    #[error("empty kernel: {0}")]
    EmptyKernel(String),
    #[error("linear forms are not independent: {0}")]
    Independence(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
