use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation
    /// (e.g. `α ≤ −1`, `|w| ≥ 1`, a composition symbol leaving the disk).
    #[error("domain error: {0}")]
    Domain(String),
    /// Inconsistent or malformed arguments (shape mismatch, unknown id, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// A computation produced non-finite values or failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
