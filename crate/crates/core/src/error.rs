use thiserror::Error;

/// Errors raised by the algebra and combinatorics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters such as `(k, n)` violate their range constraints.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two operands live in different rings (different `k`, or different `(k, n)`).
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
