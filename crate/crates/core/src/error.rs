use crate::exactmath::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the supported domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A quantity that must be an integer came out with a nontrivial denominator.
    /// This always indicates a bug (or a deliberately corrupted coefficient table).
    #[error("integrality violated in {context}: got {value}")]
    NonIntegral { context: String, value: Rational },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Two routes that must agree produced different results.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
