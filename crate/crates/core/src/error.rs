use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested object provably does not exist for these parameters.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An exhaustive search was asked to run above its vertex guard.
    #[error("instance too large: {what} needs n <= {guard}, got n = {n}")]
    Scale {
        what: &'static str,
        n: usize,
        guard: usize,
    },

    /// No decision procedure applies to the instance.
    #[error("unsupported instance: {0}")]
    Unsupported(String),

    /// Two decision routes returned different answers.
    #[error("decision routes disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
