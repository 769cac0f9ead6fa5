use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Obstruction checks never surface these for a well-formed model; they
/// turn unmet hypotheses into `Verdict::Inapplicable` instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
