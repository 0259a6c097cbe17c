use thiserror::Error;

/// Every fallible operation in the crate returns this error.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of a function.
    #[error("domain error: {0}")]
    Domain(String),
    /// A curve or marking violates a structural requirement.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The point configuration or torus is special; resample.
    #[error("non-generic configuration: {0}")]
    NonGeneric(String),
    /// Malformed file contents.
    #[error("parse error: {0}")]
    Parse(String),
    /// File system failure.
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
