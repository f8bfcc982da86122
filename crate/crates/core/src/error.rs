use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("operation undefined on the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: polynomial vanishes at x = {0}")]
    Pole(f64),

    #[error("polynomial is not real-rooted")]
    NotRealRooted,

    #[error("pinch needs two distinct roots")]
    NoDistinctRoots,

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn degree(msg: impl Into<String>) -> Self {
        Error::DegreeMismatch(msg.into())
    }
}
