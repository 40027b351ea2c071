use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground sets differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("not a composition: {0}")]
    InvalidComposition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("n = {n} exceeds the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    /// An exact division left a remainder. This is an internal invariant
    /// failure; it is reported rather than rounded.
    #[error("non-integral division in {context}: {numerator} / {denominator}")]
    NonIntegral {
        context: String,
        numerator: String,
        denominator: String,
    },

    #[error("ambiguous closed form: {0}")]
    Ambiguous(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
