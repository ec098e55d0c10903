use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtlError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("boundary mismatch: {0}")]
    Arity(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("cannot mix quotient and raw morphisms")]
    ModeMismatch,
    #[error("factorization made no progress within the search bound")]
    Factorize,
    #[error("linear system is singular: {0}")]
    Singular(String),
    #[error("strand bound exceeded: {0}")]
    Bound(String),
}

impl AtlError {
    pub(crate) fn parse(text: &str, reason: &str) -> Self {
        AtlError::Parse { text: text.to_string(), reason: reason.to_string() }
    }
}

pub type Result<T> = std::result::Result<T, AtlError>;
