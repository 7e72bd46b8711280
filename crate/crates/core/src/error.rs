use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("axiom check failed: {0}")]
    Axioms(String),
    #[error("symbolic component present: {0}")]
    Symbolic(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("closure exceeded the limit of {0} elements")]
    ClosureTooLarge(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
