use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("reduction step budget of {budget} exceeded")]
    Resource { budget: u64 },

    #[error("randomness error: {0}")]
    Randomness(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
