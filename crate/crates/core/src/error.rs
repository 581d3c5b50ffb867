use crate::num::Overflow;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or mathematically invalid input.
    #[error("invalid input: {0}")]
    Input(String),
    /// An order, rank, or depth bound was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A bounded search ended without a decision.
    #[error("undecided: {0}")]
    Undecided(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}

impl From<Overflow> for Error {
    fn from(_: Overflow) -> Self {
        Error::Capacity("matrix entry exceeds 63 bits".into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::input(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
