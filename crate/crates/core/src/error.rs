//! Error type shared across the crate.
//!
//! Variants are grouped into the exit-code classes the CLI reports:
//! config errors (2), schema/data errors (3), invariant/contract
//! violations (4), and I/O or serialization failures (5).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid or missing configuration (bad key, bad architecture shape, ...).
    #[error("config error: {0}")]
    Config(String),

    /// Input file does not match the expected column layout.
    #[error("schema error: {0}")]
    Schema(String),

    /// Input data violates a documented precondition or invariant.
    #[error("data error: {0}")]
    Data(String),

    /// Tensor or batch dimensions do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// An internal invariant that must hold by construction was violated.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// An API was used outside its contract (e.g. stale forward trace).
    #[error("contract error: {0}")]
    Contract(String),

    /// A gradient or parameter became NaN/inf during training.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// Label oracle failure (index out of range, ...).
    #[error("oracle error: {0}")]
    Oracle(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code class for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Schema(_) | Error::Data(_) | Error::Shape(_) | Error::Oracle(_) => 3,
            Error::Invariant(_) | Error::Contract(_) | Error::NonFinite(_) => 4,
            Error::Io(_) | Error::Serde(_) => 5,
        }
    }
}
