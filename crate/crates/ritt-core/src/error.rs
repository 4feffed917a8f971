use thiserror::Error;

/// Crate-wide error type.
///
/// Mathematical negatives (a recognizer returning `None`, a reducibility
/// verdict) are not errors; they are encoded in the return types of the
/// operations themselves. Errors are reserved for violated preconditions,
/// division by zero, parse failures, exhausted search bounds, and values
/// that cannot be certified inside the working coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid monodromy tuple: {0}")]
    Tuple(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration bound exceeded: {0}")]
    Bound(String),

    #[error("cannot certify over the coefficient field: {0}")]
    Field(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn bound(msg: impl Into<String>) -> Self {
        Error::Bound(msg.into())
    }
    pub fn field(msg: impl Into<String>) -> Self {
        Error::Field(msg.into())
    }

    /// Exit code convention used by the CLI: bounds and ingest problems are
    /// distinguished from mathematical negatives.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
