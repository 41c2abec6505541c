use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("budget exhausted after {elapsed_ms} ms")]
    Timeout { elapsed_ms: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
