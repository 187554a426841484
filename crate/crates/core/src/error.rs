use thiserror::Error;

/// Errors surfaced by the engine.
///
/// Validation failures on user-supplied objects (wrong dimensions, mixed
/// fields, violated preconditions) are distinguished from
/// `ConsistencyViolation`, which marks a situation the underlying theory
/// rules out; hitting one means either corrupted input slipped past
/// validation or a genuine bug, and it is reported loudly rather than
/// papered over.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("field mismatch in {0}")]
    FieldMismatch(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime < 2^31")]
    BadPrime(u64),
    #[error("linear system is unsolvable")]
    Unsolvable,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency violation: {0}")]
    ConsistencyViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
