use thiserror::Error;

/// Errors raised by the exact constructions and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Laurent polynomial evaluated at x = 0")]
    EvalAtZero,
    #[error("degenerate hypergeometric parameters: {0}")]
    DegenerateParameters(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("size {n} exceeds the oracle limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("sample x = {0} hits a pole of the transformation")]
    PoleAtSample(String),
    #[error("expected an integer, got {0}")]
    NotIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
