use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {left} vs {right} variables")]
    ContextMismatch { left: usize, right: usize },

    #[error("exponent overflow: result would exceed cap {cap}")]
    ExponentOverflow { cap: u64 },

    #[error("invalid ring context: {0}")]
    InvalidContext(String),

    #[error("frobenius exponent q = {q} outside 1..={max}")]
    FrobeniusOutOfRange { q: u64, max: u64 },

    #[error("{op} requires a proper nonzero ideal")]
    ZeroOrUnitIdeal { op: &'static str },

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("symbolic powers implemented for radical monomial ideals only")]
    NotSquarefree,

    #[error("prime support must be nonempty")]
    EmptySupport,

    #[error("multiplier {multiplier} lies in the minimal prime {prime}")]
    MultiplierInMinimalPrime { multiplier: String, prime: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
