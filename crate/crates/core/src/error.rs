use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    InvalidModulus(u64),
    #[error("zero tolerance must be positive and finite (got {0})")]
    InvalidTolerance(f64),
    #[error("unknown field spec `{0}` (expected gf:<p>, rational or approx:<tol>)")]
    UnknownField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("stencil is empty")]
    EmptyStencil,
    #[error("stencil length must be odd (got {0} coefficients)")]
    EvenLength(usize),
    #[error("cannot parse `{token}` as a field element: {reason}")]
    BadToken { token: String, reason: String },
    #[error("sequence length must be at least 1")]
    EmptySequence,
    #[error("operation requires half-bandwidth {expected}, stencil has {found}")]
    BandwidthMismatch { expected: usize, found: usize },
    #[error("diagonal stencil (k = 0) has no sliding state; use the diagonal fast path")]
    DiagonalStencil,
    #[error("matrix order {n} must exceed the half-bandwidth {k}")]
    OrderTooSmall { n: usize, k: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
