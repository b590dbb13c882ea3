use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial does not split into linear factors over {0}")]
    NonSplit(String),
    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("instance too large for the oracle: {0}")]
    OracleLimit(String),
    #[error("search exhausted after {0} trials")]
    SearchExhausted(usize),
    #[error("malformed bimodule: dimension {dim} is not divisible by {divisor}")]
    MalformedBimodule { dim: usize, divisor: usize },
    #[error("grading is not radical-graded: {0}")]
    NotRadicalGraded(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("characteristic {characteristic} divides the group order {order}")]
    BadCharacteristic { characteristic: u64, order: usize },
    #[error("quiver has an oriented cycle and no length bound was given")]
    InfiniteDimension,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
