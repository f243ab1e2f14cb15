use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A vector of the inner space that does not reduce to zero against the
    /// outer space. Carries the bit positions of the offending vector.
    #[error("containment violated: inner vector with support {witness:?} is not in the outer space")]
    ContainmentViolation { witness: Vec<usize> },

    #[error("window exceeds guard limits (n <= {max_n}, d <= {max_d}): requested n = {n}, d = {d}")]
    GuardLimit { n: usize, d: usize, max_n: usize, max_d: usize },

    #[error("truncation degree {got} too small; need at least {need}")]
    TruncationTooSmall { got: i32, need: i32 },

    #[error("module relation fails: {0}")]
    RelationViolated(String),

    #[error("unknown series '{0}'")]
    UnknownSeries(String),

    #[error("series '{name}' requires an index n >= {min}")]
    MissingIndex { name: String, min: usize },

    #[error("integer overflow in exact series arithmetic")]
    Overflow,

    #[error("denominator constant term must be 1, found {0}")]
    BadDenominator(i64),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
