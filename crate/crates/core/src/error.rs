use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse coefficient list: {0}")]
    Parse(String),

    /// The t^0 coefficient of a series denominator has no inverse usable at
    /// the requested truncation.
    #[error("series denominator is not invertible: {0}")]
    NonInvertible(String),

    #[error("coefficients are not a polynomial of degree <= {degree} in the index (first mismatch at k = {index})")]
    InterpolationMismatch { degree: usize, index: usize },

    #[error("truncation order {order} is below the required minimum {required}")]
    TruncationTooShort { order: usize, required: usize },

    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),

    #[error("linear system is inconsistent")]
    Inconsistent,
}

pub type Result<T> = std::result::Result<T, Error>;
