use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {0:?} as a rational")]
    Parse(String),

    #[error("Euler numbers are only provided for even indices, got {0}")]
    OddEulerIndex(u32),

    #[error("kernel order must be at least 1")]
    ZeroOrder,

    #[error("kernel arguments must lie in [0,1]^2, got ({u}, {v})")]
    OutsideUnitSquare { u: String, v: String },

    #[error("{what} requires n >= {min}, got {n}")]
    IndexOutOfRange { what: &'static str, n: u32, min: u32 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("series did not reach tolerance {tolerance:e} within {max_terms} terms")]
    SeriesNotConverged { tolerance: f64, max_terms: u64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
