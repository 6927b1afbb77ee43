use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("shape mismatch: {what} has length {found}, expected {expected}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid Hölder exponent {0}: must lie in [1, inf]")]
    Exponent(f64),

    #[error("exponent {0} outside the admissible range (1, 2]")]
    ExponentRange(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("family is not orthonormal: Gram entry ({row}, {col}) deviates from the identity by {deviation:e}")]
    NotOrthonormal {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),

    #[error("vectors must have at least one coordinate")]
    EmptyVector,

    #[error("coordinate {index} has a nonzero imaginary part in a real family")]
    ComplexInRealFamily { index: usize },
}

pub type Result<T> = std::result::Result<T, BoundError>;
