use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("parameters are not in the semisimple regime: {0}")]
    NotSemisimple(String),

    #[error("unsupported bounds: {0}")]
    UnsupportedBounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
