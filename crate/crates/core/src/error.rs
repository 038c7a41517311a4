use thiserror::Error;

/// Errors raised by the algebraic and decoding routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("circulant size must be at least 1")]
    ZeroModulus,
    #[error("circulant size mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("index {index} out of range for {len} rows")]
    RowIndex { index: usize, len: usize },
    #[error("invalid exponent matrix: {0}")]
    InvalidExponentMatrix(&'static str),
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("code has no nonzero codewords")]
    TrivialCode,
    #[error("probability {0} outside the admissible range")]
    InvalidProbability(f64),
    #[error("iteration cap must be at least 1")]
    ZeroIterations,
    #[error("invalid construction parameters: {0}")]
    InvalidConstruction(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
