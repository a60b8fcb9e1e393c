//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by exact-arithmetic and algorithmic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeroPair,

    #[error("not a unit: constant term is zero")]
    NotAUnit,

    #[error("not divisible by q^{0}")]
    NotDivisible(usize),

    #[error("insufficient series order: needed {needed}, available {available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("cannot expand zero series")]
    ZeroSeries,

    #[error("determinant reconstruction requires delta = 2, got {0}")]
    DeltaUnsupported(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("algorithm invariant violated: {0}")]
    AlgorithmInvariantViolated(String),

    #[error("degenerate quadratic triple: {0}")]
    DegenerateTriple(String),

    #[error("no power-series solution: first failing coefficient index {0}")]
    InconsistentTriple(usize),

    #[error("undefined index: {0}")]
    UndefinedIndex(String),

    #[error("ambiguous piecewise branches: {0}")]
    AmbiguousBranch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
