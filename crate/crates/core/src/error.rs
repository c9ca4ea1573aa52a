use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// point at the offending input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid subset {elements:?} for n = {n}: {reason}")]
    InvalidSubset {
        elements: Vec<usize>,
        n: usize,
        reason: &'static str,
    },
    #[error("unsupported shape (k = {k}, n = {n}): {reason}")]
    UnsupportedShape {
        k: usize,
        n: usize,
        reason: &'static str,
    },
    #[error("shape mismatch: expected (k = {expected_k}, n = {expected_n}), got (k = {k}, n = {n})")]
    ShapeMismatch {
        expected_k: usize,
        expected_n: usize,
        k: usize,
        n: usize,
    },
    #[error("length mismatch: expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid permutation of [{n}]: {reason}")]
    InvalidPermutation { n: usize, reason: &'static str },
    #[error("chirotope entries must be +1 or -1 (found {value} at position {position})")]
    NonUniformSign { position: usize, value: i8 },
    #[error("chirotope violates the Grassmann-Pluecker sign condition at {relation}")]
    InvalidChirotope { relation: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ray validation failed: {0}")]
    Ingestion(String),
    #[error("purity violation: facet {facet:?} has dimension {dimension}, expected {expected}")]
    Purity {
        facet: Vec<usize>,
        dimension: usize,
        expected: usize,
    },
    #[error("corrupt face {face:?}: {rays} rays cannot span dimension {dimension}")]
    CorruptFace {
        face: Vec<usize>,
        rays: usize,
        dimension: usize,
    },
    #[error("non-generic point: {0}")]
    NonGeneric(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
