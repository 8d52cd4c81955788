//! Crate-wide error types.

use thiserror::Error;

/// Violations detected while validating a Harish-Chandra parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("ZeroEntry: entry {index} is zero")]
    ZeroEntry { index: usize },
    #[error("NonHalfInteger: entry {index} is not in Z + 1/2")]
    NonHalfInteger { index: usize },
    #[error("NotDecreasing: block {block} is not strictly decreasing at offset {index}")]
    NotDecreasing { block: usize, index: usize },
    #[error("Duplicate: entries {first} and {second} coincide")]
    Duplicate { first: usize, second: usize },
    #[error("LengthMismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

impl ParamError {
    /// Stable name of the violation, used verbatim in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            ParamError::ZeroEntry { .. } => "ZeroEntry",
            ParamError::NonHalfInteger { .. } => "NonHalfInteger",
            ParamError::NotDecreasing { .. } => "NotDecreasing",
            ParamError::Duplicate { .. } => "Duplicate",
            ParamError::LengthMismatch { .. } => "LengthMismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("empty exponential sum has no normal form")]
    EmptySum,
    #[error("pole modulus within 1e-12 of the unit circle")]
    PoleOnContour,
    #[error("pole too close to the contour for quadrature: |log|a|| = {0}")]
    ContourTooClose(f64),
    #[error("too few quadrature samples: {got} < {min}")]
    TooFewSamples { got: usize, min: usize },
    #[error("singular point: Weyl denominator vanishes within tolerance")]
    SingularPoint,
    #[error("deformation radius on the unit torus (some X_j = 0)")]
    UnitTorusDeformation,
    #[error("target signature ({r}, {s}) has size {} but the parameter has size {n}", r + s)]
    TargetSize { r: usize, s: usize, n: usize },
    #[error("target signature does not match the theta correspondence of the parameter")]
    TargetMismatch,
    #[error("strongly orthogonal set size {k} exceeds min({r}, {s})")]
    SetTooLarge { k: usize, r: usize, s: usize },
    #[error("product has non-negligible imaginary part {im}")]
    NonRealProduct { im: f64 },
    #[error("rank condition n >= 2p violated: n = {n}, p = {p}")]
    OmegaRank { n: usize, p: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
