use thiserror::Error;

use crate::exactfield::FieldError;
use crate::hodge::Violation;
use crate::linalg::LinalgError;
use crate::polarization::PolarizationViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid Hodge structure: {0}")]
    InvalidStructure(Violation),
    #[error("invalid polarization: {0}")]
    InvalidPolarization(PolarizationViolation),
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(u32, u32),
    #[error("operation needs weight {expected}, got {found}")]
    WrongWeight { expected: u32, found: u32 },
    #[error(
        "not a sub-Hodge structure at ({p},{q}): projection has dimension {projected}, \
         intersection has dimension {intersected}"
    )]
    NotSubStructure {
        p: i32,
        q: i32,
        projected: usize,
        intersected: usize,
    },
    #[error("polynomial degree {0} exceeds the supported bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("generators are not linearly independent over ℝ (real rank {rank} < {count})")]
    DependentGenerators { rank: usize, count: usize },
    #[error("{0}")]
    Shape(String),
    #[error("{0}")]
    Domain(String),
}
