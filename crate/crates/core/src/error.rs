use thiserror::Error;

use crate::validate::ValidationReport;

/// Errors produced by the spectral maps.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid Jacobi matrix: {0}")]
    InvalidMatrix(String),

    #[error("site {site} out of range 1..={size}")]
    SiteOutOfRange { site: usize, size: usize },

    #[error("spectral parameter z = {z} coincides with a pole")]
    Pole { z: f64 },

    /// Computed eigenvalues or weights are numerically degenerate.
    #[error("degenerate spectrum: {0}")]
    Degenerate(String),

    #[error("degenerate measure: {0}")]
    DegenerateMeasure(String),

    #[error(
        "Lanczos breakdown at step {step}: recurrence norm {norm:e} below threshold {threshold:e}"
    )]
    Breakdown {
        step: usize,
        norm: f64,
        threshold: f64,
    },

    #[error("non-positive residue {value:e} at merged index {index}")]
    NonPositiveResidue { index: usize, value: f64 },

    #[error("spectral data failed validation:\n{0}")]
    Invalid(ValidationReport),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
