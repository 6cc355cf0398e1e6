use thiserror::Error;

/// Errors produced by the curvature operators.
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate plane: {0}")]
    DegeneratePlane(String),

    #[error("matrix is not symmetric (max asymmetry {0:.3e})")]
    NonSymmetric(f64),

    #[error("invalid complex dimension n = {0}; the model needs n >= 2")]
    InvalidDimension(usize),

    #[error("theta = {0} lies outside [0, pi/2]")]
    InvalidTheta(f64),

    #[error("vector is not tangent to the hypersurface (normal component {0:.3e})")]
    NotTangent(f64),

    #[error("Ricci operator is not a scalar matrix (deviation {0:.3e})")]
    NotEinstein(f64),

    #[error("invalid algebra definition: {0}")]
    InvalidDefinition(String),

    #[error("malformed algebra JSON: {0}")]
    Json(#[from] serde_json::Error),
}
