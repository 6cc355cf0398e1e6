//! Curvature of left-invariant metrics on solvable Lie groups, specialized to
//! the solvable model of complex hyperbolic space and its one-parameter family
//! of codimension-one subgroup orbits.
//!
//! The crate is built around a deliberate redundancy: every geometric quantity
//! can be computed two ways.
//!
//! * [`MetricLieAlgebra`] is the generic oracle — connection, curvature,
//!   Ricci, scalar and sectional curvature straight from structure constants.
//! * [`chn::AmbientModel`] and [`hypersurface::HypersurfaceFrame`] carry the
//!   closed forms for the model of constant holomorphic curvature -1 and for
//!   its hypersurface family (shape operator, principal curvatures, Ricci
//!   spectrum, scalar and sectional curvature, sectional extrema).
//!
//! [`verify`] measures the disagreement between the two routes, and
//! [`search`] hunts sectional-curvature extrema over the space of tangent
//! 2-planes with a seeded, bit-reproducible multi-start search — an
//! independent check on the closed-form extrema.

pub mod algebra;
pub mod chn;
pub mod error;
pub mod hypersurface;
pub mod matrix;
pub mod search;
pub mod spectrum;
pub mod vector;
pub mod verify;

pub use algebra::{AlgebraDefinition, InvariantViolation, MetricLieAlgebra};
pub use chn::AmbientModel;
pub use error::GeomError;
pub use hypersurface::{CurvatureReport, ExtremaReport, ExtrinsicFlags, HypersurfaceFrame};
pub use matrix::Matrix;
pub use search::{search_extrema, SearchConfig, SearchOutcome};
pub use spectrum::{spectrum, EigenCluster, SpectrumReport};
pub use vector::{Plane, Vector};
