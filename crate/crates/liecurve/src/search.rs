//! Seeded derivative-free search for extrema of a function on 2-planes.
//!
//! The search is multi-start hill climbing: each restart draws a random plane,
//! then repeatedly perturbs both spanning vectors by Gaussian steps and
//! re-orthonormalizes, keeping improvements and halving the step size when a
//! step level stops paying off. Every restart gets its own ChaCha8 stream
//! derived from `(seed, restart index)`, so results are bit-reproducible and
//! independent of evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::GeomError;
use crate::vector::{Plane, Vector};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 42;

/// Residual norm below which Gram-Schmidt declares the pair degenerate.
pub const PROJECTION_TOL: f64 = 1e-10;

/// Failed proposals tolerated at one step size before the step is halved.
const STEP_PATIENCE: usize = 8;

/// Knobs of the extremum search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    pub restarts: usize,
    pub max_iters: usize,
    pub step_init: f64,
    pub step_min: f64,
    /// Minimum improvement for a proposal to be accepted.
    pub tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            restarts: 64,
            max_iters: 500,
            step_init: 0.1,
            step_min: 1e-10,
            tol: 1e-9,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// Best values found by [`search_extrema`], with witness planes.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub max: f64,
    pub argmax: Plane,
    pub min: f64,
    pub argmin: Plane,
}

/// Gram-Schmidt: normalizes `x`, removes its component from `y`, normalizes
/// the remainder. Fails when either input is (numerically) zero or the pair
/// is parallel.
pub fn orthonormal_pair(x: &Vector, y: &Vector) -> Result<Plane, GeomError> {
    if x.dim() != y.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    let nx = x.norm();
    if nx < PROJECTION_TOL {
        return Err(GeomError::DegeneratePlane(format!(
            "first spanning vector has norm {nx:.3e}"
        )));
    }
    let ex = x.scale(1.0 / nx);
    let mut res = y.clone();
    res.axpy(-res.dot(&ex), &ex);
    // second pass clears the rounding left by the first
    res.axpy(-res.dot(&ex), &ex);
    let ny = res.norm();
    if ny < PROJECTION_TOL {
        return Err(GeomError::DegeneratePlane(format!(
            "residual of second vector has norm {ny:.3e}"
        )));
    }
    Plane::new(ex, res.scale(1.0 / ny))
}

fn gaussian_vector<R: Rng>(dim: usize, rng: &mut R) -> Vector {
    Vector::new((0..dim).map(|_| rng.sample(StandardNormal)).collect())
}

/// Uniformly distributed random plane: orthonormalization of two independent
/// standard-normal vectors. The distribution is invariant under orthogonal
/// transformations of the ambient space.
pub fn random_plane<R: Rng>(dim: usize, rng: &mut R) -> Plane {
    assert!(dim >= 2, "a plane needs an ambient dimension of at least 2");
    loop {
        let x = gaussian_vector(dim, rng);
        let y = gaussian_vector(dim, rng);
        if let Ok(plane) = orthonormal_pair(&x, &y) {
            return plane;
        }
    }
}

/// One restart of hill climbing; returns the best plane it reached.
fn climb<F: Fn(&Plane) -> f64>(
    objective: &F,
    dim: usize,
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> (f64, Plane) {
    let mut plane = random_plane(dim, rng);
    let mut best = objective(&plane);
    let mut step = cfg.step_init;
    let mut fails = 0usize;
    let mut iters = 0usize;
    while step >= cfg.step_min && iters < cfg.max_iters {
        iters += 1;
        let mut x = plane.x().clone();
        let mut y = plane.y().clone();
        x.axpy(step, &gaussian_vector(dim, rng));
        y.axpy(step, &gaussian_vector(dim, rng));
        let accepted = match orthonormal_pair(&x, &y) {
            Ok(candidate) => {
                let value = objective(&candidate);
                if value > best + cfg.tol {
                    best = value;
                    plane = candidate;
                    true
                } else {
                    false
                }
            }
            Err(_) => false,
        };
        if accepted {
            fails = 0;
        } else {
            fails += 1;
            if fails >= STEP_PATIENCE {
                step *= 0.5;
                fails = 0;
            }
        }
    }
    (best, plane)
}

/// Multi-start search for both extrema of `objective` over the planes of an
/// `dim`-dimensional space. Minimization reuses the maximization path on the
/// negated objective. The returned values are the objective re-evaluated at
/// the witness planes, so they are always attained.
pub fn search_extrema<F: Fn(&Plane) -> f64>(
    objective: F,
    dim: usize,
    cfg: &SearchConfig,
) -> SearchOutcome {
    let run = |negate: bool| -> Plane {
        let f = |p: &Plane| {
            let v = objective(p);
            if negate {
                -v
            } else {
                v
            }
        };
        let mut best = f64::NEG_INFINITY;
        let mut arg: Option<Plane> = None;
        for restart in 0..cfg.restarts.max(1) {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let stream = 2 * restart as u64 + u64::from(negate);
            rng.set_stream(stream);
            let (value, plane) = climb(&f, dim, cfg, &mut rng);
            if value > best {
                best = value;
                arg = Some(plane);
            }
        }
        arg.expect("at least one restart ran")
    };

    let argmax = run(false);
    let argmin = run(true);
    let max = objective(&argmax);
    let min = objective(&argmin);
    SearchOutcome {
        max,
        argmax,
        min,
        argmin,
    }
}
