//! Cross-verification harness.
//!
//! Every function here measures the disagreement between two independent
//! routes to the same quantity — a closed-form evaluator on one side and the
//! structure-constant oracle (or a random sample) on the other — and returns
//! the worst deviation it saw. Thresholding is left to the caller: the CLI
//! applies user-supplied tolerances, the acceptance tests apply pinned ones.

use std::f64::consts::FRAC_PI_2;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::chn::AmbientModel;
use crate::hypersurface::{
    closed_shape_operator, compare_extrema, principal_curvature_formulas,
    principal_ricci_formulas, closed_scalar_curvature, ExtremaReport, HypersurfaceFrame,
};
use crate::search::{random_plane, SearchConfig};
use crate::spectrum::SpectrumReport;
use crate::vector::{Plane, Vector};

/// Uniform grid on `[0, pi/2]` with both endpoints, `samples >= 2`.
pub fn theta_grid(samples: usize) -> Vec<f64> {
    assert!(samples >= 2, "a grid needs at least the two endpoints");
    (0..samples)
        .map(|i| {
            if i == samples - 1 {
                FRAC_PI_2
            } else {
                FRAC_PI_2 * i as f64 / (samples - 1) as f64
            }
        })
        .collect()
}

fn random_vector(dim: usize, rng: &mut ChaCha8Rng) -> Vector {
    Vector::new(
        (0..dim)
            .map(|_| StandardNormal.sample(rng))
            .collect::<Vec<f64>>(),
    )
}

/// Max component-wise gap between the oracle Levi-Civita connection and the
/// closed form, over random vector pairs.
pub fn connection_deviation(model: &AmbientModel, pairs: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let x = random_vector(model.dim(), &mut rng);
        let y = random_vector(model.dim(), &mut rng);
        let oracle = model.algebra().levi_civita(&x, &y).expect("dims match");
        let closed = model.connection_closed(&x, &y).expect("dims match");
        worst = worst.max(oracle.max_abs_diff(&closed));
    }
    worst
}

/// Max component-wise gap between the oracle curvature tensor and the closed
/// form, over random vector triples.
pub fn curvature_deviation(model: &AmbientModel, triples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..triples {
        let x = random_vector(model.dim(), &mut rng);
        let y = random_vector(model.dim(), &mut rng);
        let z = random_vector(model.dim(), &mut rng);
        let oracle = model.algebra().riemann(&x, &y, &z).expect("dims match");
        let closed = model.curvature_closed(&x, &y, &z).expect("dims match");
        worst = worst.max(oracle.max_abs_diff(&closed));
    }
    worst
}

/// Entry-wise deviation of the oracle Ricci matrix from `-((n+1)/2) I`.
pub fn einstein_deviation(model: &AmbientModel) -> f64 {
    let expected = -((model.n() as f64 + 1.0) / 2.0);
    model.algebra().ricci_matrix().scalar_matrix_defect(expected)
}

/// Sampled comparison of oracle vs. closed-form ambient sectional curvature.
#[derive(Debug, Clone, Copy)]
pub struct AmbientSectionalSample {
    /// Max `|oracle - closed|` over the sampled planes.
    pub formula_dev: f64,
    /// How far any sampled value strayed outside `[-1, -1/4]` (0 when none).
    pub range_slack: f64,
}

pub fn ambient_sectional_sample(
    model: &AmbientModel,
    planes: usize,
    seed: u64,
) -> AmbientSectionalSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut formula_dev = 0.0f64;
    let mut range_slack = 0.0f64;
    for _ in 0..planes {
        let plane = random_plane(model.dim(), &mut rng);
        let oracle = model.algebra().sectional(&plane).expect("plane fits");
        let closed = model.sectional_closed(&plane).expect("plane fits");
        formula_dev = formula_dev.max((oracle - closed).abs());
        range_slack = range_slack.max(-1.0 - oracle).max(oracle + 0.25);
    }
    AmbientSectionalSample {
        formula_dev,
        range_slack: range_slack.max(0.0),
    }
}

/// Entry-wise gap between the h-derived shape operator and its closed form.
pub fn shape_operator_deviation(frame: &HypersurfaceFrame) -> f64 {
    frame
        .shape_operator()
        .max_abs_diff(&closed_shape_operator(frame.n(), frame.theta()))
}

/// Compares a clustered spectrum against the expected closed-form values and
/// the expected multiplicity layout (`(1, 2n-3, 1)` away from `pi/2`,
/// `(2n-2, 1)` there).
fn spectrum_vs_formulas(
    report: &SpectrumReport,
    n: usize,
    theta: f64,
    formulas: [f64; 3],
) -> (f64, bool) {
    let (expected_values, expected_mults): (Vec<f64>, Vec<usize>) = if theta == FRAC_PI_2 {
        (vec![formulas[1], formulas[2]], vec![2 * n - 2, 1])
    } else {
        (formulas.to_vec(), vec![1, 2 * n - 3, 1])
    };
    if report.multiplicities() != expected_mults {
        return (f64::INFINITY, false);
    }
    let dev = report
        .values()
        .iter()
        .zip(&expected_values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    (dev, true)
}

/// Principal curvatures against their closed forms; `(deviation, layout ok)`.
pub fn principal_curvature_check(frame: &HypersurfaceFrame, cluster_tol: f64) -> (f64, bool) {
    spectrum_vs_formulas(
        &frame.principal_curvatures(cluster_tol),
        frame.n(),
        frame.theta(),
        principal_curvature_formulas(frame.theta()),
    )
}

/// Mean curvature against `(n / (2n-1)) sin(theta)`.
pub fn mean_curvature_deviation(frame: &HypersurfaceFrame) -> f64 {
    let n = frame.n() as f64;
    (frame.mean_curvature() - n / (2.0 * n - 1.0) * frame.theta().sin()).abs()
}

/// Count of classification flags that disagree with the expected pattern
/// (minimal and austere exactly at 0, Hopf exactly at pi/2).
pub fn flag_mismatches(frame: &HypersurfaceFrame, tol: f64) -> usize {
    let flags = frame.classify_extrinsic(tol);
    let at_zero = frame.theta() == 0.0;
    let at_half_pi = frame.theta() == FRAC_PI_2;
    usize::from(flags.minimal != at_zero)
        + usize::from(flags.austere != at_zero)
        + usize::from(flags.hopf != at_half_pi)
}

/// Gap between the measured Hopf defect and `(1/2) cos^3(theta)`.
pub fn hopf_defect_deviation(frame: &HypersurfaceFrame) -> f64 {
    (frame.hopf_defect() - 0.5 * frame.theta().cos().powi(3)).abs()
}

/// Entry-wise gap between the closed-form Ricci operator and the oracle
/// Ricci matrix of the induced subalgebra.
pub fn intrinsic_ricci_deviation(frame: &HypersurfaceFrame) -> f64 {
    frame
        .intrinsic_ricci()
        .max_abs_diff(&frame.sub().ricci_matrix())
}

/// Principal Ricci curvatures against their closed forms.
pub fn principal_ricci_check(frame: &HypersurfaceFrame, cluster_tol: f64) -> (f64, bool) {
    spectrum_vs_formulas(
        &frame.principal_ricci(cluster_tol),
        frame.n(),
        frame.theta(),
        principal_ricci_formulas(frame.n(), frame.theta()),
    )
}

/// Scalar-curvature consistency: oracle trace vs. closed form, and trace of
/// the closed-form Ricci operator vs. the closed form. Returns the larger gap.
pub fn scalar_deviation(frame: &HypersurfaceFrame) -> f64 {
    let closed = closed_scalar_curvature(frame.n(), frame.theta());
    let oracle = frame.sub().scalar_curvature();
    let closed_trace = frame.intrinsic_ricci().trace();
    (oracle - closed).abs().max((closed_trace - closed).abs())
}

/// Three-way sectional-curvature consistency over random tangent planes:
/// the direct formula, the ambient oracle corrected through the second
/// fundamental form, and the subalgebra oracle must agree pairwise. Returns
/// the worst pairwise gap.
pub fn gauss_consistency_deviation(frame: &HypersurfaceFrame, planes: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = frame.tangent_dim();
    let mut worst = 0.0f64;
    for _ in 0..planes {
        let tangent = random_plane(m, &mut rng);
        let x = frame.to_ambient(tangent.x());
        let y = frame.to_ambient(tangent.y());
        let ambient_plane = Plane::new(x.clone(), y.clone()).expect("lift is orthonormal");

        let formula = frame
            .intrinsic_sectional(&ambient_plane)
            .expect("plane is tangent");

        let ambient = frame.ambient().algebra();
        let k_ambient = ambient.sectional(&ambient_plane).expect("plane fits");
        let hxx = frame.second_fundamental_form(&x, &x).expect("tangent");
        let hyy = frame.second_fundamental_form(&y, &y).expect("tangent");
        let hxy = frame.second_fundamental_form(&x, &y).expect("tangent");
        let gauss = k_ambient + hxx * hyy - hxy * hxy;

        let oracle = frame.sub().sectional(&tangent).expect("plane fits");

        worst = worst
            .max((formula - gauss).abs())
            .max((formula - oracle).abs())
            .max((gauss - oracle).abs());
    }
    worst
}

/// Search-vs-closed-form extrema comparison, plus a sampling sweep.
#[derive(Debug, Clone)]
pub struct ExtremaCheck {
    pub report: ExtremaReport,
    /// `|max_search - max_closed|`.
    pub max_dev: f64,
    /// `|min_search - min_closed|`; only for complex dimension 2.
    pub min_dev: Option<f64>,
    /// Largest amount by which any sampled plane beat the closed-form
    /// maximum (0 when none did).
    pub exceed_slack: f64,
    /// Largest excursion of a sampled value outside
    /// `[min_search, max_search]` (0 when none).
    pub range_slack: f64,
}

pub fn extrema_check(
    frame: &HypersurfaceFrame,
    cfg: &SearchConfig,
    samples: usize,
    seed: u64,
) -> ExtremaCheck {
    let report = frame.sectional_extrema(cfg);
    let max_dev = (report.max_search - report.max_closed).abs();
    let min_dev = report
        .min_closed
        .map(|min_closed| (report.min_search - min_closed).abs());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = frame.tangent_dim();
    let mut exceed_slack = 0.0f64;
    let mut range_slack = 0.0f64;
    let mut consider = |k: f64| {
        exceed_slack = exceed_slack.max(k - report.max_closed);
        range_slack = range_slack
            .max(k - report.max_search)
            .max(report.min_search - k);
    };
    for _ in 0..samples {
        let tangent = random_plane(m, &mut rng);
        let plane = Plane::new(
            frame.to_ambient(tangent.x()),
            frame.to_ambient(tangent.y()),
        )
        .expect("lift is orthonormal");
        consider(frame.intrinsic_sectional(&plane).expect("tangent"));
    }
    // the searched witnesses themselves are sampled planes
    for witness in [&report.argmax, &report.argmin] {
        let plane = Plane::new(
            frame.to_ambient(witness.x()),
            frame.to_ambient(witness.y()),
        )
        .expect("witness is orthonormal");
        consider(frame.intrinsic_sectional(&plane).expect("tangent"));
    }
    ExtremaCheck {
        report,
        max_dev,
        min_dev,
        exceed_slack: exceed_slack.max(0.0),
        range_slack: range_slack.max(0.0),
    }
}

/// Gap statistics of `(C - D)/8` over a theta grid.
#[derive(Debug, Clone, Copy)]
pub struct ComparisonStats {
    /// Largest `|gap|` at the two endpoints; ~0 up to rounding.
    pub endpoint_dev: f64,
    /// Smallest gap over interior grid points; strictly positive.
    pub interior_min: f64,
    /// Smallest gap anywhere on the grid (negative values would break the
    /// inequality).
    pub global_min: f64,
}

pub fn comparison_stats(samples: usize) -> ComparisonStats {
    let grid = theta_grid(samples);
    let mut endpoint_dev = 0.0f64;
    let mut interior_min = f64::INFINITY;
    let mut global_min = f64::INFINITY;
    for (i, &theta) in grid.iter().enumerate() {
        let gap = compare_extrema(theta).max_gap;
        global_min = global_min.min(gap);
        if i == 0 || i == grid.len() - 1 {
            endpoint_dev = endpoint_dev.max(gap.abs());
        } else {
            interior_min = interior_min.min(gap);
        }
    }
    ComparisonStats {
        endpoint_dev,
        interior_min,
        global_min,
    }
}

/// Number of degeneration expectations violated: the induced algebra must be
/// nilpotent exactly at `pi/2` and solvable everywhere.
pub fn degeneration_mismatches(frame: &HypersurfaceFrame, rank_tol: f64) -> usize {
    let expect_nilpotent = frame.theta() == FRAC_PI_2;
    usize::from(frame.sub().is_nilpotent(rank_tol) != expect_nilpotent)
        + usize::from(!frame.sub().is_solvable(rank_tol))
}
