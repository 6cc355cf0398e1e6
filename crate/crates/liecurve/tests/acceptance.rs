//! Acceptance suite: every criterion runs the two independent computation
//! routes against each other at a pinned tolerance and prints one line.
//!
//! Run with `cargo test -p liecurve --test acceptance -- --nocapture` to see
//! the per-criterion deviations.

use std::f64::consts::FRAC_PI_2;

use liecurve::chn::AmbientModel;
use liecurve::hypersurface::HypersurfaceFrame;
use liecurve::search::SearchConfig;
use liecurve::verify;

const AMBIENT_NS: [usize; 3] = [2, 3, 5];
const SURFACE_NS: [usize; 3] = [2, 3, 4];

fn surface_grid() -> Vec<(usize, f64)> {
    let mut grid = Vec::new();
    for &n in &SURFACE_NS {
        for &theta in &verify::theta_grid(5) {
            grid.push((n, theta));
        }
    }
    grid
}

fn frame(n: usize, theta: f64) -> HypersurfaceFrame {
    HypersurfaceFrame::new(n, theta).expect("grid points are in range")
}

#[test]
fn criterion_01_ambient_connection() {
    let mut worst = 0.0f64;
    for &n in &AMBIENT_NS {
        let model = AmbientModel::new(n).unwrap();
        worst = worst.max(verify::connection_deviation(&model, 1000, 1001 + n as u64));
    }
    println!("criterion 1 (ambient connection, closed vs oracle): max deviation {worst:.3e}");
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_02_ambient_curvature() {
    let mut worst = 0.0f64;
    for &n in &AMBIENT_NS {
        let model = AmbientModel::new(n).unwrap();
        worst = worst.max(verify::curvature_deviation(&model, 1000, 2001 + n as u64));
    }
    println!("criterion 2 (ambient curvature, closed vs oracle): max deviation {worst:.3e}");
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_03_einstein() {
    let mut worst = 0.0f64;
    for &n in &AMBIENT_NS {
        let model = AmbientModel::new(n).unwrap();
        worst = worst.max(verify::einstein_deviation(&model));
        let c = model.einstein_constant().expect("model is Einstein");
        assert!((c + (n as f64 + 1.0) / 2.0).abs() <= 1e-9);
    }
    println!("criterion 3 (Einstein constant -(n+1)/2): max deviation {worst:.3e}");
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_04_ambient_sectional() {
    let mut worst = 0.0f64;
    let mut slack = 0.0f64;
    for &n in &AMBIENT_NS {
        let model = AmbientModel::new(n).unwrap();
        let sample = verify::ambient_sectional_sample(&model, 1000, 3001 + n as u64);
        worst = worst.max(sample.formula_dev);
        slack = slack.max(sample.range_slack);
    }
    println!(
        "criterion 4 (ambient sectional, oracle vs -1/4 - (3/4)<JX,Y>^2): max deviation {worst:.3e}, range slack {slack:.3e}"
    );
    assert!(worst <= 1e-9);
    assert!(slack <= 1e-9);
}

#[test]
fn criterion_05_shape_operator() {
    let mut shape_dev = 0.0f64;
    let mut spectrum_dev = 0.0f64;
    let mut mean_dev = 0.0f64;
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        shape_dev = shape_dev.max(verify::shape_operator_deviation(&f));
        let (dev, layout_ok) = verify::principal_curvature_check(&f, 1e-6);
        assert!(
            layout_ok,
            "principal-curvature multiplicities wrong at n={n}, theta={theta}"
        );
        spectrum_dev = spectrum_dev.max(dev);
        mean_dev = mean_dev.max(verify::mean_curvature_deviation(&f));
    }
    println!(
        "criterion 5 (shape operator): closed-form deviation {shape_dev:.3e}, spectrum deviation {spectrum_dev:.3e}, mean-curvature deviation {mean_dev:.3e}"
    );
    assert!(shape_dev <= 1e-12);
    assert!(spectrum_dev <= 1e-12);
    assert!(mean_dev <= 1e-12);
}

#[test]
fn criterion_06_extrinsic_flags() {
    let mut defect_dev = 0.0f64;
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        assert_eq!(
            verify::flag_mismatches(&f, 1e-9),
            0,
            "flag pattern wrong at n={n}, theta={theta}"
        );
        defect_dev = defect_dev.max(verify::hopf_defect_deviation(&f));
    }
    println!(
        "criterion 6 (minimal/austere/Hopf flags): Hopf-defect deviation from (1/2)cos^3 {defect_dev:.3e}"
    );
    assert!(defect_dev <= 1e-12);
}

#[test]
fn criterion_07_intrinsic_ricci() {
    let mut ricci_dev = 0.0f64;
    let mut spectrum_dev = 0.0f64;
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        ricci_dev = ricci_dev.max(verify::intrinsic_ricci_deviation(&f));
        let (dev, layout_ok) = verify::principal_ricci_check(&f, 1e-6);
        assert!(
            layout_ok,
            "principal-Ricci multiplicities wrong at n={n}, theta={theta}"
        );
        spectrum_dev = spectrum_dev.max(dev);
        // strict ordering below pi/2, first pair merged at pi/2
        let values = f.principal_ricci(1e-6).values();
        if theta < FRAC_PI_2 {
            assert!(values[0] < values[1] && values[1] < values[2]);
        } else {
            assert!(values[0] < values[1]);
        }
    }
    println!(
        "criterion 7 (intrinsic Ricci): oracle-vs-closed deviation {ricci_dev:.3e}, principal-Ricci deviation {spectrum_dev:.3e}"
    );
    assert!(ricci_dev <= 1e-9);
    assert!(spectrum_dev <= 1e-9);
}

#[test]
fn criterion_08_scalar_curvature() {
    let mut worst = 0.0f64;
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        // the oracle trace is the oracle scalar by construction (same sum)
        assert_eq!(
            f.sub().scalar_curvature().to_bits(),
            f.sub().ricci_matrix().trace().to_bits()
        );
        worst = worst.max(verify::scalar_deviation(&f));
        assert!(f.intrinsic_scalar() < 0.0);
    }
    println!("criterion 8 (scalar curvature, closed vs oracle trace): max deviation {worst:.3e}");
    assert!(worst <= 1e-12);
}

#[test]
fn criterion_09_intrinsic_sectional() {
    let mut worst = 0.0f64;
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        worst = worst.max(verify::gauss_consistency_deviation(&f, 500, 9001));
    }
    println!(
        "criterion 9 (sectional: formula vs Gauss correction vs oracle, 500 planes/point): max pairwise deviation {worst:.3e}"
    );
    assert!(worst <= 1e-9);
}

#[test]
fn criterion_10_sectional_extrema() {
    let cfg = SearchConfig::default();
    let mut max_dev = 0.0f64;
    let mut min_dev = 0.0f64;
    let mut exceed = 0.0f64;
    let mut range_slack = 0.0f64;

    for &theta in &verify::theta_grid(9) {
        let f = frame(2, theta);
        let check = verify::extrema_check(&f, &cfg, 2000, 10_001);
        max_dev = max_dev.max(check.max_dev);
        min_dev = min_dev.max(check.min_dev.expect("n = 2 has a closed minimum"));
        exceed = exceed.max(check.exceed_slack);
        range_slack = range_slack.max(check.range_slack);
        if theta == 0.0 {
            assert!((check.report.max_closed + 0.25).abs() <= 1e-12);
            assert!((check.report.min_closed.unwrap() + 1.0).abs() <= 1e-12);
        }
        if theta == FRAC_PI_2 {
            assert!((check.report.max_closed - 0.25).abs() <= 1e-12);
            assert!((check.report.min_closed.unwrap() + 0.75).abs() <= 1e-12);
        }
    }
    for &theta in &verify::theta_grid(5) {
        let f = frame(4, theta);
        let check = verify::extrema_check(&f, &cfg, 2000, 10_101);
        max_dev = max_dev.max(check.max_dev);
        exceed = exceed.max(check.exceed_slack);
        range_slack = range_slack.max(check.range_slack);
        if theta == 0.0 {
            assert!((check.report.max_closed + 0.25).abs() <= 1e-12);
        }
    }
    println!(
        "criterion 10 (extrema search vs closed forms): max deviation {max_dev:.3e}, min deviation {min_dev:.3e}, sampled exceed {exceed:.3e}, sampled range slack {range_slack:.3e}"
    );
    assert!(max_dev <= 1e-6);
    assert!(min_dev <= 1e-6);
    assert!(exceed <= 1e-9);
    assert!(range_slack <= 1e-9);
}

#[test]
fn criterion_11_maximum_comparison() {
    let stats = verify::comparison_stats(101);
    println!(
        "criterion 11 (max-gap (C-D)/8 on 101-point grid): endpoint |gap| {:.3e}, interior min gap {:.3e}, global min {:.3e}",
        stats.endpoint_dev, stats.interior_min, stats.global_min
    );
    // nonnegative everywhere, zero at the endpoints, strictly positive inside;
    // the interior floor sits at the (3/16)cos^6 decay of the nearest grid
    // point to pi/2, far above rounding noise but below 1e-9
    assert!(stats.global_min >= -1e-12);
    assert!(stats.endpoint_dev <= 1e-9);
    assert!(stats.interior_min > 1e-13);
}

#[test]
fn criterion_12_degeneration() {
    for (n, theta) in surface_grid() {
        let f = frame(n, theta);
        assert_eq!(
            verify::degeneration_mismatches(&f, 1e-10),
            0,
            "degeneration pattern wrong at n={n}, theta={theta}"
        );
        let dims = f.sub().lower_central_series_dims(1e-10);
        if theta == FRAC_PI_2 {
            assert_eq!(*dims.last().unwrap(), 0);
        } else {
            assert!(*dims.last().unwrap() > 0);
        }
    }
    println!("criterion 12 (nilpotent exactly at pi/2, solvable everywhere): all grid points ok");
}
