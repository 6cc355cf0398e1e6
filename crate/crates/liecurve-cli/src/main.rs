//! Command-line front end: single-point curvature reports, theta sweeps to
//! CSV, and the cross-verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error,
//! 3 I/O error.

use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use liecurve::chn::AmbientModel;
use liecurve::hypersurface::{
    closed_scalar_curvature, closed_sectional_extrema, principal_curvature_formulas,
    principal_ricci_formulas, HypersurfaceFrame, DEFAULT_FLAG_TOL,
};
use liecurve::search::{SearchConfig, DEFAULT_SEED};
use liecurve::verify;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

/// Environment variable that overrides the default search seed.
const SEED_ENV: &str = "LIECURVE_SEED";

#[derive(Parser)]
#[command(
    name = "liecurve",
    version,
    about = "Curvature reports for the one-parameter family of Lie hypersurfaces in complex hyperbolic space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full curvature report for one hypersurface
    Report {
        /// Complex dimension of the ambient space (n >= 2)
        #[arg(long)]
        n: usize,
        /// Angle in radians, or degrees with a "deg:" prefix; range [0, pi/2]
        #[arg(long, value_parser = parse_theta, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Search seed (falls back to LIECURVE_SEED, then the built-in default)
        #[arg(long)]
        seed: Option<u64>,
        /// Cluster spectra numerically at this gap instead of using the exact
        /// case split at theta = pi/2
        #[arg(long)]
        cluster_tol: Option<f64>,
    },
    /// Tabulate curvature quantities over a uniform theta grid as CSV
    Sweep {
        #[arg(long)]
        n: usize,
        /// Number of grid rows, endpoints included
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run every closed-form-vs-oracle check and the extremum searches
    Verify {
        /// Complex dimensions to cover
        #[arg(long = "n-list", value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        n_list: Vec<usize>,
        /// Number of uniform theta grid points, endpoints included
        #[arg(long, default_value_t = 5)]
        theta_samples: usize,
        /// Tolerance for closed-form-vs-oracle deviations
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Tolerance for search-vs-closed-form extrema
        #[arg(long, default_value_t = 1e-6)]
        search_tol: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Cluster tolerance for the spectrum multiplicity checks
        #[arg(long, default_value_t = liecurve::spectrum::DEFAULT_CLUSTER_TOL)]
        cluster_tol: f64,
    },
}

fn parse_theta(text: &str) -> Result<f64, String> {
    let (raw, degrees) = match text.strip_prefix("deg:") {
        Some(rest) => (rest, true),
        None => (text, false),
    };
    let value: f64 = raw
        .parse()
        .map_err(|_| format!("`{text}` is not a number (use radians or deg:<value>)"))?;
    Ok(if degrees { value.to_radians() } else { value })
}

/// Snaps values within rounding distance of the endpoints onto them, so that
/// inputs like `deg:90` land exactly on pi/2.
fn normalize_theta(theta: f64) -> Result<f64, String> {
    let snapped = if theta.abs() <= 1e-12 {
        0.0
    } else if (theta - FRAC_PI_2).abs() <= 1e-12 {
        FRAC_PI_2
    } else {
        theta
    };
    if (0.0..=FRAC_PI_2).contains(&snapped) {
        Ok(snapped)
    } else {
        Err(format!("theta = {theta} lies outside [0, pi/2]"))
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    if let Some(seed) = flag {
        return seed;
    }
    if let Ok(text) = std::env::var(SEED_ENV) {
        if let Ok(seed) = text.parse() {
            return seed;
        }
        eprintln!("warning: ignoring unparsable {SEED_ENV}={text}");
    }
    DEFAULT_SEED
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Report {
            n,
            theta,
            format,
            seed,
            cluster_tol,
        } => cmd_report(n, theta, format, resolve_seed(seed), cluster_tol),
        Command::Sweep {
            n,
            samples,
            out,
            seed,
        } => cmd_sweep(n, samples, &out, resolve_seed(seed)),
        Command::Verify {
            n_list,
            theta_samples,
            tol,
            search_tol,
            seed,
            cluster_tol,
        } => cmd_verify(
            &n_list,
            theta_samples,
            tol,
            search_tol,
            resolve_seed(seed),
            cluster_tol,
        ),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

// ── report ──────────────────────────────────────────────────────────────

fn cmd_report(
    n: usize,
    theta: f64,
    format: Format,
    seed: u64,
    cluster_tol: Option<f64>,
) -> u8 {
    if n < 2 {
        return usage_error(&format!("n = {n} is out of range; the model needs n >= 2"));
    }
    let theta = match normalize_theta(theta) {
        Ok(t) => t,
        Err(message) => return usage_error(&message),
    };
    let frame = match HypersurfaceFrame::new(n, theta) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let cfg = SearchConfig::with_seed(seed);
    let report = frame.curvature_report(&cfg, cluster_tol, DEFAULT_FLAG_TOL);
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
        Format::Text => print_text_report(&frame, &report),
    }
    0
}

fn print_text_report(frame: &HypersurfaceFrame, report: &liecurve::CurvatureReport) {
    let n = report.n;
    println!("Lie hypersurface report");
    println!(
        "  n = {n} (ambient dimension {}, hypersurface dimension {})",
        2 * n,
        2 * n - 1
    );
    println!(
        "  theta = {:.16e} rad ({:.4} deg)",
        report.theta,
        report.theta.to_degrees()
    );
    println!();
    println!("principal curvatures");
    for c in &report.principal_curvatures {
        println!("  {:+.16e}  (multiplicity {})", c.value, c.multiplicity);
    }
    println!("mean curvature: {:+.16e}", report.mean_curvature);
    println!(
        "flags: minimal={} austere={} hopf={}  (hopf defect {:.3e})",
        report.flags.minimal,
        report.flags.austere,
        report.flags.hopf,
        frame.hopf_defect()
    );
    println!();
    println!("principal Ricci curvatures");
    for c in &report.principal_ricci {
        println!("  {:+.16e}  (multiplicity {})", c.value, c.multiplicity);
    }
    println!("scalar curvature: {:+.16e}", report.scalar);
    println!();
    println!("sectional curvature");
    println!("  max (closed form): {:+.16e}", report.sectional.max_closed);
    match report.sectional.min_closed {
        Some(min) => println!("  min (closed form): {:+.16e}", min),
        None => println!("  min (closed form): not available for n > 2"),
    }
    println!("  max (search):      {:+.16e}", report.sectional.max_search);
    println!("  min (search):      {:+.16e}", report.sectional.min_search);
    println!(
        "  C = {:.16e}, D = {:.16e}",
        report.sectional.c, report.sectional.d
    );
}

// ── sweep ───────────────────────────────────────────────────────────────

fn cmd_sweep(n: usize, samples: usize, out: &PathBuf, seed: u64) -> u8 {
    if n < 2 {
        return usage_error(&format!("n = {n} is out of range; the model needs n >= 2"));
    }
    if samples < 2 {
        return usage_error("samples must be at least 2 to include both endpoints");
    }
    let file = match File::create(out) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", out.display());
            return EXIT_IO;
        }
    };
    let mut writer = BufWriter::new(file);
    match write_sweep(&mut writer, n, samples, seed) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: writing {} failed: {e}", out.display());
            EXIT_IO
        }
    }
}

fn write_sweep<W: Write>(writer: &mut W, n: usize, samples: usize, seed: u64) -> std::io::Result<()> {
    writeln!(
        writer,
        "theta,lambda1,lambda2,lambda3,mean,alpha1,alpha2,alpha3,scalar,k_max,k_min,C,D"
    )?;
    let cfg = SearchConfig::with_seed(seed);
    for theta in verify::theta_grid(samples) {
        let [l1, l2, l3] = principal_curvature_formulas(theta);
        let [a1, a2, a3] = principal_ricci_formulas(n, theta);
        let mean = n as f64 / (2.0 * n as f64 - 1.0) * theta.sin();
        let scalar = closed_scalar_curvature(n, theta);
        let extrema = closed_sectional_extrema(n, theta);
        // no closed-form minimum above n = 2: fall back to the seeded search
        let k_min = match extrema.min {
            Some(min) => min,
            None => {
                let frame =
                    HypersurfaceFrame::new(n, theta).expect("grid thetas are in range");
                frame.sectional_extrema(&cfg).min_search
            }
        };
        let row = [
            theta, l1, l2, l3, mean, a1, a2, a3, scalar, extrema.max, k_min, extrema.c_cmp,
            extrema.d_cmp,
        ];
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(writer, "{}", cells.join(","))?;
    }
    writer.flush()
}

// ── verify ──────────────────────────────────────────────────────────────

#[derive(Copy, Clone, PartialEq, Eq)]
enum CheckKind {
    /// Closed form against oracle; judged against --tol.
    Formula,
    /// Search against closed form; judged against --search-tol.
    Search,
    /// Boolean pattern; any violation fails regardless of tolerances.
    Structural,
}

struct CheckRow {
    name: &'static str,
    context: String,
    deviation: f64,
    kind: CheckKind,
}

impl CheckRow {
    fn passes(&self, tol: f64, search_tol: f64) -> bool {
        match self.kind {
            CheckKind::Formula => self.deviation <= tol,
            CheckKind::Search => self.deviation <= search_tol,
            CheckKind::Structural => self.deviation == 0.0,
        }
    }
}

fn cmd_verify(
    n_list: &[usize],
    theta_samples: usize,
    tol: f64,
    search_tol: f64,
    seed: u64,
    cluster_tol: f64,
) -> u8 {
    if n_list.is_empty() {
        return usage_error("--n-list must contain at least one dimension");
    }
    if let Some(&bad) = n_list.iter().find(|&&n| n < 2) {
        return usage_error(&format!(
            "n = {bad} is out of range; the model needs n >= 2"
        ));
    }
    if theta_samples < 2 {
        return usage_error("--theta-samples must be at least 2");
    }

    let mut rows: Vec<CheckRow> = Vec::new();
    let cfg = SearchConfig::with_seed(seed);
    let grid = verify::theta_grid(theta_samples);

    for (i, &n) in n_list.iter().enumerate() {
        let model = AmbientModel::new(n).expect("n was range-checked");
        let base_seed = seed.wrapping_add(1000 * i as u64);
        rows.push(CheckRow {
            name: "ambient-connection",
            context: format!("n={n}, 1000 pairs"),
            deviation: verify::connection_deviation(&model, 1000, base_seed),
            kind: CheckKind::Formula,
        });
        rows.push(CheckRow {
            name: "ambient-curvature",
            context: format!("n={n}, 1000 triples"),
            deviation: verify::curvature_deviation(&model, 1000, base_seed + 1),
            kind: CheckKind::Formula,
        });
        rows.push(CheckRow {
            name: "ambient-einstein",
            context: format!("n={n}"),
            deviation: verify::einstein_deviation(&model),
            kind: CheckKind::Formula,
        });
        let sectional = verify::ambient_sectional_sample(&model, 1000, base_seed + 2);
        rows.push(CheckRow {
            name: "ambient-sectional",
            context: format!("n={n}, 1000 planes"),
            deviation: sectional.formula_dev.max(sectional.range_slack),
            kind: CheckKind::Formula,
        });

        for &theta in &grid {
            let frame = HypersurfaceFrame::new(n, theta).expect("grid thetas are in range");
            let at = format!("n={n}, theta={theta:.6}");
            rows.push(CheckRow {
                name: "shape-operator",
                context: at.clone(),
                deviation: verify::shape_operator_deviation(&frame),
                kind: CheckKind::Formula,
            });
            let (dev, ok) = verify::principal_curvature_check(&frame, cluster_tol);
            rows.push(CheckRow {
                name: "principal-curvatures",
                context: at.clone(),
                deviation: if ok { dev } else { f64::INFINITY },
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "mean-curvature",
                context: at.clone(),
                deviation: verify::mean_curvature_deviation(&frame),
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "extrinsic-flags",
                context: at.clone(),
                deviation: verify::flag_mismatches(&frame, 1e-9) as f64,
                kind: CheckKind::Structural,
            });
            rows.push(CheckRow {
                name: "hopf-defect",
                context: at.clone(),
                deviation: verify::hopf_defect_deviation(&frame),
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "intrinsic-ricci",
                context: at.clone(),
                deviation: verify::intrinsic_ricci_deviation(&frame),
                kind: CheckKind::Formula,
            });
            let (dev, ok) = verify::principal_ricci_check(&frame, cluster_tol);
            rows.push(CheckRow {
                name: "principal-ricci",
                context: at.clone(),
                deviation: if ok { dev } else { f64::INFINITY },
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "scalar-curvature",
                context: at.clone(),
                deviation: verify::scalar_deviation(&frame),
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "gauss-consistency",
                context: format!("{at}, 500 planes"),
                deviation: verify::gauss_consistency_deviation(&frame, 500, base_seed + 3),
                kind: CheckKind::Formula,
            });
            let extrema = verify::extrema_check(&frame, &cfg, 500, base_seed + 4);
            rows.push(CheckRow {
                name: "sectional-extrema",
                context: at.clone(),
                deviation: extrema.max_dev.max(extrema.min_dev.unwrap_or(0.0)),
                kind: CheckKind::Search,
            });
            rows.push(CheckRow {
                name: "extrema-exceed",
                context: at.clone(),
                deviation: extrema.exceed_slack.max(extrema.range_slack),
                kind: CheckKind::Formula,
            });
            rows.push(CheckRow {
                name: "degeneration",
                context: at.clone(),
                deviation: verify::degeneration_mismatches(&frame, 1e-10) as f64,
                kind: CheckKind::Structural,
            });
        }
    }

    let comparison = verify::comparison_stats(101);
    rows.push(CheckRow {
        name: "extrema-comparison",
        context: "101-point grid, endpoint gap".into(),
        deviation: comparison.endpoint_dev,
        kind: CheckKind::Formula,
    });
    rows.push(CheckRow {
        name: "extrema-comparison",
        context: "101-point grid, interior positivity".into(),
        deviation: f64::from(u8::from(
            comparison.interior_min <= 0.0 || comparison.global_min < -1e-12,
        )),
        kind: CheckKind::Structural,
    });

    // summary: worst deviation per check name, in first-seen order
    let mut names: Vec<&'static str> = Vec::new();
    for row in &rows {
        if !names.contains(&row.name) {
            names.push(row.name);
        }
    }
    println!("{:<22} {:>14}  {:>10}  status", "check", "max deviation", "threshold");
    let mut failures: Vec<&CheckRow> = Vec::new();
    for name in &names {
        let group: Vec<&CheckRow> = rows.iter().filter(|r| r.name == *name).collect();
        let worst = group
            .iter()
            .map(|r| r.deviation)
            .fold(f64::NEG_INFINITY, f64::max);
        let kind = group[0].kind;
        let threshold = match kind {
            CheckKind::Formula => format!("{tol:.1e}"),
            CheckKind::Search => format!("{search_tol:.1e}"),
            CheckKind::Structural => "exact".into(),
        };
        let ok = group.iter().all(|r| r.passes(tol, search_tol));
        println!(
            "{:<22} {:>14.3e}  {:>10}  {}",
            name,
            worst,
            threshold,
            if ok { "ok" } else { "FAIL" }
        );
        failures.extend(group.into_iter().filter(|r| !r.passes(tol, search_tol)));
    }

    if failures.is_empty() {
        println!("all checks passed");
        0
    } else {
        println!();
        for f in &failures {
            println!(
                "FAIL {} ({}): deviation {:.3e}",
                f.name, f.context, f.deviation
            );
        }
        println!("{} check(s) failed", failures.len());
        EXIT_VERIFY_FAILED
    }
}
