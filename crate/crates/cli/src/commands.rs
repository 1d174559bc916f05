//! The subcommands, writing to caller-supplied sinks so they can be tested
//! without spawning a process.

use std::io::Write;

use confschro_core::audit::PointResidual;
use confschro_core::calculus::{conformable_deriv, conformable_deriv_limit};
use confschro_core::freeparticle::enumerate_chains;
use confschro_core::geometry::polar_to_cartesian;
use confschro_core::{ConformalPolar, Frame, Order};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Run;
use crate::error::CliError;
use crate::functions::Builtin;

pub const DEFAULT_TOLERANCE: f64 = 1e-3;
pub const TOLERANCE_ENV: &str = "CONFSCHRO_TOLERANCE";

/// Audit tolerance from the environment, falling back to 1e-3.
pub fn tolerance_from_env() -> Result<f64, CliError> {
    match std::env::var(TOLERANCE_ENV) {
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(CliError::usage(format!("{TOLERANCE_ENV} = {v:?} is not a positive number"))),
        },
        Err(_) => Ok(DEFAULT_TOLERANCE),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivReport {
    pub identity: f64,
    pub limit: f64,
}

impl DerivReport {
    pub fn difference(&self) -> f64 {
        self.identity - self.limit
    }
}

/// Conformable derivative of a builtin at `t`, by the identity
/// `t^{1-β} f'(t)` and by the difference quotient at `epsilon`.
pub fn deriv(
    f: &Builtin,
    beta: f64,
    t: f64,
    epsilon: f64,
    out: &mut impl Write,
) -> Result<DerivReport, CliError> {
    if !(t.is_finite() && t > 0.0) {
        return Err(CliError::usage(format!("t must be > 0, got {t}")));
    }
    let order = Order::new(beta)?;
    let g = |x: f64| f.eval(x);
    let report = DerivReport {
        identity: conformable_deriv(g, t, order)?,
        limit: conformable_deriv_limit(g, t, order, epsilon)?,
    };
    writeln!(out, "identity   {}", report.identity)?;
    writeln!(out, "limit      {}", report.limit)?;
    writeln!(out, "difference {}", report.difference())?;
    Ok(report)
}

/// Column names for a run's CSV.
pub fn csv_header(run: &Run) -> Vec<String> {
    let n = run.state.n_dims();
    let mut cols = Vec::with_capacity(2 * n + 3);
    match run.state.frame() {
        Frame::Polar => {
            cols.push("r".to_string());
            cols.extend((1..n).map(|j| format!("theta_{j}")));
        }
        Frame::Cartesian => cols.extend((1..=n).map(|i| format!("x_{i}"))),
    }
    cols.extend((1..=n).map(|i| format!("xb_{i}")));
    cols.extend(["psi_re", "psi_im", "residual"].map(String::from));
    cols
}

/// Conformable Cartesian components `x_i^β` of a raw grid point.
pub fn conformable_components(run: &Run, point: &[f64]) -> Result<Vec<f64>, CliError> {
    let order = run.state.params().order();
    Ok(match run.state.frame() {
        Frame::Cartesian => point.iter().map(|&x| order.power(x)).collect(),
        Frame::Polar => {
            let p = ConformalPolar::from_raw(point[0], &point[1..], order)?;
            polar_to_cartesian(&p).xbeta().to_vec()
        }
    })
}

fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveSummary {
    pub rows: usize,
    pub skipped: usize,
    pub max_residual: f64,
}

/// Samples the state on the grid and writes one CSV row per point.
///
/// Points are evaluated in parallel; rows are written in grid order. Points
/// where the state or its residual cannot be evaluated are left out and
/// counted.
pub fn solve(run: &Run, out: &mut impl Write) -> Result<SolveSummary, CliError> {
    let points = run.grid_points();
    let rows: Vec<Option<String>> = points
        .par_iter()
        .map(|p| {
            let r = run.state.residual(p).ok()?;
            let xb = conformable_components(run, p).ok()?;
            let fields: Vec<String> =
                p.iter().chain(&xb).chain(&[r.psi.re, r.psi.im, r.scaled]).map(|&v| fmt_num(v)).collect();
            Some(fields.join(","))
        })
        .collect();

    writeln!(out, "{}", csv_header(run).join(","))?;
    let mut summary = SolveSummary { rows: 0, skipped: 0, max_residual: 0.0 };
    for row in &rows {
        match row {
            Some(line) => {
                writeln!(out, "{line}")?;
                summary.rows += 1;
                // reparse instead of recomputing: the written value is what counts
                let last = line.rsplit(',').next().unwrap_or("nan");
                summary.max_residual = summary.max_residual.max(last.parse().unwrap_or(f64::NAN));
            }
            None => summary.skipped += 1,
        }
    }
    Ok(summary)
}

/// JSON report of an audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub frame: String,
    pub n_dims: usize,
    pub ds: f64,
    pub beta: f64,
    pub energy: f64,
    /// Energy the equation was posed with (differs from `energy` in control runs).
    pub audited_energy: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub points: usize,
    pub skipped: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Uniform random points inside the grid box.
pub fn random_points(run: &Run, num_points: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..num_points)
        .map(|_| {
            run.axes
                .iter()
                .map(|a| if a.max > a.min { rng.gen_range(a.min..=a.max) } else { a.min })
                .collect()
        })
        .collect()
}

/// Scaled residuals at `num_points` seeded random points, with the equation
/// posed at `energy_factor` times the state's energy.
pub fn audit(
    run: &Run,
    num_points: usize,
    seed: u64,
    energy_factor: f64,
    tolerance: f64,
) -> Result<AuditReport, CliError> {
    if num_points == 0 {
        return Err(CliError::usage("audit needs at least one point"));
    }
    if !(energy_factor.is_finite() && energy_factor > 0.0) {
        return Err(CliError::usage(format!("energy factor {energy_factor} must be > 0")));
    }
    let energy = run.state.energy();
    let audited = energy * energy_factor;
    let points = random_points(run, num_points, seed);
    let results: Vec<Option<PointResidual>> =
        points.par_iter().map(|p| run.state.residual_at_energy(p, audited).ok()).collect();

    let mut max: f64 = 0.0;
    let mut total = 0.0;
    let mut count = 0;
    for r in results.iter().flatten() {
        max = max.max(r.scaled);
        total += r.scaled;
        count += 1;
    }
    let mean = if count > 0 { total / count as f64 } else { 0.0 };
    Ok(AuditReport {
        frame: match run.state.frame() {
            Frame::Polar => "polar".into(),
            Frame::Cartesian => "cartesian".into(),
        },
        n_dims: run.state.n_dims(),
        ds: run.state.ds(),
        beta: run.state.params().order().beta(),
        energy,
        audited_energy: audited,
        max_residual: max,
        mean_residual: mean,
        points: count,
        skipped: num_points - count,
        seed,
        tolerance,
        passed: count > 0 && max <= tolerance,
    })
}

/// Lists the monotone chains for `n_dims` coordinates up to `ell_max`.
pub fn qn(n_dims: usize, ell_max: u32, out: &mut impl Write) -> Result<usize, CliError> {
    if n_dims < 3 {
        return Err(CliError::usage(format!("qn needs n >= 3, got {n_dims}")));
    }
    let chains = enumerate_chains(ell_max, n_dims);
    for c in &chains {
        writeln!(out, "{c}")?;
    }
    writeln!(out, "count {}", chains.len())?;
    Ok(chains.len())
}
