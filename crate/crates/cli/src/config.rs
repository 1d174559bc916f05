//! Run configuration: a JSON file whose fields can all be overridden by flags.

use std::f64::consts::{PI, TAU};
use std::path::Path;

use clap::{Args, ValueEnum};
use confschro_core::audit::FreeParticle;
use confschro_core::freeparticle::angular_factor;
use confschro_core::{
    CartesianSolution, Complex64, Error, Order, PhysicalParams, PolarSolution, QuantumNumbers,
    SeparationConvention, WaveVector,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FrameName {
    Polar,
    Cartesian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ConventionName {
    #[default]
    Certified,
    Shifted,
}

impl From<ConventionName> for SeparationConvention {
    fn from(c: ConventionName) -> Self {
        match c {
            ConventionName::Certified => SeparationConvention::Certified,
            ConventionName::Shifted => SeparationConvention::Shifted,
        }
    }
}

/// One value for every axis, or one per axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PerAxis<T> {
    All(T),
    Each(Vec<T>),
}

impl<T: Copy> PerAxis<T> {
    fn expand(&self, n: usize, what: &str) -> Result<Vec<T>, CliError> {
        match self {
            PerAxis::All(v) => Ok(vec![*v; n]),
            PerAxis::Each(v) if v.len() == n => Ok(v.clone()),
            PerAxis::Each(v) => {
                Err(CliError::usage(format!("grid {what} has {} entries, expected 1 or {n}", v.len())))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub min: PerAxis<f64>,
    pub max: PerAxis<f64>,
    pub count: PerAxis<usize>,
}

/// Fields as they appear in the JSON file. Everything is optional here so
/// that flags can fill the gaps; [`RunConfig::build`] enforces what a run
/// actually needs.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub beta: Option<f64>,
    pub n_dims: Option<usize>,
    pub ds: Option<f64>,
    pub frame: Option<FrameName>,
    /// `[ℓ, m_0, …, m_{N-3}]`.
    pub quantum_numbers: Option<Vec<u32>>,
    pub wave_vector: Option<Vec<f64>>,
    pub energy: Option<f64>,
    pub hbar_beta: Option<f64>,
    pub mass: Option<f64>,
    pub grid: Option<GridSpec>,
    /// `[re, im]`, default `[1, 0]`.
    pub amplitude: Option<[f64; 2]>,
    pub seed: Option<u64>,
    pub convention: Option<ConventionName>,
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',').map(|p| p.trim().parse::<T>().map_err(|_| format!("bad list entry {p:?}"))).collect()
}

fn parse_per_axis<T: std::str::FromStr + Copy>(s: &str) -> Result<PerAxis<T>, String> {
    let v = parse_list(s)?;
    Ok(if v.len() == 1 { PerAxis::All(v[0]) } else { PerAxis::Each(v) })
}

fn parse_amplitude(s: &str) -> Result<[f64; 2], String> {
    match parse_list::<f64>(s)?.as_slice() {
        [re] => Ok([*re, 0.0]),
        [re, im] => Ok([*re, *im]),
        _ => Err("amplitude is re or re,im".into()),
    }
}

/// Flags shared by `solve` and `audit`.
#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// JSON run configuration
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Number of spatial coordinates N
    #[arg(long = "n")]
    pub n_dims: Option<usize>,
    #[arg(long)]
    pub ds: Option<f64>,
    #[arg(long, value_enum)]
    pub frame: Option<FrameName>,
    /// Quantum numbers ℓ,m_0,…,m_{N-3}
    #[arg(long = "qn", value_delimiter = ',')]
    pub quantum_numbers: Option<Vec<u32>>,
    /// Wave vector k_1,…,k_N
    #[arg(long = "k", value_delimiter = ',', allow_hyphen_values = true)]
    pub wave_vector: Option<Vec<f64>>,
    #[arg(long)]
    pub energy: Option<f64>,
    #[arg(long = "hbar")]
    pub hbar_beta: Option<f64>,
    #[arg(long)]
    pub mass: Option<f64>,
    /// Lower grid bound, one value or one per axis
    #[arg(long, value_parser = parse_per_axis::<f64>)]
    pub grid_min: Option<PerAxis<f64>>,
    #[arg(long, value_parser = parse_per_axis::<f64>)]
    pub grid_max: Option<PerAxis<f64>>,
    #[arg(long, value_parser = parse_per_axis::<usize>)]
    pub grid_count: Option<PerAxis<usize>>,
    /// re or re,im
    #[arg(long, value_parser = parse_amplitude, allow_hyphen_values = true)]
    pub amplitude: Option<[f64; 2]>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub convention: Option<ConventionName>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Config { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    /// The config file (if any) with flags taking precedence.
    pub fn from_args(args: &ConfigArgs) -> Result<Self, CliError> {
        let mut cfg = match &args.config {
            Some(p) => Self::load(p)?,
            None => RunConfig::default(),
        };
        macro_rules! take {
            ($($field:ident),*) => {
                $(if let Some(v) = &args.$field { cfg.$field = Some(v.clone()); })*
            };
        }
        take!(
            beta,
            n_dims,
            ds,
            frame,
            quantum_numbers,
            wave_vector,
            energy,
            hbar_beta,
            mass,
            amplitude,
            seed,
            convention
        );
        if args.grid_min.is_some() || args.grid_max.is_some() || args.grid_count.is_some() {
            let base = cfg.grid.clone();
            let pick = |flag: &Option<PerAxis<f64>>, file: Option<PerAxis<f64>>, what: &str| {
                flag.clone().or(file).ok_or_else(|| CliError::usage(format!("grid {what} missing")))
            };
            cfg.grid = Some(GridSpec {
                min: pick(&args.grid_min, base.as_ref().map(|g| g.min.clone()), "min")?,
                max: pick(&args.grid_max, base.as_ref().map(|g| g.max.clone()), "max")?,
                count: args
                    .grid_count
                    .clone()
                    .or(base.map(|g| g.count))
                    .ok_or_else(|| CliError::usage("grid count missing"))?,
            });
        }
        Ok(cfg)
    }

    /// Validates the configuration and constructs the state and grid.
    pub fn build(&self) -> Result<Run, CliError> {
        let need = |name: &str| CliError::usage(format!("config is missing {name}"));
        let beta = self.beta.ok_or_else(|| need("beta"))?;
        let n = self.n_dims.ok_or_else(|| need("n_dims"))?;
        let ds = self.ds.ok_or_else(|| need("ds"))?;
        let frame = self.frame.ok_or_else(|| need("frame"))?;
        if n < 2 {
            return Err(CliError::usage(format!("n_dims = {n} must be at least 2")));
        }
        let order = Order::new(beta)?;
        let params = PhysicalParams::new(self.hbar_beta.unwrap_or(1.0), self.mass.unwrap_or(1.0), order)?;
        let [re, im] = self.amplitude.unwrap_or([1.0, 0.0]);
        let amp = Complex64::new(re, im);
        let convention: SeparationConvention = self.convention.unwrap_or_default().into();

        let state = match frame {
            FrameName::Polar => {
                if self.wave_vector.is_some() {
                    return Err(CliError::usage("wave_vector is only meaningful in the cartesian frame"));
                }
                let qn = self.quantum_numbers.as_ref().ok_or_else(|| need("quantum_numbers"))?;
                let energy = self.energy.ok_or_else(|| need("energy"))?;
                let (&ell, chain) =
                    qn.split_first().ok_or_else(|| CliError::usage("quantum_numbers must start with ell"))?;
                let qn = QuantumNumbers::new(ell, chain.to_vec())?;
                if qn.n_dims() != n {
                    return Err(CliError::usage(format!(
                        "n_dims = {n} needs {} quantum numbers, got {}",
                        n - 1,
                        chain.len() + 1
                    )));
                }
                let s = PolarSolution::new(qn, ds, energy, params, amp)?.with_convention(convention);
                // reject degenerate Gegenbauer parameters up front rather than
                // skipping every grid point
                for j in 1..n {
                    if let Err(e @ Error::DegenerateParameter { .. }) =
                        angular_factor(j, order.unreduce(1.0), &s.qn, ds, order, convention)
                    {
                        return Err(e.into());
                    }
                }
                FreeParticle::Polar(s)
            }
            FrameName::Cartesian => {
                if self.quantum_numbers.is_some() || self.energy.is_some() {
                    return Err(CliError::usage(
                        "the cartesian frame takes wave_vector only; its energy follows from k",
                    ));
                }
                let k = self.wave_vector.clone().ok_or_else(|| need("wave_vector"))?;
                if k.len() != n {
                    return Err(CliError::usage(format!(
                        "wave_vector has {} components, n_dims = {n}",
                        k.len()
                    )));
                }
                FreeParticle::Cartesian(CartesianSolution::new(WaveVector::new(k)?, ds, params, amp)?)
            }
        };

        let grid = self.grid.as_ref().ok_or_else(|| need("grid"))?;
        let axes = build_axes(grid, n, frame, order)?;
        Ok(Run { state, axes, seed: self.seed.unwrap_or(0) })
    }
}

/// One grid axis in raw coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

fn build_axes(grid: &GridSpec, n: usize, frame: FrameName, order: Order) -> Result<Vec<Axis>, CliError> {
    let min = grid.min.expand(n, "min")?;
    let max = grid.max.expand(n, "max")?;
    let count = grid.count.expand(n, "count")?;
    let mut axes = Vec::with_capacity(n);
    for i in 0..n {
        let (lo, hi, c) = (min[i], max[i], count[i]);
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo) {
            return Err(CliError::usage(format!("grid axis {i}: need 0 < min <= max, got [{lo}, {hi}]")));
        }
        if c == 0 {
            return Err(CliError::usage(format!("grid axis {i}: count must be >= 1")));
        }
        if frame == FrameName::Polar && i > 0 {
            let u = order.reduced(hi);
            let (ok, limit) = if i < n - 1 { (u <= PI, PI) } else { (u < TAU, TAU) };
            if !ok {
                return Err(CliError::usage(format!(
                    "grid axis {i}: reduced angle theta^beta/beta reaches {u} (limit {limit})"
                )));
            }
        }
        axes.push(Axis { min: lo, max: hi, count: c });
    }
    Ok(axes)
}

/// A validated run: the state and the sampling region.
#[derive(Debug, Clone)]
pub struct Run {
    pub state: FreeParticle,
    pub axes: Vec<Axis>,
    pub seed: u64,
}

impl Run {
    /// Grid points in row-major order, last axis fastest.
    pub fn grid_points(&self) -> Vec<Vec<f64>> {
        let total: usize = self.axes.iter().map(|a| a.count).product();
        let mut out = Vec::with_capacity(total);
        let mut idx = vec![0usize; self.axes.len()];
        for _ in 0..total {
            out.push(idx.iter().zip(&self.axes).map(|(&i, a)| a.value(i)).collect());
            for d in (0..idx.len()).rev() {
                idx[d] += 1;
                if idx[d] < self.axes[d].count {
                    break;
                }
                idx[d] = 0;
            }
        }
        out
    }
}
