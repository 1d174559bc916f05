//! Free-particle solutions of the stationary conformable Schrödinger equation.
//!
//! Polar frame: `ψ = R(r) Π_j Θ_j(θ_j)` with a conformable Bessel radial
//! factor and associated conformable Gegenbauer angular factors indexed by a
//! monotone quantum-number chain `m_{N-3} ≤ … ≤ m_0 ≤ ℓ`.
//!
//! Cartesian frame: plane waves `exp(i k_j x_j^β / β)` on the first `N-1`
//! axes and a Bessel tail `w^q J_q(w)`, `w = k_N x_N^β / β`, on the last.

use num_complex::Complex64;

use crate::calculus::Order;
use crate::error::{Error, Result};
use crate::laplacian::PhysicalParams;
use crate::special::{assoc_gegenbauer_at, bessel_series, BesselOrderQ, GegenbauerSpec};

/// Which set of separation constants and Gegenbauer parameters to use.
///
/// `Certified` makes every angular factor an exact solution of its separated
/// equation, so assembled wavefunctions have vanishing Schrödinger residual.
/// `Shifted` uses `λ_r = ℓ(ℓ + D_s - 3)`, `λ_j = m_{j-1}(m_{j-1} + D_s - j - 3)`
/// and `γ_j = (D_s - j - 3)/2`, i.e. the angular part with `D_s → D_s - 1`.
/// It is kept for comparison; those states do not solve the polar equation
/// for `ℓ ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SeparationConvention {
    #[default]
    Certified,
    Shifted,
}

impl SeparationConvention {
    fn shift(self) -> f64 {
        match self {
            SeparationConvention::Certified => 0.0,
            SeparationConvention::Shifted => 1.0,
        }
    }

    /// Gegenbauer `γ_j` for angle `j` (1-based).
    pub fn gamma_param(self, j: usize, ds: f64) -> f64 {
        (ds - self.shift() - j as f64 - 2.0) / 2.0
    }

    /// `λ_r`.
    pub fn lambda_radial(self, ell: u32, ds: f64) -> f64 {
        let l = ell as f64;
        l * (l + ds - self.shift() - 2.0)
    }

    /// `λ_j` for `j ≥ 1`, generated by `m_{j-1}`.
    pub fn lambda_angular(self, j: usize, m: u32, ds: f64) -> f64 {
        let m = m as f64;
        m * (m + ds - self.shift() - j as f64 - 2.0)
    }
}

/// Quantum numbers `ℓ; m_0, …, m_{N-3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    ell: u32,
    m_chain: Vec<u32>,
}

impl QuantumNumbers {
    /// Checks `m_{N-3} ≤ … ≤ m_0 ≤ ℓ`.
    pub fn new(ell: u32, m_chain: Vec<u32>) -> Result<Self> {
        let mut upper = ell;
        for (i, &m) in m_chain.iter().enumerate() {
            if m > upper {
                return Err(Error::Parameter(format!(
                    "quantum chain is not monotone at m_{i} = {m} > {upper}"
                )));
            }
            upper = m;
        }
        Ok(QuantumNumbers { ell, m_chain })
    }

    /// All zeros for `n_dims` spatial coordinates.
    pub fn ground(n_dims: usize) -> Self {
        QuantumNumbers { ell: 0, m_chain: vec![0; n_dims.saturating_sub(2)] }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn m_chain(&self) -> &[u32] {
        &self.m_chain
    }

    /// Number of spatial coordinates this chain belongs to.
    pub fn n_dims(&self) -> usize {
        self.m_chain.len() + 2
    }

    fn check_dims(&self, n_dims: usize) -> Result<()> {
        if self.n_dims() == n_dims {
            Ok(())
        } else {
            Err(Error::InvalidDimension(format!(
                "chain of length {} does not fit n = {n_dims}",
                self.m_chain.len()
            )))
        }
    }

    /// Degree `n_j` and associated order `ν_j` of angular factor `j` (1-based).
    fn angular_indices(&self, j: usize) -> (u32, u32) {
        let degree = if j == 1 { self.ell } else { self.m_chain[j - 2] };
        let assoc = self.m_chain.get(j - 1).copied().unwrap_or(0);
        (degree, assoc)
    }
}

impl std::fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.ell)?;
        let parts: Vec<String> = self.m_chain.iter().map(|m| m.to_string()).collect();
        write!(f, "{})", parts.join(","))
    }
}

/// Every monotone chain with `ℓ ≤ ell_max`, in lexicographic order.
pub fn enumerate_chains(ell_max: u32, n_dims: usize) -> Vec<QuantumNumbers> {
    if n_dims < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(n_dims - 2);
    for ell in 0..=ell_max {
        extend_chain(ell, ell, n_dims - 2, &mut chain, &mut out);
    }
    out
}

fn extend_chain(ell: u32, upper: u32, remaining: usize, chain: &mut Vec<u32>, out: &mut Vec<QuantumNumbers>) {
    if remaining == 0 {
        out.push(QuantumNumbers { ell, m_chain: chain.clone() });
        return;
    }
    for m in 0..=upper {
        chain.push(m);
        extend_chain(ell, m, remaining - 1, chain, out);
        chain.pop();
    }
}

/// `λ_r` and `λ_1 … λ_{N-2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationConstants {
    pub lambda_r: f64,
    pub lambda_j: Vec<f64>,
}

pub fn separation_constants(
    qn: &QuantumNumbers,
    ds: f64,
    convention: SeparationConvention,
) -> SeparationConstants {
    SeparationConstants {
        lambda_r: convention.lambda_radial(qn.ell, ds),
        lambda_j: qn
            .m_chain
            .iter()
            .enumerate()
            .map(|(i, &m)| convention.lambda_angular(i + 1, m, ds))
            .collect(),
    }
}

/// Radial Bessel order `q = √((D_s/2 - 1)² + λ_r)`.
pub fn radial_order(ds: f64, ell: u32, convention: SeparationConvention) -> Result<BesselOrderQ> {
    let radicand = (ds / 2.0 - 1.0).powi(2) + convention.lambda_radial(ell, ds);
    if !(radicand >= 0.0) {
        return Err(Error::InvalidDimension(format!(
            "radial order radicand {radicand} < 0 for ds = {ds}, ell = {ell}"
        )));
    }
    BesselOrderQ::new(radicand.sqrt())
}

/// `K = √(2 m^β E^β / ħ_β^{2β}) / β`.
pub fn wavenumber(energy: f64, params: &PhysicalParams) -> Result<f64> {
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::Domain(format!("free-particle energy must be > 0, got {energy}")));
    }
    Ok((params.energy_coefficient() * energy).sqrt() / params.order().beta())
}

/// Bessel order of the Cartesian last-axis factor, `q = (1 + N - D_s)/2`.
pub fn cartesian_tail_order(ds: f64, n_dims: usize) -> Result<BesselOrderQ> {
    let n = n_dims as f64;
    if !(ds > n - 1.0 && ds <= n) {
        return Err(Error::InvalidDimension(format!("ds = {ds} must lie in ({}, {n_dims}]", n - 1.0)));
    }
    BesselOrderQ::new((1.0 + n - ds) / 2.0)
}

/// `E^β = ħ_β^{2β}/(2m^β) Σ k_j²`.
pub fn total_energy(k: &[f64], params: &PhysicalParams) -> f64 {
    k.iter().map(|v| v * v).sum::<f64>() / params.energy_coefficient()
}

/// `exp(-i E^β t^β / (β ħ_β^β))`.
pub fn time_factor(energy: f64, t: f64, params: &PhysicalParams) -> Complex64 {
    if t <= 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let order = params.order();
    let phase = -energy * order.reduced(t) / params.hbar_pow_beta();
    Complex64::from_polar(1.0, phase)
}

/// Regular radial factor `amp · U^{1 - D_s/2} J_q(U)` with `U = K r^β`.
pub fn radial_wavefunction(
    r: f64,
    energy: f64,
    params: &PhysicalParams,
    ds: f64,
    ell: u32,
    amp: Complex64,
    convention: SeparationConvention,
) -> Result<Complex64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let k = wavenumber(energy, params)?;
    let q = radial_order(ds, ell, convention)?;
    let u = k * params.order().power(r);
    let j = bessel_series(q.value(), u)?;
    Ok(amp * (u.powf(1.0 - ds / 2.0) * j))
}

/// Angular factor `Θ_j` (1-based `j`) at raw angle `θ_j`.
///
/// An associated conformable Gegenbauer function of degree `n_j` (`ℓ` for
/// `j = 1`, `m_{j-2}` otherwise), associated order `ν_j = m_{j-1}` (0 on the
/// last angle) and parameter `γ_j`, evaluated where `x_j^β = cos u_j`.
pub fn angular_factor(
    j: usize,
    theta: f64,
    qn: &QuantumNumbers,
    ds: f64,
    order: Order,
    convention: SeparationConvention,
) -> Result<f64> {
    let n_dims = qn.n_dims();
    if j == 0 || j >= n_dims {
        return Err(Error::Parameter(format!("angle index {j} outside 1..={}", n_dims - 1)));
    }
    if !(theta > 0.0) {
        return Err(Error::Domain(format!("theta_{j} must be > 0, got {theta}")));
    }
    let u = order.reduced(theta);
    let (degree, assoc) = qn.angular_indices(j);
    let spec = GegenbauerSpec::new(degree, convention.gamma_param(j, ds), assoc);
    assoc_gegenbauer_at(spec, u.cos(), order)
}

/// A polar free-particle state with fixed quantum numbers and energy.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarSolution {
    pub qn: QuantumNumbers,
    pub ds: f64,
    pub energy: f64,
    pub params: PhysicalParams,
    pub amp: Complex64,
    pub convention: SeparationConvention,
}

impl PolarSolution {
    pub fn new(
        qn: QuantumNumbers,
        ds: f64,
        energy: f64,
        params: PhysicalParams,
        amp: Complex64,
    ) -> Result<Self> {
        let n = qn.n_dims() as f64;
        if !(ds > n - 1.0 && ds <= n) {
            return Err(Error::InvalidDimension(format!("ds = {ds} must lie in ({}, {n}]", n - 1.0)));
        }
        wavenumber(energy, &params)?;
        if !(amp.re.is_finite() && amp.im.is_finite()) {
            return Err(Error::Parameter("amplitude must be finite".into()));
        }
        Ok(PolarSolution { qn, ds, energy, params, amp, convention: SeparationConvention::Certified })
    }

    pub fn with_convention(mut self, convention: SeparationConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn n_dims(&self) -> usize {
        self.qn.n_dims()
    }

    pub fn wavenumber(&self) -> f64 {
        wavenumber(self.energy, &self.params).expect("energy validated at construction")
    }

    pub fn radial(&self, r: f64) -> Result<Complex64> {
        radial_wavefunction(r, self.energy, &self.params, self.ds, self.qn.ell, self.amp, self.convention)
    }

    pub fn angular(&self, j: usize, theta: f64) -> Result<f64> {
        angular_factor(j, theta, &self.qn, self.ds, self.params.order(), self.convention)
    }

    /// `ψ` at a raw point `(r, θ_1, …, θ_{N-1})`.
    pub fn evaluate(&self, point: &[f64]) -> Result<Complex64> {
        assemble_polar(self, point)
    }
}

/// `R(r) · Π_j Θ_j(θ_j)`.
pub fn assemble_polar(solution: &PolarSolution, point: &[f64]) -> Result<Complex64> {
    solution.qn.check_dims(point.len())?;
    let mut psi = solution.radial(point[0])?;
    for (j, &theta) in point[1..].iter().enumerate() {
        psi *= solution.angular(j + 1, theta)?;
    }
    Ok(psi)
}

/// Wave vector `(k_{x_1}, …, k_{x_N})`; the last component must be positive.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveVector(Vec<f64>);

impl WaveVector {
    pub fn new(k: Vec<f64>) -> Result<Self> {
        if k.len() < 2 {
            return Err(Error::InvalidDimension("wave vector needs at least 2 components".into()));
        }
        if k.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parameter("wave vector components must be finite".into()));
        }
        if !(k[k.len() - 1] > 0.0) {
            return Err(Error::Parameter("last wave vector component must be > 0".into()));
        }
        Ok(WaveVector(k))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }
}

/// A Cartesian free-particle state.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianSolution {
    pub k: WaveVector,
    pub ds: f64,
    pub params: PhysicalParams,
    pub amp: Complex64,
}

impl CartesianSolution {
    pub fn new(k: WaveVector, ds: f64, params: PhysicalParams, amp: Complex64) -> Result<Self> {
        cartesian_tail_order(ds, k.n())?;
        if !(amp.re.is_finite() && amp.im.is_finite()) {
            return Err(Error::Parameter("amplitude must be finite".into()));
        }
        Ok(CartesianSolution { k, ds, params, amp })
    }

    pub fn n_dims(&self) -> usize {
        self.k.n()
    }

    pub fn energy(&self) -> f64 {
        total_energy(self.k.components(), &self.params)
    }

    /// Last-axis factor `w^q J_q(w)`, `w = k_N x_N^β / β`.
    pub fn tail(&self, x_last: f64) -> Result<f64> {
        if !(x_last > 0.0) {
            return Err(Error::Domain(format!("x_N must be > 0, got {x_last}")));
        }
        let q = cartesian_tail_order(self.ds, self.n_dims())?;
        let k_last = self.k.0[self.n_dims() - 1];
        let w = k_last * self.params.order().reduced(x_last);
        Ok(w.powf(q.value()) * bessel_series(q.value(), w)?)
    }

    pub fn evaluate(&self, point: &[f64]) -> Result<Complex64> {
        assemble_cartesian(self, point)
    }
}

/// `amp · Π_{j<N} exp(i k_j x_j^β/β) · w^q J_q(w)`.
pub fn assemble_cartesian(solution: &CartesianSolution, point: &[f64]) -> Result<Complex64> {
    let n = solution.n_dims();
    if point.len() != n {
        return Err(Error::InvalidDimension(format!("point has {} coordinates, expected {n}", point.len())));
    }
    if let Some(x) = point.iter().find(|x| !(**x > 0.0)) {
        return Err(Error::Domain(format!("Cartesian coordinates must be > 0, got {x}")));
    }
    let order = solution.params.order();
    let phase: f64 =
        point[..n - 1].iter().zip(solution.k.components()).map(|(&x, &k)| k * order.reduced(x)).sum();
    let tail = solution.tail(point[n - 1])?;
    Ok(solution.amp * Complex64::from_polar(1.0, phase) * tail)
}
