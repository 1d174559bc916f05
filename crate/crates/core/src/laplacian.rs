//! The conformable scalar Laplacian in N dimensions and the stationary
//! Schrödinger residual built on it.
//!
//! Derivatives are taken pointwise, one axis at a time with every other
//! coordinate frozen, through [`crate::calculus`].

use crate::calculus::{conformable_deriv, conformable_deriv2, Order};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Points closer than this to a coordinate axis (or with a sine factor this
/// small) are rejected instead of extrapolated.
pub const AXIS_GUARD: f64 = 1e-6;

/// Spatial coordinate count and the per-axis fractional parameters `α_i`.
///
/// The fractional dimension is `D_s = Σ α_i`; in single-parameter mode
/// `α_1 = … = α_{N-1} = 1` and `D_s = α_N + (N - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionSpec {
    alphas: Vec<f64>,
}

impl DimensionSpec {
    pub fn single_parameter(n: usize, ds: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(format!("n = {n} must be >= 2")));
        }
        let nf = n as f64;
        if !(ds.is_finite() && ds > nf - 1.0 && ds <= nf) {
            return Err(Error::InvalidDimension(format!("ds = {ds} must lie in ({}, {n}]", n - 1)));
        }
        let mut alphas = vec![1.0; n];
        alphas[n - 1] = ds - (nf - 1.0);
        Ok(DimensionSpec { alphas })
    }

    pub fn per_axis(alphas: Vec<f64>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::InvalidDimension("need at least 2 axes".into()));
        }
        if let Some(a) = alphas.iter().find(|a| !(**a > 0.0 && **a <= 1.0)) {
            return Err(Error::InvalidDimension(format!("alpha = {a} must lie in (0, 1]")));
        }
        Ok(DimensionSpec { alphas })
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn ds(&self) -> f64 {
        self.alphas.iter().sum()
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }
}

/// Conformable Planck constant `ħ_β`, mass `m` (entering as `m^β`) and order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    hbar_beta: f64,
    mass: f64,
    order: Order,
}

impl PhysicalParams {
    pub fn new(hbar_beta: f64, mass: f64, order: Order) -> Result<Self> {
        if !(hbar_beta.is_finite() && hbar_beta > 0.0) {
            return Err(Error::Parameter(format!("hbar_beta = {hbar_beta} must be > 0")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::Parameter(format!("mass = {mass} must be > 0")));
        }
        Ok(PhysicalParams { hbar_beta, mass, order })
    }

    /// `ħ_β = m = 1`.
    pub fn natural(order: Order) -> Self {
        PhysicalParams { hbar_beta: 1.0, mass: 1.0, order }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn hbar_beta(&self) -> f64 {
        self.hbar_beta
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// `m^β`.
    pub fn mass_beta(&self) -> f64 {
        self.order.power(self.mass)
    }

    /// `ħ_β^β`, the constant in front of the time derivative.
    pub fn hbar_pow_beta(&self) -> f64 {
        self.order.power(self.hbar_beta)
    }

    /// `2 m^β / ħ_β^{2β}`, converting energies to squared wavenumbers.
    pub fn energy_coefficient(&self) -> f64 {
        2.0 * self.mass_beta() / self.hbar_beta.powf(2.0 * self.order.beta())
    }
}

/// Coordinate frame a field is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    Cartesian,
    Polar,
}

/// Restriction of `f` to the line through `point` along `axis`.
fn along<'a, V, F: Fn(&[f64]) -> V>(f: &'a F, point: &'a [f64], axis: usize) -> impl Fn(f64) -> V + 'a {
    move |t| {
        let mut p = point.to_vec();
        p[axis] = t;
        f(&p)
    }
}

fn check_len(point: &[f64], n: usize) -> Result<()> {
    if point.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!("point has {} coordinates, expected {n}", point.len())))
    }
}

fn check_coordinate(v: f64, what: &str) -> Result<()> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("{what} = {v} must be > 0")));
    }
    if v < AXIS_GUARD {
        return Err(Error::CoordinateSingularity(format!("{what} = {v} is too close to the axis")));
    }
    Ok(())
}

/// `Σ_i [D^{2β}_{x_i} f + β(α_i - 1)/x_i^β · D^β_{x_i} f]` at a point with
/// positive raw coordinates.
pub fn laplacian_cartesian<V: Scalar, F: Fn(&[f64]) -> V>(
    f: F,
    point: &[f64],
    dims: &DimensionSpec,
    order: Order,
) -> Result<V> {
    check_len(point, dims.n())?;
    for (i, &x) in point.iter().enumerate() {
        check_coordinate(x, &format!("x_{}", i + 1))?;
    }
    let beta = order.beta();
    let mut acc = V::zero();
    for (i, (&x, &alpha)) in point.iter().zip(dims.alphas()).enumerate() {
        let line = along(&f, point, i);
        acc = acc + conformable_deriv2(&line, x, order)?;
        if alpha != 1.0 {
            let drift = beta * (alpha - 1.0) / order.power(x);
            acc = acc + conformable_deriv(&line, x, order)? * drift;
        }
    }
    Ok(acc)
}

/// The polar form of the Laplacian at a raw point `(r, θ_1, …, θ_{N-1})`.
///
/// With `u_j = θ_j^β / β`:
///
/// ```text
/// D^{2β}_r + β(D_s-1)/r^β D^β_r
///   + Σ_j β²/r^{2β} · Π_{a<j} sin⁻² u_a · [D^{2β}_{θ_j} + (D_s-j-1)/tan u_j · D^β_{θ_j}]
/// ```
///
/// The last angle's coefficient is `D_s - N`.
pub fn laplacian_polar<V: Scalar, F: Fn(&[f64]) -> V>(
    f: F,
    point: &[f64],
    dims: &DimensionSpec,
    order: Order,
) -> Result<V> {
    let n = dims.n();
    check_len(point, n)?;
    let ds = dims.ds();
    let beta = order.beta();
    let r = point[0];
    check_coordinate(r, "r")?;

    let reduced: Vec<f64> = point[1..].iter().map(|&t| order.reduced(t)).collect();
    for (j, (&theta, &u)) in point[1..].iter().zip(&reduced).enumerate() {
        check_coordinate(theta, &format!("theta_{}", j + 1))?;
        let coefficient = ds - (j as f64 + 2.0);
        let needs_sine = j + 1 < n - 1 || coefficient != 0.0;
        if needs_sine && u.sin().abs() < AXIS_GUARD {
            return Err(Error::CoordinateSingularity(format!(
                "sin(u_{}) = {} vanishes at the point",
                j + 1,
                u.sin()
            )));
        }
    }

    let radial = along(&f, point, 0);
    let mut acc = conformable_deriv2(&radial, r, order)?
        + conformable_deriv(&radial, r, order)? * (beta * (ds - 1.0) / order.power(r));

    let mut prefactor = beta * beta / order.power(r).powi(2);
    for (j, &u) in reduced.iter().enumerate() {
        let axis = j + 1;
        let line = along(&f, point, axis);
        let theta = point[axis];
        let coefficient = ds - (axis as f64 + 1.0);
        let mut block = conformable_deriv2(&line, theta, order)?;
        if coefficient != 0.0 {
            block = block + conformable_deriv(&line, theta, order)? * (coefficient / u.tan());
        }
        acc = acc + block * prefactor;
        prefactor /= u.sin().powi(2);
    }
    Ok(acc)
}

/// A real potential `V` at a raw point.
pub type Potential<'a> = &'a dyn Fn(&[f64]) -> f64;

/// `∇^{2β}_D ψ - (2m^β/ħ_β^{2β}) (V - E) ψ` at a point.
pub fn schrodinger_residual<V, F>(
    psi: F,
    potential: Option<Potential<'_>>,
    energy: f64,
    point: &[f64],
    dims: &DimensionSpec,
    params: &PhysicalParams,
    frame: Frame,
) -> Result<V>
where
    V: Scalar,
    F: Fn(&[f64]) -> V,
{
    let order = params.order();
    let value = psi(point);
    if !value.is_finite() {
        return Err(Error::Evaluation { t: point[0] });
    }
    let lap = match frame {
        Frame::Cartesian => laplacian_cartesian(&psi, point, dims, order)?,
        Frame::Polar => laplacian_polar(&psi, point, dims, order)?,
    };
    let v = potential.map_or(0.0, |p| p(point));
    Ok(lap - value * (params.energy_coefficient() * (v - energy)))
}
