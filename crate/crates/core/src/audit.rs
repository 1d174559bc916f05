//! Residual certification of assembled free-particle solutions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::freeparticle::{CartesianSolution, PolarSolution};
use crate::laplacian::{schrodinger_residual, DimensionSpec, Frame, PhysicalParams};

/// Either kind of free-particle state.
#[derive(Debug, Clone, PartialEq)]
pub enum FreeParticle {
    Polar(PolarSolution),
    Cartesian(CartesianSolution),
}

/// Value and residual of a state at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointResidual {
    pub psi: Complex64,
    pub residual: Complex64,
    /// `|residual| / (κ²|ψ| + 1)` with `κ² = 2m^β|E^β|/ħ_β^{2β}`.
    pub scaled: f64,
}

impl FreeParticle {
    pub fn frame(&self) -> Frame {
        match self {
            FreeParticle::Polar(_) => Frame::Polar,
            FreeParticle::Cartesian(_) => Frame::Cartesian,
        }
    }

    pub fn n_dims(&self) -> usize {
        match self {
            FreeParticle::Polar(s) => s.n_dims(),
            FreeParticle::Cartesian(s) => s.n_dims(),
        }
    }

    pub fn ds(&self) -> f64 {
        match self {
            FreeParticle::Polar(s) => s.ds,
            FreeParticle::Cartesian(s) => s.ds,
        }
    }

    pub fn params(&self) -> &PhysicalParams {
        match self {
            FreeParticle::Polar(s) => &s.params,
            FreeParticle::Cartesian(s) => &s.params,
        }
    }

    pub fn energy(&self) -> f64 {
        match self {
            FreeParticle::Polar(s) => s.energy,
            FreeParticle::Cartesian(s) => s.energy(),
        }
    }

    pub fn dims(&self) -> Result<DimensionSpec> {
        DimensionSpec::single_parameter(self.n_dims(), self.ds())
    }

    pub fn evaluate(&self, point: &[f64]) -> Result<Complex64> {
        match self {
            FreeParticle::Polar(s) => s.evaluate(point),
            FreeParticle::Cartesian(s) => s.evaluate(point),
        }
    }

    /// Residual at the state's own energy.
    pub fn residual(&self, point: &[f64]) -> Result<PointResidual> {
        self.residual_at_energy(point, self.energy())
    }

    /// Residual when the equation is posed with `energy` instead of the
    /// state's own; used for control runs.
    pub fn residual_at_energy(&self, point: &[f64], energy: f64) -> Result<PointResidual> {
        let psi = self.evaluate(point)?;
        let dims = self.dims()?;
        let params = self.params();
        let field = |p: &[f64]| self.evaluate(p).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
        let residual: Complex64 =
            schrodinger_residual(field, None, energy, point, &dims, params, self.frame())?;
        if !(residual.re.is_finite() && residual.im.is_finite()) {
            return Err(Error::Evaluation { t: point[0] });
        }
        let kappa2 = params.energy_coefficient() * energy.abs();
        Ok(PointResidual { psi, residual, scaled: residual.norm() / (kappa2 * psi.norm() + 1.0) })
    }
}

/// Summary of scaled residuals over a set of points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSummary {
    pub max: f64,
    pub mean: f64,
    pub points: usize,
    pub skipped: usize,
}

/// Scaled residuals at each point; points where evaluation fails (axis
/// singularities and the like) are counted as skipped.
pub fn summarize<'a, I>(state: &FreeParticle, points: I, energy: f64) -> ResidualSummary
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut max: f64 = 0.0;
    let mut total = 0.0;
    let mut count = 0;
    let mut skipped = 0;
    for p in points {
        match state.residual_at_energy(p, energy) {
            Ok(r) => {
                max = max.max(r.scaled);
                total += r.scaled;
                count += 1;
            }
            Err(_) => skipped += 1,
        }
    }
    let mean = if count > 0 { total / count as f64 } else { 0.0 };
    ResidualSummary { max, mean, points: count, skipped }
}
