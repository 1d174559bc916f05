use crate::calculus::Order;
use crate::error::{Error, Result};
use crate::special::dd::Dd;
use crate::special::gamma::{gamma_real, reciprocal_gamma};

/// Largest `u = ρ^β` the power series is trusted for.
pub const SERIES_LIMIT: f64 = 50.0;
const MAX_TERMS: usize = 200;
const REL_STOP: f64 = 1e-16;

/// Non-negative Bessel order `q`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrderQ(f64);

impl BesselOrderQ {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q >= 0.0 {
            Ok(BesselOrderQ(q))
        } else {
            Err(Error::Parameter(format!("Bessel order q = {q} must be finite and >= 0")))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

fn negative_integer(nu: f64) -> Option<usize> {
    if nu < 0.0 && nu == nu.floor() {
        Some((-nu) as usize)
    } else {
        None
    }
}

/// Classical `J_ν(u)` for real `ν` and `0 ≤ u ≤ 50` by its power series.
///
/// Terms with `1/Γ` at a pole vanish, so `J_{-n} = (-1)^n J_n`. The series
/// is summed in double-double precision because near `u = 50` individual
/// terms reach ~1e19 while the sum is O(0.1).
pub fn bessel_series(nu: f64, u: f64) -> Result<f64> {
    if !nu.is_finite() {
        return Err(Error::Parameter(format!("Bessel order {nu} is not finite")));
    }
    if !(u >= 0.0) {
        return Err(Error::Domain(format!("Bessel argument must be >= 0, got {u}")));
    }
    if u > SERIES_LIMIT {
        return Err(Error::OutOfRange { u, limit: SERIES_LIMIT });
    }

    let first = negative_integer(nu).unwrap_or(0);
    if u == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 || first > 0 {
            Ok(0.0)
        } else {
            Err(Error::Domain(format!("J_{nu} is singular at the origin")))
        };
    }

    let half = u / 2.0;
    // (-1)^s (u/2)^(2s+ν) / (s! Γ(s+ν+1)) at s = first
    let lead_power = 2.0 * first as f64 + nu;
    let mut factorial = 1.0;
    for k in 2..=first {
        factorial *= k as f64;
    }
    let sign = if first.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lead = sign * half.powf(lead_power) * reciprocal_gamma(first as f64 + nu + 1.0) / factorial;
    if lead == 0.0 {
        return Ok(0.0);
    }

    let z = Dd::from_f64(half) * half;
    let mut term = Dd::from_f64(1.0);
    let mut sum = Dd::from_f64(1.0);
    for s in first..first + MAX_TERMS {
        let s1 = (s + 1) as f64;
        let denom = Dd::sum(s1, nu) * s1;
        term = -(term * z) / denom;
        sum += term;
        if term.hi.abs() <= REL_STOP * sum.hi.abs() {
            break;
        }
    }
    Ok(lead * sum.to_f64())
}

fn reduced_argument(rho: f64, order: Order) -> Result<f64> {
    if !(rho >= 0.0) {
        return Err(Error::Domain(format!("rho must be >= 0, got {rho}")));
    }
    let u = order.power(rho);
    if u > SERIES_LIMIT {
        return Err(Error::OutOfRange { u, limit: SERIES_LIMIT });
    }
    Ok(u)
}

/// First conformable Bessel function `J^β_q(ρ) = J_q(ρ^β)`.
pub fn conformable_bessel_j(q: BesselOrderQ, rho: f64, order: Order) -> Result<f64> {
    bessel_series(q.value(), reduced_argument(rho, order)?)
}

/// Second solution `J^β_{-q}(ρ) = J_{-q}(ρ^β)`.
pub fn conformable_bessel_j_neg(q: BesselOrderQ, rho: f64, order: Order) -> Result<f64> {
    bessel_series(-q.value(), reduced_argument(rho, order)?)
}

/// Leading small-argument coefficient: `J_q(u) ~ (u/2)^q / Γ(q+1)`.
pub fn leading_coefficient(q: BesselOrderQ) -> Result<f64> {
    Ok(0.5f64.powf(q.value()) / gamma_real(q.value() + 1.0)?)
}
