use crate::calculus::Order;
use crate::error::{Error, Result};
use crate::special::gamma::rising_factorial;

/// Degree, parameter and associated order of a conformable Gegenbauer function.
///
/// `gamma_param` is the shifted parameter of the conformable equation; the
/// classical ultraspherical parameter is `alpha = gamma_param + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GegenbauerSpec {
    pub degree: u32,
    pub gamma_param: f64,
    pub assoc_order: u32,
}

impl GegenbauerSpec {
    pub fn new(degree: u32, gamma_param: f64, assoc_order: u32) -> Self {
        GegenbauerSpec { degree, gamma_param, assoc_order }
    }

    pub fn plain(degree: u32, gamma_param: f64) -> Self {
        Self::new(degree, gamma_param, 0)
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.gamma_param + 0.5
    }
}

/// Accepts the classical range `alpha > -1/2`, `alpha != 0` for degree ≥ 1.
///
/// At `alpha = 0` every `C_n` with `n ≥ 1` vanishes identically.
fn check_alpha(alpha: f64, degree: u32) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::Parameter(format!("Gegenbauer parameter alpha = {alpha}")));
    }
    if degree > 0 && (alpha <= -0.5 || alpha == 0.0) {
        return Err(Error::DegenerateParameter { alpha });
    }
    Ok(())
}

fn check_unit(u: f64) -> Result<()> {
    if u.is_finite() && u.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("Gegenbauer argument |x^beta| = {} exceeds 1", u.abs())))
    }
}

/// Maps a conformable argument `x` to `u = x^β`; negative `x` only for `β = 1`.
pub fn conformable_argument(x: f64, order: Order) -> Result<f64> {
    if x >= 0.0 {
        Ok(order.power(x))
    } else if order == Order::ONE {
        Ok(x)
    } else {
        Err(Error::Domain(format!("x^beta is not real for x = {x}, beta = {}", order.beta())))
    }
}

/// Classical `C_n^{(α)}(u)` from the three-term recurrence.
fn recurrence(n: u32, alpha: f64, u: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * alpha * u;
    for k in 2..=n {
        let k = k as f64;
        let next = (2.0 * u * (k + alpha - 1.0) * cur - (k + 2.0 * alpha - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// Ultraspherical polynomial `C_n^{(α)}(u)` for `|u| ≤ 1`.
pub fn gegenbauer_c(n: u32, alpha: f64, u: f64) -> Result<f64> {
    check_alpha(alpha, n)?;
    check_unit(u)?;
    Ok(recurrence(n, alpha, u))
}

/// `D^{mβ} T` expressed in `u = x^β`: `β^m 2^m (α)_m C^{(α+m)}_{n-m}(u)`.
pub fn gegenbauer_deriv_at(spec: GegenbauerSpec, u: f64, order: Order) -> Result<f64> {
    check_unit(u)?;
    let m = spec.assoc_order;
    if m > spec.degree {
        return Ok(0.0);
    }
    let alpha = spec.alpha();
    check_alpha(alpha, spec.degree)?;
    let scale = (2.0 * order.beta()).powi(m as i32) * rising_factorial(alpha, m);
    Ok(scale * recurrence(spec.degree - m, alpha + m as f64, u))
}

/// `(1 - u²)^{m/2} D^{mβ} T` in terms of `u = x^β`.
pub fn assoc_gegenbauer_at(spec: GegenbauerSpec, u: f64, order: Order) -> Result<f64> {
    let d = gegenbauer_deriv_at(spec, u, order)?;
    let m = spec.assoc_order;
    if m == 0 {
        return Ok(d);
    }
    let w = (1.0 - u * u).max(0.0);
    Ok(w.powf(m as f64 / 2.0) * d)
}

/// Conformable Gegenbauer polynomial `T^γ_{βm}(x) = C_m^{(γ+1/2)}(x^β)`.
///
/// Only `degree` and `gamma_param` are used; see
/// [`assoc_conformable_gegenbauer`] for the associated functions.
pub fn conformable_gegenbauer(spec: GegenbauerSpec, x: f64, order: Order) -> Result<f64> {
    let u = conformable_argument(x, order)?;
    gegenbauer_c(spec.degree, spec.alpha(), u)
}

/// `D^{mβ} T^γ_{βm'}(x)` with `m = spec.assoc_order`, `m' = spec.degree`.
pub fn conformable_gegenbauer_deriv(spec: GegenbauerSpec, x: f64, order: Order) -> Result<f64> {
    gegenbauer_deriv_at(spec, conformable_argument(x, order)?, order)
}

/// Associated conformable Gegenbauer function `(1 - x^{2β})^{m/2} D^{mβ} T^γ_{βm'}(x)`.
pub fn assoc_conformable_gegenbauer(spec: GegenbauerSpec, x: f64, order: Order) -> Result<f64> {
    assoc_gegenbauer_at(spec, conformable_argument(x, order)?, order)
}
