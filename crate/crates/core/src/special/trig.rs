use crate::calculus::Order;
use crate::error::{Error, Result};

fn reduced_angle(theta: f64, order: Order) -> Result<f64> {
    if theta.is_finite() && theta > 0.0 {
        Ok(order.reduced(theta))
    } else {
        Err(Error::Domain(format!("conformable angle must be > 0, got {theta}")))
    }
}

/// `sin(θ^β / β)`.
pub fn conformable_sin(theta: f64, order: Order) -> Result<f64> {
    Ok(reduced_angle(theta, order)?.sin())
}

/// `cos(θ^β / β)`.
pub fn conformable_cos(theta: f64, order: Order) -> Result<f64> {
    Ok(reduced_angle(theta, order)?.cos())
}
