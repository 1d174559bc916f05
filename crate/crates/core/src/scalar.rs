use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Values a sampled function may return: real or complex.
///
/// Finite-difference stencils only need vector-space operations over `f64`,
/// so the same estimators serve real test functions and complex wavefunctions.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn is_finite(&self) -> bool;
    fn magnitude(&self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}
