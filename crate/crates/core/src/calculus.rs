//! Conformable differentiation of scalar functions of one positive variable.
//!
//! The conformable derivative of order `β` is the limit
//! `T_β f(t) = lim_{ε→0} (f(t + ε t^{1-β}) - f(t)) / ε`, which for a
//! differentiable `f` equals `t^{1-β} f'(t)`. The production estimators use
//! that identity with central finite differences for `f'`;
//! [`conformable_deriv_limit`] keeps the raw difference quotient around as an
//! independent check.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Conformable order `β ∈ (0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    /// Ordinary calculus.
    pub const ONE: Order = Order(1.0);

    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta > 0.0 && beta <= 1.0 {
            Ok(Order(beta))
        } else {
            Err(Error::Parameter(format!("order beta = {beta} must lie in (0, 1]")))
        }
    }

    #[inline]
    pub fn beta(self) -> f64 {
        self.0
    }

    /// `t^β`.
    #[inline]
    pub fn power(self, t: f64) -> f64 {
        t.powf(self.0)
    }

    /// The reduced variable `t^β / β`, in which `D^β` acts as `d/dσ`.
    #[inline]
    pub fn reduced(self, t: f64) -> f64 {
        t.powf(self.0) / self.0
    }

    /// Inverse of [`Order::reduced`]: the `t > 0` with `t^β / β = sigma`.
    #[inline]
    pub fn unreduce(self, sigma: f64) -> f64 {
        (self.0 * sigma).powf(1.0 / self.0)
    }
}

/// Deepest conformable derivative the numerical path supports.
pub const MAX_DEPTH: u32 = 4;

fn check_point(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("conformable derivative needs t > 0, got {t}")))
    }
}

fn sample<V: Scalar, F: Fn(f64) -> V>(f: &F, t: f64) -> Result<V> {
    let v = f(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Evaluation { t })
    }
}

/// Step for the k-th ordinary derivative around `t`.
///
/// k = 1 uses eps^(1/3); higher orders use eps^(1/(k+4)), the balance point of
/// a fourth-order stencil. The stencil (reach 2 or 3) is kept above t/2.
fn step(t: f64, k: u32) -> f64 {
    let exponent = if k == 1 { 1.0 / 3.0 } else { 1.0 / (k as f64 + 4.0) };
    let reach = if k <= 2 { 2.0 } else { 3.0 };
    let h = f64::EPSILON.powf(exponent) * t.abs().max(1.0);
    let h = h.min(t / (2.0 * reach));
    // make t + h exactly representable
    (t + h) - t
}

/// k-th ordinary derivative by a fourth-order central difference, k ≤ 4.
fn ordinary_derivative<V: Scalar, F: Fn(f64) -> V>(f: &F, t: f64, k: u32) -> Result<V> {
    if k == 0 {
        return sample(f, t);
    }
    let h = step(t, k);
    let at = |j: i32| sample(f, t + j as f64 * h);
    // stencils are grouped into symmetric differences so that constants
    // cancel exactly
    let v = match k {
        1 => ((at(1)? - at(-1)?) * 8.0 - (at(2)? - at(-2)?)) / (12.0 * h),
        2 => {
            let c = at(0)?;
            let d1 = (at(1)? - c) + (at(-1)? - c);
            let d2 = (at(2)? - c) + (at(-2)? - c);
            (d1 * 16.0 - d2) / (12.0 * h * h)
        }
        3 => ((at(2)? - at(-2)?) * 8.0 - (at(1)? - at(-1)?) * 13.0 - (at(3)? - at(-3)?)) / (8.0 * h * h * h),
        4 => {
            let c = at(0)?;
            let d1 = (at(1)? - c) + (at(-1)? - c);
            let d2 = (at(2)? - c) + (at(-2)? - c);
            let d3 = (at(3)? - c) + (at(-3)? - c);
            (d2 * 12.0 - d1 * 39.0 - d3) / (6.0 * h * h * h * h)
        }
        _ => return Err(Error::UnsupportedDepth(k)),
    };
    Ok(v)
}

/// Coefficients `c_k` of the n-fold operator `(D^β)^n f = Σ_k c_k t^{k - nβ} f^{(k)}`.
///
/// Applying `D^β = t^{1-β} d/dt` once more maps `c_k ← c_k (k - nβ) + c_{k-1}`.
pub fn operator_coefficients(beta: f64, n: u32) -> Vec<f64> {
    let mut c = vec![1.0];
    for depth in 0..n {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k] += ck * (k as f64 - depth as f64 * beta);
            next[k + 1] += ck;
        }
        c = next;
    }
    c
}

/// `T_β f(t) = t^{1-β} f'(t)`, with `f'` from a 5-point central difference.
pub fn conformable_deriv<V: Scalar, F: Fn(f64) -> V>(f: F, t: f64, order: Order) -> Result<V> {
    check_point(t)?;
    let d1 = ordinary_derivative(&f, t, 1)?;
    Ok(d1 * t.powf(1.0 - order.beta()))
}

/// The difference quotient `(f(t + ε t^{1-β}) - f(t)) / ε` at a finite `ε`.
///
/// First-order accurate in `ε`; no limit is taken.
pub fn conformable_deriv_limit<V: Scalar, F: Fn(f64) -> V>(
    f: F,
    t: f64,
    order: Order,
    epsilon: f64,
) -> Result<V> {
    check_point(t)?;
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::Parameter(format!("epsilon = {epsilon} must be positive")));
    }
    let shifted = t + epsilon * t.powf(1.0 - order.beta());
    Ok((sample(&f, shifted)? - sample(&f, t)?) / epsilon)
}

/// `D^β D^β f(t) = (1-β) t^{1-2β} f'(t) + t^{2-2β} f''(t)`.
pub fn conformable_deriv2<V: Scalar, F: Fn(f64) -> V>(f: F, t: f64, order: Order) -> Result<V> {
    check_point(t)?;
    let beta = order.beta();
    let d1 = ordinary_derivative(&f, t, 1)?;
    let d2 = ordinary_derivative(&f, t, 2)?;
    Ok(d1 * ((1.0 - beta) * t.powf(1.0 - 2.0 * beta)) + d2 * t.powf(2.0 - 2.0 * beta))
}

/// n-fold conformable derivative, `n ≤ 4`; `n = 0` returns `f(t)`.
///
/// Intended for verification. Closed forms should be preferred wherever one
/// exists.
pub fn conformable_deriv_n<V: Scalar, F: Fn(f64) -> V>(f: F, t: f64, order: Order, n: u32) -> Result<V> {
    if n > MAX_DEPTH {
        return Err(Error::UnsupportedDepth(n));
    }
    check_point(t)?;
    let beta = order.beta();
    let coefficients = operator_coefficients(beta, n);
    let mut acc = V::zero();
    for (k, &ck) in coefficients.iter().enumerate() {
        if ck == 0.0 {
            continue;
        }
        let dk = ordinary_derivative(&f, t, k as u32)?;
        acc = acc + dk * (ck * t.powf(k as f64 - n as f64 * beta));
    }
    Ok(acc)
}
