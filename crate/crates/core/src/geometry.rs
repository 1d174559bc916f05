//! Conformable N-dimensional polar coordinates.
//!
//! Points are stored through their conformable components: `x_i^β` on the
//! Cartesian side, and `r^β` with the reduced angles `u_a = θ_a^β / β` on the
//! polar side. The maps between them are then the textbook hyperspherical
//! ones:
//!
//! ```text
//! x_i^β = r^β sin u_1 ⋯ sin u_{i-1} cos u_i     (i < n)
//! x_n^β = r^β sin u_1 ⋯ sin u_{n-1}
//! ```

use std::f64::consts::{PI, TAU};

use crate::calculus::Order;
use crate::error::{Error, Result};

/// A point given by its conformable Cartesian components `x_i^β`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalCartesian {
    xbeta: Vec<f64>,
}

impl ConformalCartesian {
    pub fn new(xbeta: Vec<f64>) -> Result<Self> {
        if xbeta.len() < 2 {
            return Err(Error::InvalidDimension(format!("need at least 2 coordinates, got {}", xbeta.len())));
        }
        if xbeta.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("non-finite Cartesian component".into()));
        }
        Ok(ConformalCartesian { xbeta })
    }

    /// Builds the conformable components from raw positive coordinates.
    pub fn from_raw(x: &[f64], order: Order) -> Result<Self> {
        Self::new(x.iter().map(|&v| order.power(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.xbeta.len()
    }

    pub fn xbeta(&self) -> &[f64] {
        &self.xbeta
    }
}

/// A point given by `r^β` and the reduced angles `u_a = θ_a^β / β`.
///
/// `u_a ∈ [0, π]` for `a ≤ n-2` and `u_{n-1} ∈ [0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalPolar {
    rbeta: f64,
    angles: Vec<f64>,
}

impl ConformalPolar {
    pub fn new(rbeta: f64, angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::InvalidDimension("need at least one angle (n >= 2)".into()));
        }
        if !(rbeta.is_finite() && rbeta > 0.0) {
            return Err(Error::Domain(format!("r^beta must be > 0, got {rbeta}")));
        }
        let last = angles.len() - 1;
        for (a, &u) in angles.iter().enumerate() {
            let ok = if a < last { (0.0..=PI).contains(&u) } else { (0.0..TAU).contains(&u) };
            if !ok {
                return Err(Error::Domain(format!("reduced angle u_{} = {u} out of range", a + 1)));
            }
        }
        Ok(ConformalPolar { rbeta, angles })
    }

    /// From raw `r` and raw angles `θ_a` at order `β`.
    pub fn from_raw(r: f64, thetas: &[f64], order: Order) -> Result<Self> {
        Self::new(order.power(r), thetas.iter().map(|&t| order.reduced(t)).collect())
    }

    /// Raw `(r, θ_1, …, θ_{n-1})` at order `β`.
    pub fn to_raw(&self, order: Order) -> Vec<f64> {
        let beta = order.beta();
        std::iter::once(self.rbeta.powf(1.0 / beta))
            .chain(self.angles.iter().map(|&u| order.unreduce(u)))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.angles.len() + 1
    }

    pub fn rbeta(&self) -> f64 {
        self.rbeta
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }
}

pub fn polar_to_cartesian(p: &ConformalPolar) -> ConformalCartesian {
    let n = p.n();
    let mut xbeta = Vec::with_capacity(n);
    let mut sines = p.rbeta;
    for &u in &p.angles {
        xbeta.push(sines * u.cos());
        sines *= u.sin();
    }
    xbeta.push(sines);
    ConformalCartesian { xbeta }
}

/// Inverse map.
///
/// The polar angles use `atan2(tail, x_a^β)`, equal to
/// `arccos(x_a^β / √(Σ_{i≥a} x_i^{2β}))` but accurate near 0 and π. When a
/// tail norm vanishes the remaining angles are undefined and set to 0.
pub fn cartesian_to_polar(c: &ConformalCartesian) -> Result<ConformalPolar> {
    let x = &c.xbeta;
    let n = x.len();
    // tails[a] = |(x_a, …, x_n)|
    let mut tails = vec![0.0; n + 1];
    for i in (0..n).rev() {
        tails[i] = x[i].hypot(tails[i + 1]);
    }
    if tails[0] == 0.0 {
        return Err(Error::CoordinateSingularity("direction of the zero vector is undefined".into()));
    }
    let mut angles = Vec::with_capacity(n - 1);
    for a in 0..n - 2 {
        angles.push(if tails[a] == 0.0 { 0.0 } else { tails[a + 1].atan2(x[a]) });
    }
    let (y, z) = (x[n - 2], x[n - 1]);
    let mut last = if y == 0.0 && z == 0.0 { 0.0 } else { z.atan2(y) };
    if last < 0.0 {
        last += TAU;
    }
    if last >= TAU {
        last = 0.0;
    }
    angles.push(last);
    Ok(ConformalPolar { rbeta: tails[0], angles })
}

/// Recovers raw coordinates `x_i = (x_i^β)^{1/β}`.
pub fn raw_coordinates(c: &ConformalCartesian, order: Order) -> Result<Vec<f64>> {
    let beta = order.beta();
    c.xbeta
        .iter()
        .map(|&v| {
            if v >= 0.0 {
                Ok(v.powf(1.0 / beta))
            } else if beta == 1.0 {
                Ok(v)
            } else {
                Err(Error::Domain(format!("negative component {v} has no real {beta}-th root")))
            }
        })
        .collect()
}
