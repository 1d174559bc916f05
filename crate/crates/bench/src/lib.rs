//! Fixtures shared by the benchmarks.

use std::f64::consts::PI;

use confschro_core::{
    CartesianSolution, Complex64, Order, PhysicalParams, PolarSolution, QuantumNumbers, WaveVector,
};

/// An excited polar state in `N = 4`, `D_s = 3.6`.
pub fn polar_state(beta: f64) -> PolarSolution {
    let params = PhysicalParams::natural(Order::new(beta).unwrap());
    let qn = QuantumNumbers::new(2, vec![1, 1]).unwrap();
    PolarSolution::new(qn, 3.6, 1.3, params, Complex64::new(1.0, 0.0)).unwrap()
}

/// A raw polar point for [`polar_state`] away from every axis.
pub fn polar_point(beta: f64) -> Vec<f64> {
    let o = Order::new(beta).unwrap();
    vec![1.7, o.unreduce(0.4 * PI), o.unreduce(0.6 * PI), o.unreduce(1.3 * PI)]
}

pub fn cartesian_state(beta: f64) -> CartesianSolution {
    let params = PhysicalParams::natural(Order::new(beta).unwrap());
    CartesianSolution::new(
        WaveVector::new(vec![0.9, 1.2, 0.7]).unwrap(),
        2.6,
        params,
        Complex64::new(1.0, 0.0),
    )
    .unwrap()
}
