//! Conformable calculus in fractional-dimensional space.
//!
//! This crate provides
//!
//! * numerical conformable derivatives of order `β ∈ (0, 1]` ([`calculus`]),
//! * conformable Bessel functions and (associated) conformable Gegenbauer
//!   polynomials ([`special`]),
//! * conformable N-dimensional polar coordinates ([`geometry`]),
//! * the conformable Laplacian in Cartesian and polar form, and the
//!   stationary Schrödinger residual ([`laplacian`]),
//! * closed-form free-particle solutions in both frames ([`freeparticle`]).
//!
//! Every closed form can be checked by applying the Laplacian numerically and
//! bounding the Schrödinger residual; see [`audit`].

// `!(x > 0.0)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod calculus;
mod error;
pub mod freeparticle;
pub mod geometry;
pub mod laplacian;
mod scalar;
pub mod special;

pub use calculus::Order;
pub use error::{Error, Result};
pub use freeparticle::{
    CartesianSolution, PolarSolution, QuantumNumbers, SeparationConstants, SeparationConvention, WaveVector,
};
pub use geometry::{ConformalCartesian, ConformalPolar};
pub use laplacian::{DimensionSpec, Frame, PhysicalParams};
pub use num_complex::Complex64;
pub use scalar::Scalar;
pub use special::{BesselOrderQ, GegenbauerSpec};
