//! Special functions solving the separated conformable equations.
//!
//! Under `u = x^β` the conformable derivative becomes `D^β = β d/du`, so each
//! conformable ODE here is a classical one in `u`: the conformable Bessel
//! functions are `J_q(ρ^β)` and the conformable Gegenbauer polynomials are
//! `C_m^{(γ+1/2)}(x^β)`.

mod bessel;
mod dd;
mod gamma;
mod gegenbauer;
mod trig;

pub use bessel::{
    bessel_series, conformable_bessel_j, conformable_bessel_j_neg, leading_coefficient, BesselOrderQ,
    SERIES_LIMIT,
};
pub use gamma::{gamma_real, reciprocal_gamma, rising_factorial};
pub use gegenbauer::{
    assoc_conformable_gegenbauer, assoc_gegenbauer_at, conformable_argument, conformable_gegenbauer,
    conformable_gegenbauer_deriv, gegenbauer_c, gegenbauer_deriv_at, GegenbauerSpec,
};
pub use trig::{conformable_cos, conformable_sin};
