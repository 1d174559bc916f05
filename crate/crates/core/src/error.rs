use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("function evaluation produced a non-finite value at t = {t}")]
    Evaluation { t: f64 },

    #[error("conformable derivative depth {0} is not supported (max 4)")]
    UnsupportedDepth(u32),

    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("argument {u} outside the validated series range (u <= {limit})")]
    OutOfRange { u: f64, limit: f64 },

    #[error("degenerate Gegenbauer parameter alpha = {alpha}")]
    DegenerateParameter { alpha: f64 },

    #[error("coordinate singularity: {0}")]
    CoordinateSingularity(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
