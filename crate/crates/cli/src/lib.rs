//! Command-line front end for `confschro-core`.

pub mod commands;
pub mod config;
mod error;
pub mod functions;

pub use error::CliError;
