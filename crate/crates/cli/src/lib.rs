//! Sweeps, fits and saturation checks on top of `hydrent-core`.

pub mod config;
pub mod error;
pub mod fit;
pub mod output;
pub mod saturation;
pub mod state_spec;
pub mod sweep;
pub mod theorem;

pub use error::{CliError, Result};
