//! Command-line front end for AltLex mining: sentence alignment, mining with
//! report emission, and alignment-agreement scoring.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{cmd_align, cmd_kappa, cmd_mine};
pub use config::{InputKind, RunArgs, RunConfig, UsageError};
