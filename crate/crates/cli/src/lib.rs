//! Command-line front end for `folium-core`.
//!
//! The binary is a thin wrapper around [`run`]; everything it prints comes
//! back as a string so tests can drive commands without spawning processes.

pub mod args;
pub mod commands;
pub mod error;
pub mod plot;
pub mod verify;

pub use args::Cli;
pub use commands::{run, Outcome};
pub use error::CliError;
