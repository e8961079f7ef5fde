//! Implementation of the `polynoise` command-line tool.
//!
//! The binary itself is a thin wrapper over [`cli::run`]; everything lives in
//! the library so integration tests can drive the pieces directly.

pub mod bench;
pub mod cli;
pub mod render;
pub mod rng;
pub mod stats;
pub mod variant;

pub use cli::{run, Cli, CliError};
