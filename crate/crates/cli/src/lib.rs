//! Command-line front end: the pipeline language, report records and
//! command dispatch behind the `poincare` binary.

pub mod commands;
pub mod dsl;
pub mod report;

pub use commands::{execute, Cli, CliError};
