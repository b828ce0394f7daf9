//! Command-line front end: file formats, argument parsing and command dispatch.

pub mod args;
pub mod format;
pub mod run;

pub use args::Cli;
pub use run::{execute, CliError};
