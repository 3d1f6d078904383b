//! Command-line front end for `compact_span`: argument definitions,
//! subcommands, and the batch experiment harness.

pub mod cli;
pub mod commands;
pub mod error;
pub mod experiment;
pub mod svg;

pub use error::{exit, CliError, CliResult};
