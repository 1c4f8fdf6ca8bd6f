//! File formats and the command-line front-end for `nfh-core`.

pub mod cli;
mod error;
pub mod format;

pub use error::CliError;
