//! File formats, results catalog, seeded generators and acceptance checks
//! for the `berge-forge` command-line tool.

pub mod catalog;
pub mod cli;
pub mod fuzz;
pub mod io;
pub mod verify;

use std::path::Path;

pub use io::ParseError;

/// Tool version recorded in catalog entries.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] berge_forge_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
