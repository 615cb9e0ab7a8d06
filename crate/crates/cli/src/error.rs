use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: soliton_forge::Error,
    },
    #[error(transparent)]
    Core(#[from] soliton_forge::Error),
    #[error("golden mismatch: {0}")]
    GoldenMismatch(String),
    #[error("{0} soundness violation(s)")]
    Soundness(usize),
    #[error("{0} completeness discrepancies (strict mode)")]
    Strict(usize),
    #[error("writing {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
}

impl CliError {
    /// 1 internal, 2 validation, 3 golden or soundness mismatch.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Write { .. } => 1,
            CliError::Read { .. } | CliError::Input { .. } | CliError::Core(_) => 2,
            CliError::GoldenMismatch(_) | CliError::Soundness(_) | CliError::Strict(_) => 3,
        }
    }
}
