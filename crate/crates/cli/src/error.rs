use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Verification or graph failure; exit code 1.
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

/// Treats a closed downstream pipe as normal termination.
pub fn tolerate_broken_pipe(r: io::Result<()>) -> CliResult {
    match r {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}
