use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Schema { path: String, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] ctxlab::Error),
    #[error("certificate failed to re-verify: {0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(ctxlab::Error::Internal(_)) | CliError::Verify(_) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}
