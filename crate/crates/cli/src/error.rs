use thiserror::Error;

/// Failures the command line reports; each maps to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] confschro_core::Error),
    #[error("cannot read config {path}: {source}")]
    Config { path: String, source: std::io::Error },
    #[error("invalid config: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 2 for anything caused by the invocation or its inputs. Audit failure is
    /// not an error and gets its exit code elsewhere.
    pub fn exit_code(&self) -> u8 {
        2
    }
}
