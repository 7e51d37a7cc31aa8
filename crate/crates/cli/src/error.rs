use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] msfractal::Error),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::InvalidConfig(_) => "InvalidConfig",
        }
    }

    /// Process exit status for this error.
    pub fn exit_status(&self) -> i32 {
        2
    }
}
