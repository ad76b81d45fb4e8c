use thiserror::Error;

/// Command failures, split by who has to fix them.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad descriptor, flags or parameters. Exit code 2.
    #[error("{0}")]
    Input(String),
    /// The environment refused the output (unwritable path, closed pipe). Exit code 3.
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Output(_) => 3,
        }
    }
}

impl From<sagin_core::Error> for CliError {
    fn from(e: sagin_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
