use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 1,
            CliError::Unsupported(_) => 2,
            CliError::Io(_) => 3,
        })
    }
}

impl From<bayes_bounds::Error> for CliError {
    fn from(e: bayes_bounds::Error) -> Self {
        use bayes_bounds::Error as E;
        match e {
            E::Unsupported(_) | E::MismatchedFamily(_) | E::IntegrationFailure { .. } => {
                CliError::Unsupported(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}
