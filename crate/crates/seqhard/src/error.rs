use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("property failure: {0}")]
    Property(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 property failure, 2 input error, 3 budget.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Property(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<seqhard_core::Error> for CliError {
    fn from(e: seqhard_core::Error) -> Self {
        match e {
            seqhard_core::Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<crate::formats::ParseError> for CliError {
    fn from(e: crate::formats::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}
