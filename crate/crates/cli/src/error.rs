use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("polynomial is not square-free (gcd(f, f') = {0}); rerun with --square-free auto")]
    NotSquareFree(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::NotSquareFree(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

impl From<dsc2::Error> for CliError {
    fn from(e: dsc2::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
