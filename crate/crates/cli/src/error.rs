use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("inadmissible state: {0}")]
    Inadmissible(String),
    #[error("invariant failure: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Self::Invariant(_) => 1,
            Self::Config(_) | Self::Io(_) => 2,
            Self::Inadmissible(_) => 3,
        })
    }
}

impl From<superdiscord::Error> for CliError {
    fn from(e: superdiscord::Error) -> Self {
        use superdiscord::Error as E;
        if e.is_inadmissible() {
            return Self::Inadmissible(e.to_string());
        }
        match e {
            E::NoConvergence { .. } | E::NotUnitary { .. } => Self::Invariant(e.to_string()),
            _ => Self::Config(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Config(format!("csv output: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Config(format!("json: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
