use thiserror::Error;

/// Failures surfaced by the `dnum` commands.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{origin}:{line}:{column}: parse error: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{origin}:{line}:{column}: invalid document: {message}")]
    Invalid {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("unknown mass `{0}`")]
    UnknownMassName(String),
    #[error("the document has no exclusivity data; the D-number distance and the I matrix need it")]
    MissingExclusivity,
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] dnum_core::Error),
}

impl CliError {
    /// Process exit status: 1 usage, 3 numeric failure, 2 everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(dnum_core::Error::NegativeRadicand(_)) => 3,
            _ => 2,
        }
    }
}
