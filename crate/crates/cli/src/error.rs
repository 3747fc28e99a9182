use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] tsvf_core::Error),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        Self::Config(msg.into())
    }

    /// 0 success, 2 config error, 3 impossible post-selection,
    /// 4 enumeration cap, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        use tsvf_core::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::Core(E::ImpossiblePostSelection { .. }) => 3,
            CliError::Core(E::EnumerationCap { .. }) => 4,
            CliError::Core(
                E::InvalidParameter { .. } | E::InvalidMeasurement(_) | E::NotUnitary { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
