use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{0}`: {1}")]
    Io(String, String),

    #[error("invalid job at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("invalid job: {0}")]
    Input(String),

    #[error(transparent)]
    Engine(#[from] funcech::Error),
}

impl CliError {
    /// 1 for failed internal consistency checks, 2 for anything wrong with the input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(
                funcech::Error::LadderBroken { .. }
                | funcech::Error::RectangleBroken { .. }
                | funcech::Error::OracleViolation(_)
                | funcech::Error::NotAChainMap { .. }
                | funcech::Error::NonComposable(_),
            ) => 1,
            _ => 2,
        }
    }
}
