use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} is outside the supported range 1..={max}", max = crate::MAX_VARIABLES)]
    VariableCount(u32),

    #[error("minterm {minterm} is out of range for {n} variables")]
    MintermOutOfRange { minterm: u32, n: u32 },

    #[error("minterm {0} is listed as both care and don't-care")]
    Overlap(u32),

    #[error("invalid cube (least={least}, esum={esum}) for {n} variables")]
    InvalidCube { least: u32, esum: u32, n: u32 },

    #[error("function has no minterms")]
    EmptyFunction,

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable '{0}'")]
    UnknownVariable(char),

    #[error("contradictory literal: '{0}' appears both plain and complemented")]
    ContradictoryLiteral(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("care minterm {0} is not covered by any prime implicant")]
    UncoveredMinterm(u32),

    #[error("{0}")]
    Range(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
