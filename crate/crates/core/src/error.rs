use thiserror::Error;

/// Errors raised by the parsers and engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("invalid framework: {0}")]
    InvalidFramework(String),

    #[error("invalid rule base: {0}")]
    InvalidRuleBase(String),

    #[error("priority cycle through rule `{0}`")]
    PriorityCycle(String),

    #[error("cyclic rule base: argument `{argument}` exceeds the height cap of {cap}")]
    CyclicRuleBase { argument: String, cap: usize },

    #[error("rule base produces more than {0} arguments")]
    TooManyArguments(usize),

    #[error("invalid theory: {0}")]
    InvalidTheory(String),

    #[error("theory has {atoms} atoms, enumeration is limited to {max}")]
    AtomLimit { atoms: usize, max: usize },

    #[error("operation requires a multi-extension semantics, got {0}")]
    UnsupportedSemantics(String),

    #[error("corpus case `{case}`: {message}")]
    Corpus { case: String, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
