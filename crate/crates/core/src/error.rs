use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: rule has an empty left-hand side")]
    EmptyLhs { line: usize },
    #[error("line {line}, column {col}: symbol `{glyph}` is not in the declared alphabet")]
    UnknownSymbol { glyph: String, line: usize, col: usize },
    #[error("missing `init:` line")]
    MissingInit,
    #[error("reserved symbol `{glyph}` used by an operand")]
    ReservedSymbolCollision { glyph: String },
    #[error("invalid interpolation: {0}")]
    Interpolation(String),
    #[error("invalid sequence: {0}")]
    Sequence(String),
    #[error("horizon too short: {layers} layers available, at least {needed} required")]
    HorizonTooShort { layers: usize, needed: usize },
    #[error("turing machine line {line}: {msg}")]
    TmParse { line: usize, msg: String },
    #[error("turing machine invalid: {0}")]
    TmInvalid(String),
    #[error("T-halter validation failed: {0}")]
    NotTHalter(String),
    #[error("unknown zoo entry or parameter: {0}")]
    Zoo(String),
    #[error("{0}")]
    Io(String),
}

/// Coarse category used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Syntax { .. }
            | Error::EmptyLhs { .. }
            | Error::UnknownSymbol { .. }
            | Error::MissingInit
            | Error::TmParse { .. } => ErrorKind::Parse,
            Error::Io(_) => ErrorKind::Resource,
            _ => ErrorKind::Validation,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
