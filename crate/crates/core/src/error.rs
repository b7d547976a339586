use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coordinate {coord} is not valid for {kind}")]
    Coordinate { kind: String, coord: String },

    #[error("unknown element id {0}")]
    Lookup(usize),

    #[error("malformed patch: {0}")]
    Malformed(String),

    #[error("wrong patch kind: expected {expected}, found {found}")]
    Kind { expected: String, found: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("palette of {0} labels exceeds the 64-label limit")]
    PaletteTooLarge(u32),

    #[error("invalid search configuration: {0}")]
    Config(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("instance digest mismatch: expected {expected}, found {found}")]
    DigestMismatch { expected: String, found: String },
}

pub type Result<T> = std::result::Result<T, Error>;
