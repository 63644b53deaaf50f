use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring descriptor mismatch: {0}")]
    Descriptor(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("map is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("operation requires a field as base ring: {0}")]
    NotAField(String),

    #[error("broken complex: {0}")]
    BrokenComplex(String),

    #[error("simplicial structure: {0}")]
    Simplicial(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
