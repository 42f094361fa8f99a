use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {0} outside supported range 1..=8")]
    DimensionOutOfRange(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("point outside the oracle domain: {0}")]
    OutOfDomain(String),
    #[error("colouring kind is not certifiable: {0}")]
    NotCertifiable(String),
    #[error("window too short to distinguish: {0}")]
    WindowTooShort(String),
    #[error("empty enumeration space: {0}")]
    EmptyEnumeration(String),
    #[error("distinguished point is not an extreme point of the pattern")]
    OriginNotExtreme,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("geometry mismatch: {0}")]
    Mismatch(String),
    #[error("colouring is not proper on the probed points: {0}")]
    ImproperColouring(String),
}

pub type Result<T> = std::result::Result<T, Error>;
