use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("rank deficiency: {0}")]
    Rank(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("generator coverage: {0}")]
    Coverage(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported extension: {0}")]
    UnsupportedExtension(String),
    #[error("missing structure: {0}")]
    MissingStructure(String),
    /// An identity that must hold by construction did not. Always a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
