use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("prerequisite not met: {0}")]
    Prerequisite(String),
    #[error("pauli: {0}")]
    Pauli(String),
    #[error("scenario: {0}")]
    Scenario(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
