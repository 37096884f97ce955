use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("vector has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("weight {0} is not in the orbit of the requested fundamental weight")]
    NotInOrbit(String),

    #[error("weight {0} is not minuscule")]
    NotMinuscule(String),

    #[error("Weyl group of order {order} exceeds the enumeration guard {guard}")]
    GroupTooLarge { order: u128, guard: u128 },

    #[error("walk enumeration exceeded the result guard {limit}")]
    WalkGuard { limit: usize },

    #[error("no generic base point found after {attempts} attempts")]
    Genericity { attempts: usize },

    #[error("invalid alcove path at step {step}: {reason}")]
    InvalidPath { step: usize, reason: String },

    #[error("pattern mismatch at index {index}: {reason}")]
    PatternMismatch { index: usize, reason: String },

    #[error("type {0} is only supported with the conjectural flag")]
    Conjectural(String),

    #[error("type {0} is not supported by this operation")]
    Unsupported(String),

    #[error("minuscule decomposition search budget exhausted for {0}")]
    DecompositionBudget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed document: {0}")]
    Json(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
