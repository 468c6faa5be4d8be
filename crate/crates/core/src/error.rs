use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid root system type {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("cannot parse root system type {0:?}")]
    UnknownType(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a root of this system")]
    NotARoot(String),

    #[error("root string of {alpha} through {gamma} is undefined when gamma = ±alpha")]
    DegenerateString { alpha: String, gamma: String },

    #[error("elements belong to different Lie algebras")]
    MixedAlgebras,

    #[error("element is not fixed by the compact conjugation")]
    NotCompact,

    #[error("index out of range: {0}")]
    InvalidIndex(String),

    #[error("{0}")]
    OutsideSubspace(String),

    #[error(
        "no long root at level 1 of the highest-root grading of {root_system}: \
         the symplectic groups Sp(n) have only short roots there, so the construction does not apply"
    )]
    NoDelta { root_system: String },

    #[error("unknown space {0:?}")]
    UnknownSpace(String),

    #[error("space {name} violates the catalog bound: {bound}")]
    CatalogBound { name: String, bound: String },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = LieError> = std::result::Result<T, E>;
