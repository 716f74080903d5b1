use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("ground set size {size} exceeds the supported maximum {max}")]
    GroundSetTooLarge { size: usize, max: usize },

    #[error("poset size must be positive")]
    EmptyPoset,

    #[error("duplicate cover relation {lower} < {upper}")]
    DuplicateCover { lower: usize, upper: usize },

    #[error("cover relation {lower} < {upper} closes a cycle")]
    CyclicCovers { lower: usize, upper: usize },

    #[error("relation is not a strict partial order")]
    NotAPartialOrder,

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    #[error("subset is not downward closed")]
    NotAnIdeal,

    #[error("subset is not stable")]
    NotStable,

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("inputs must be distinct")]
    IdenticalInputs,

    #[error("inputs contain a duplicate entry")]
    DuplicateInput,

    #[error("graph is not perfect")]
    NotPerfect,

    #[error("the given ideals do not form a skeleton clique")]
    NotAnOrderClique,

    #[error("the given stable sets do not form a skeleton clique")]
    NotAStabClique,

    #[error("clique family member {0} is not a maximal clique")]
    NotAMaximalClique(Subset),

    #[error("vertex list contains duplicate points")]
    DuplicateVertices,

    #[error("constraint {row} has {got} coefficients, expected {expected}")]
    DimensionMismatch {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("ambient vertex counts differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

use crate::subset::Subset;

pub type Result<T> = std::result::Result<T, Error>;
