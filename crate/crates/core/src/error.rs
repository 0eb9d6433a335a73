use thiserror::Error;

/// Errors raised by group constructions and queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds cap {cap} (enumerated {partial} elements before stopping)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("element {0} is not in the group")]
    NotAnElement(String),

    #[error("not a subgroup of the given group")]
    NotASubgroup,

    #[error("subgroups have different parents")]
    ParentMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u64 },

    #[error("group is not {0}-separable")]
    NotSeparable(String),

    #[error("no conjugate witness found for element {0}")]
    NoWitness(String),

    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a counterexample: {0}")]
    NotCounterexample(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
