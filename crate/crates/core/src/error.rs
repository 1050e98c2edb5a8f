use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("invalid set-valued tableau: {0}")]
    InvalidTableau(String),

    #[error("partition {0} is not a rectangle")]
    NotRectangular(String),

    #[error("straightening depth limit {limit} exceeded on sequence {seq:?}")]
    DepthExceeded { seq: Vec<i64>, limit: usize },

    #[error("slot {slot} out of range for tensor of arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver is not of Dynkin type")]
    NotDynkin,

    #[error("operation requires a quiver of type A")]
    NotTypeA,

    #[error("dimension vector length {found} does not match {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<usize>),

    #[error("orbit is inconsistent with the dimension vector: {0}")]
    InconsistentOrbit(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid resolution pair: {0}")]
    InvalidPair(String),

    #[error("directed partition invariant violated: {0}")]
    NotDirected(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
