use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..={max}")]
    Capacity { n: usize, max: usize },

    #[error("loop at vertex {vertex} is not allowed")]
    Loop { vertex: usize },

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("map is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },

    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cycle length {len} outside 2..={n}")]
    CycleLength { len: usize, n: usize },

    #[error("prefix index t={t} outside 1..={n}")]
    PrefixIndex { t: usize, n: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is not sorted non-increasing")]
    NotSorted,

    #[error("invalid family parameters: {0}")]
    Family(String),

    #[error("n={n}, k={k} has r=0: a single family member, no ordering to verify")]
    SingleMember { n: usize, k: usize },

    #[error("ordering check failed: {0}")]
    OrderingViolation(String),

    #[error("order {n} exceeds the {what} cap of {cap}")]
    SearchCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown verification tag `{0}`")]
    UnknownTag(String),
}
