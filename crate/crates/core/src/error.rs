use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("empty partition")]
    Empty,
    #[error("empty block")]
    EmptyBlock,
    #[error("malformed partition text: {0}")]
    Malformed(String),
    #[error("element {0} appears more than once")]
    DuplicateElement(usize),
    #[error("element {0} is missing; blocks must cover 1..n")]
    MissingElement(usize),
    #[error("elements must be positive, got {0}")]
    NonPositive(i64),
    #[error("compact format needs n <= 9, got n = {0}")]
    CompactTooLarge(usize),
    #[error("block count {k} out of range 1..={n}")]
    BlockCountOutOfRange { n: usize, k: usize },
    #[error("word violates restricted growth at position {position} (value {value})")]
    InvalidGrowth { position: usize, value: usize },
    #[error("arc ({left}, {right}) is not of the form 1 <= i < j <= {n}")]
    ArcOutOfRange { n: usize, left: usize, right: usize },
    #[error("vertex {0} used twice as the same endpoint")]
    VertexReused(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { n: usize, vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a partial permutation matrix: row or column {0} has more than one 1")]
    NotPartialPermutation(usize),
    #[error("entry must be 0 or 1")]
    NotZeroOne,
    #[error("matrix is not square")]
    NotSquare,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("n = {n} exceeds the poset limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("n must be at least 1")]
    Empty,
    #[error("unsupported export format {0:?}")]
    UnsupportedFormat(String),
}
