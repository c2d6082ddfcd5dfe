use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge weight {0} outside {{1, 2, 3}}")]
    WeightRange(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("too few distinct degrees for a fit: need at least {needed}, found {found}")]
    TooFewDegrees { needed: usize, found: usize },
    #[error("state length {found} does not match problem size {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("problem has {n} variables, cap for this operation is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("start and end must differ (both {0})")]
    SameEndpoints(usize),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("degenerate regressor: {0}")]
    DegenerateFit(String),
    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
