use thiserror::Error;

/// Errors raised by graph construction, parsing, and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("colouring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("colour {colour} at vertex {vertex} is outside 1..={k}")]
    ColourOutOfRange { vertex: usize, colour: usize, k: usize },
    #[error("k = {k} out of range (need 1 <= k <= {n})")]
    KOutOfRange { k: usize, n: usize },
    #[error("not a valid role colouring")]
    InvalidColouring,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a cograph")]
    NotACograph,
    #[error("no colouring exists: {0}")]
    Infeasible(String),
    #[error("{0}")]
    Formula(String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}
