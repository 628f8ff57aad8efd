use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: cannot parse {token:?} as a vertex index")]
    Parse { line: usize, token: String },
    #[error("line {line}: expected two vertex indices")]
    MalformedLine { line: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{s} does not divide 2t(t+1) for t={t}")]
    Divisibility { s: usize, t: usize },
    #[error("ordering is not a permutation of 0..{edges}")]
    NotAPermutation { edges: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph too large: {vertices} vertices exceeds limit {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("too many edges for brute force: {edges} > {limit} (use force to override)")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("too many vertices for subset DP: {vertices} > {limit} (use force to override)")]
    TooManyVertices { vertices: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no closed form available: {0}")]
    NoClosedForm(String),
}

impl Error {
    /// Size guards that an explicit override could lift, as opposed to bad
    /// input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. } | Error::TooManyEdges { .. } | Error::TooManyVertices { .. }
        )
    }
}
