use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<usize>),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("search budget of {budget} nodes exceeded; chromatic index undecided")]
    Undecided { budget: u64 },

    #[error("graph is not friendly-edge-colorable")]
    NotFriendly,

    #[error("graph is class II; decomposition applies to class I graphs only")]
    ClassTwo,

    #[error("extremal graph is unique for delta={delta}, nu={nu}; no alternative exists")]
    UniqueExtremal { delta: usize, nu: usize },

    /// An internal verification failed. This is a counterexample to a
    /// structural theorem and should never happen.
    #[error("verification failed: {0}")]
    Violation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
