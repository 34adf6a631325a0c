use thiserror::Error;

/// Errors raised by the graph, kernel and solver routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric: {0} lists {1} but not vice versa")]
    AsymmetricAdjacency(usize, usize),

    #[error("vertex {0} appears on both sides of the bipartition")]
    OverlappingSides(usize),

    #[error("matching of size {matching} is not maximum: derived cover has size {cover}")]
    KonigMismatch { matching: usize, cover: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("crown construction produced neither a matching nor a valid crown: {0}")]
    CrownGuarantee(String),

    #[error("invalid crown decomposition: {0}")]
    InvalidCrown(#[from] crate::crown::CrownDefect),

    #[error("{what} size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("alphabet size must be at least 2, got {0}")]
    InvalidAlphabet(u64),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("trace cannot be lifted: {0}")]
    NotLiftable(&'static str),

    #[error("trace replay failed: {0}")]
    Replay(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
