use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} rejected")]
    SelfLoopRejected(usize),

    #[error("graph is not connected")]
    DisconnectedGraph,

    #[error("graph has {0} vertex(es); at least 2 are required")]
    TooFewVertices(usize),

    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),

    #[error("vertex set has {0} member(s); at least 2 are required")]
    SetTooSmall(usize),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("invalid family spec `{0}`")]
    InvalidSpec(String),

    #[error("isomorphism check limited to {limit} vertices, got {n}")]
    TooLargeForIso { n: usize, limit: usize },

    #[error("naive oracle limited to {limit} vertices, got {n}")]
    TooLargeForOracle { n: usize, limit: usize },

    #[error("mutually maximally distant graph has {n} vertices, cover search limited to {limit}")]
    MmdTooLarge { n: usize, limit: usize },

    #[error("guard violated: {0}")]
    GuardViolated(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
