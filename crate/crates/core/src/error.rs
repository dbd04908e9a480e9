use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),

    #[error("vertex {0} is not a weak support")]
    NotAWeakSupport(usize),

    #[error("graph of order {n} exceeds the exhaustive-search bound {bound}")]
    OverOracleBound { n: usize, bound: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("line {line}: {source}")]
    BatchLine { line: usize, source: Box<Error> },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
