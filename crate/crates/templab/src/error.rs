use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("no such edge {{{0}, {1}}}")]
    NoSuchEdge(usize, usize),
    #[error("no such contact ({{{0}, {1}}}, {2})")]
    NoSuchContact(usize, usize, u32),
    #[error("label 0 is not allowed; labels are positive")]
    ZeroLabel,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("block is neither edge nor cycle")]
    NotACactus,
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {{{0}, {1}}} is not a bridge")]
    NotABridge(usize, usize),
    #[error("input not temporally connected across bridge")]
    EmptyWindow,
    #[error("not minimal+TC")]
    NotMinimalTc,
    #[error("some journey covers every vertex")]
    CoveringJourney,
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
