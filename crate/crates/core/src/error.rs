use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set must not be empty")]
    EmptyVertexSet,
    #[error("{0} factor must have at least one vertex")]
    EmptyFactor(&'static str),
    #[error("part sizes must be positive")]
    ZeroPart,
    #[error("at least {min} parts required, got {got}")]
    TooFewParts { min: usize, got: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("edge ({0}, {1}) is not in the graph")]
    NoSuchEdge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
