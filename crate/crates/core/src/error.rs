use thiserror::Error;

use crate::graph::EdgeRef;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("shore is empty")]
    EmptyShore,
    #[error("shore contains every vertex")]
    FullShore,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has {order} vertices, above the limit of {limit}")]
    SizeLimit { order: usize, limit: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("edge {0} does not exist or was deleted")]
    DeadEdge(EdgeRef),
    #[error("edge set is not a mutual-dependence class")]
    NotAClass,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph is not a brick")]
    NotBrick,
    #[error("graph is not essentially 4-edge-connected")]
    NotEssentially4EdgeConnected,
    #[error("chain decomposition needs at least two doubletons, got {0}")]
    TooFewDoubletons(usize),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}
