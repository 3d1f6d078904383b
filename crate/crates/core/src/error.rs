use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge ({u}, {v}) references a vertex outside [0, {n})")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line {line}: {reason}")]
    MalformedEdgeLine { line: usize, reason: String },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("edge {edge} is a bridge (omega = {omega}); rank-one downdate would disconnect")]
    BridgeDowndate { edge: Edge, omega: f64 },
    #[error("not a spanning tree: {0}")]
    NotATree(String),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("input too large for exhaustive enumeration: {0}")]
    TooLarge(String),
    #[error("no connected sample after {0} attempts")]
    ConnectivityRetriesExhausted(usize),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}
