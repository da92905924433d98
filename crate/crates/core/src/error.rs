use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: VertexId },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {edge} is a tree edge")]
    TreeEdge { edge: EdgeId },
    #[error("edges do not form a spanning tree")]
    NotSpanningTree,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("unknown graph name {0:?}")]
    UnknownGraph(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("component embedding invalid: {0}")]
    InvalidComponentEmbedding(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConflictError {
    #[error("anchor {anchor} is not a node of a conflict graph with {nodes} nodes")]
    InvalidAnchor { anchor: usize, nodes: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("face walks do not determine a rotation system: {0}")]
    MalformedFaces(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KuratowskiError {
    #[error("graph is planar")]
    Planar,
    #[error("conflict graph is bipartite")]
    Bipartite,
    #[error("odd cycle must have at least five bridges")]
    CycleTooShort,
    #[error("consecutive bridges {0} and {1} only share three attachments; use the triangle case")]
    RedirectToTriangle(usize, usize),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("guard exceeded: {what} (limit {limit}, got {got}); pass an override to run anyway")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("too many edges: {m} > {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("triangulations need at least four vertices")]
    TooFewVertices,
}
