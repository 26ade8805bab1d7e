use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge {0} is not an edge of the host graph")]
    EdgeNotInHost(Edge),

    #[error("subset was built for a different host graph")]
    HostMismatch,

    #[error("not a circle: {0}")]
    NotACircle(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("graph has {vertex_count} vertices, above the enumeration cap of {cap}")]
    CapExceeded { vertex_count: usize, cap: usize },

    #[error("iteration budget of {budget} passes exhausted")]
    BudgetExceeded { budget: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
