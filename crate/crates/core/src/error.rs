use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=256")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(Vertex, Vertex),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid rewrite site: {0}")]
    InvalidSite(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph class is empty")]
    EmptyClass,
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(msg.into()))
}

pub(crate) fn bad_site<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidSite(msg.into()))
}
