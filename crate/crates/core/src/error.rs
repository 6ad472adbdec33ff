use thiserror::Error;

use crate::names::VertexId;
use crate::validate::Violation;

/// Errors raised by graph construction, queries and validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),

    #[error("edges contain a cycle through {}", render_cycle(.0))]
    CyclicEdges(Vec<VertexId>),

    #[error("graph is not well-formed: {0}")]
    NotWellFormed(Violation),
}

impl GraphError {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            GraphError::UnknownVertex(_) => "unknown-vertex",
            GraphError::CyclicEdges(_) => "cyclic",
            GraphError::NotWellFormed(_) => "not-well-formed",
        }
    }
}

fn render_cycle(cycle: &[VertexId]) -> String {
    let mut names: Vec<&str> = cycle.iter().map(VertexId::as_str).collect();
    if let Some(first) = cycle.first() {
        names.push(first.as_str());
    }
    names.join(" -> ")
}
