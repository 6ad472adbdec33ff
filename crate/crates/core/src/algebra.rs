//! Building graphs up and taking them apart.
//!
//! Addition is a disjoint union that renames only the first operand;
//! implication is addition plus an edge from every conclusion of the first
//! operand to every conclusion of the second. Subtraction works on vertex
//! names rather than up to isomorphism, which is what keeps it linear.

use thiserror::Error;

use crate::graph::{LogicalGraph, RawGraph};
use crate::names::{LabelId, VertexId};
use crate::vmap::VMap;

/// A combined graph together with the embeddings of both operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumResult {
    pub graph: RawGraph,
    /// Where each vertex of the first operand ended up.
    pub inj1: VMap,
    /// Where each vertex of the second operand ended up (always the identity).
    pub inj2: VMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("vertex `{0}` of the subtracted graph is not in the graph, or has a different label")]
    NotASubgraphByName(VertexId),
}

impl AlgebraError {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraError::NotASubgraphByName(_) => "not-a-subgraph",
        }
    }
}

/// The graph with no vertices; the unit of addition.
pub fn empty() -> LogicalGraph {
    LogicalGraph::empty()
}

/// One vertex, named `v0`, carrying `label`.
pub fn singleton(label: impl Into<LabelId>) -> LogicalGraph {
    LogicalGraph::trusted_unchecked(RawGraph::new().with_vertex("v0", label))
}

/// Same vertex names with the same labels; edges are ignored.
pub fn vertex_equivalent(g: &RawGraph, h: &RawGraph) -> bool {
    g.labelling() == h.labelling()
}

/// Disjoint union. `h` is renamed apart from `k`, which keeps its names.
pub fn add(h: &RawGraph, k: &RawGraph) -> SumResult {
    let (renamed, inj1) = h.rename_apart(&k.vertex_set());
    let mut graph = renamed;
    for (v, label) in k.labelling() {
        graph.insert_vertex(v.clone(), label.clone());
    }
    for (src, dst) in k.edges() {
        graph.insert_edge(src.clone(), dst.clone());
    }
    SumResult {
        graph,
        inj1,
        inj2: VMap::identity(&k.vertex_set()),
    }
}

/// `h` with every vertex named in `k` removed, along with the edges touching
/// those vertices.
pub fn subtract(h: &RawGraph, k: &RawGraph) -> Result<RawGraph, AlgebraError> {
    for (v, label) in k.labelling() {
        if h.label(v) != Some(label) {
            return Err(AlgebraError::NotASubgraphByName(v.clone()));
        }
    }
    let keep = h.vertices().filter(|v| !k.contains(v)).cloned().collect();
    Ok(h.induced_subgraph(&keep)
        .expect("kept vertices come from h"))
}

/// Addition plus an edge from every conclusion of `h` to every conclusion of
/// `k`. The result need not be well-formed.
pub fn implies(h: &RawGraph, k: &RawGraph) -> SumResult {
    let mut sum = add(h, k);
    let targets = k.conclusions();
    for v in h.conclusions() {
        let src = sum.inj1.get(&v).expect("inj1 is total").clone();
        for w in &targets {
            sum.graph.insert_edge(src.clone(), w.clone());
        }
    }
    sum
}

impl LogicalGraph {
    /// Addition of two logical graphs, which is again logical.
    pub fn sum(&self, other: &LogicalGraph) -> LogicalGraph {
        LogicalGraph::trusted(add(self, other).graph)
    }
}
