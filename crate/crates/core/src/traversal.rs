//! Depth-first folds over the predecessor structure of a graph.
//!
//! Traversal starts at a vertex and walks *backwards* along edges, i.e. from
//! a vertex to the vertices that imply it. The folded function decides at each
//! vertex whether to descend, skip the vertex's predecessors, or stop the
//! whole traversal.

use std::collections::HashSet;

use crate::error::GraphError;
use crate::graph::RawGraph;
use crate::names::VertexId;

/// What the traversal should do after visiting a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// Do not descend into this vertex's predecessors.
    Skip,
    /// End the traversal and return the current accumulator.
    Stop,
    /// Descend into the predecessors, in ascending order.
    Continue,
}

/// Folds `visit` over the graph depth first, starting at `start`.
///
/// There is no deduplication: a vertex reachable along `k` paths is visited
/// `k` times unless `visit` skips it. On a cyclic graph `visit` is
/// responsible for termination.
pub fn traverse_dfs<A, F>(
    mut visit: F,
    graph: &RawGraph,
    start: &VertexId,
    init: A,
) -> Result<A, GraphError>
where
    F: FnMut(&VertexId, A) -> (Action, A),
{
    graph.require(start)?;
    // The accumulator is threaded through visits in pre-order, so an explicit
    // stack reproduces the recursive fold exactly, and deep chains cannot
    // overflow the call stack.
    let mut stack: Vec<&VertexId> = vec![start];
    let mut acc = init;
    while let Some(v) = stack.pop() {
        let (action, next) = visit(v, acc);
        acc = next;
        match action {
            Action::Skip => {}
            Action::Stop => return Ok(acc),
            Action::Continue => stack.extend(graph.preds_of(v).iter().rev()),
        }
    }
    Ok(acc)
}

/// Applies `visit` once to every vertex in the up-closure of `start`, in
/// first-visit depth-first order. Terminates on cyclic graphs too.
pub fn fold_reachable<A, F>(
    mut visit: F,
    graph: &RawGraph,
    start: &VertexId,
    init: A,
) -> Result<A, GraphError>
where
    F: FnMut(&VertexId, A) -> A,
{
    let (_, acc) = traverse_dfs(
        |v, (mut seen, acc): (HashSet<VertexId>, A)| {
            if seen.insert(v.clone()) {
                (Action::Continue, (seen, visit(v, acc)))
            } else {
                (Action::Skip, (seen, acc))
            }
        },
        graph,
        start,
        (HashSet::new(), init),
    )?;
    Ok(acc)
}
