//! Promotion of raw graphs to logical graphs.
//!
//! A graph is logical when its edges are acyclic and it splits recursively
//! into conclusion cliques: at every level, the conclusions group into
//! cliques by their direct-predecessor sets, every predecessor of a clique
//! points at exactly that clique, and the cliques' assumption parts are
//! pairwise disjoint.
//!
//! Running that recursion literally costs a pass over the remaining graph per
//! level, which is quadratic on long chains. [`validate`] therefore first runs
//! an equivalent local test (each edge belongs to a complete bipartite block
//! whose targets all share one successor set) and only falls back to the
//! level-by-level procedure to explain a rejection.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::GraphError;
use crate::graph::{LogicalGraph, RawGraph};
use crate::names::{fmt_vset, VSet, VertexId};

/// Why a graph has no formula reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The parts of two conclusion cliques share a vertex.
    Overlap {
        first: VSet,
        second: VSet,
        vertex: VertexId,
    },
    /// A predecessor of a clique also points somewhere else (or misses a
    /// clique member).
    SuccessorMismatch {
        vertex: VertexId,
        successors: VSet,
        clique: VSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap {
                first,
                second,
                vertex,
            } => write!(
                f,
                "parts for cliques {} and {} overlap at {vertex}",
                fmt_vset(first),
                fmt_vset(second)
            ),
            Violation::SuccessorMismatch {
                vertex,
                successors,
                clique,
            } => write!(
                f,
                "{vertex} implies {} but its clique is {}",
                fmt_vset(successors),
                fmt_vset(clique)
            ),
        }
    }
}

/// Checks acyclicity and well-formedness.
pub fn validate(raw: RawGraph) -> Result<LogicalGraph, GraphError> {
    if let Some(cycle) = find_cycle(&raw) {
        return Err(GraphError::CyclicEdges(cycle));
    }
    if !blocks_are_closed(&raw) {
        check_levels(&raw).map_err(GraphError::NotWellFormed)?;
    }
    Ok(LogicalGraph::trusted_unchecked(raw))
}

/// A witness cycle in edge order, or `None` when the edges are acyclic.
pub(crate) fn find_cycle(g: &RawGraph) -> Option<Vec<VertexId>> {
    let mut indegree: HashMap<&VertexId, usize> =
        g.vertices().map(|v| (v, g.preds_of(v).len())).collect();
    let mut ready: Vec<&VertexId> = indegree
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| *v)
        .collect();
    let mut done = 0;
    while let Some(v) = ready.pop() {
        done += 1;
        for w in g.succs_of(v) {
            let d = indegree.get_mut(w).expect("edge endpoints are vertices");
            *d -= 1;
            if *d == 0 {
                ready.push(w);
            }
        }
    }
    if done == g.vertex_count() {
        return None;
    }
    // Every leftover vertex has a leftover predecessor; walk backwards until a
    // vertex repeats.
    let leftover = |v: &VertexId| indegree.get(v).is_some_and(|&d| d > 0);
    let mut current = g.vertices().find(|v| leftover(v))?.clone();
    let mut path: Vec<VertexId> = Vec::new();
    let mut position: HashMap<VertexId, usize> = HashMap::new();
    while !position.contains_key(&current) {
        position.insert(current.clone(), path.len());
        path.push(current.clone());
        current = g.preds_of(&current).iter().find(|w| leftover(w))?.clone();
    }
    let mut cycle = path.split_off(position[&current]);
    cycle.reverse();
    // Start the witness at its least vertex for stable diagnostics.
    let start = cycle
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(start);
    Some(cycle)
}

/// The local characterisation of well-formedness on an acyclic graph.
///
/// For every vertex `w` with successors `S`, taking `P` as the predecessor
/// set of any member of `S`: all of `S` have predecessors exactly `P`, all of
/// `P` have successors exactly `S`, and all of `S` have one common successor
/// set. Each block `P × S` is checked once, from its least source.
pub(crate) fn blocks_are_closed(g: &RawGraph) -> bool {
    for w in g.vertices() {
        let targets = g.succs_of(w);
        let Some(first) = targets.iter().next() else {
            continue;
        };
        let sources = g.preds_of(first);
        if sources.iter().next() != Some(w) {
            continue;
        }
        let onward = g.succs_of(first);
        for y in targets {
            if g.preds_of(y) != sources || g.succs_of(y) != onward {
                return false;
            }
        }
        if sources.iter().any(|x| g.succs_of(x) != targets) {
            return false;
        }
    }
    true
}

/// One part of a level: a conclusion clique, the predecessors it shares, and
/// the up-closure of those predecessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LevelPart {
    pub clique: VSet,
    pub preds: VSet,
    pub assumptions: VSet,
}

/// Splits the subgraph induced on `within` into its conclusion cliques.
///
/// `within` must be up-closed in `g`. Parts come back ordered by their
/// predecessor sets.
pub(crate) fn split_level(g: &RawGraph, within: &VSet) -> Result<Vec<LevelPart>, Violation> {
    let succs_within = |v: &VertexId| -> VSet {
        g.succs_of(v)
            .iter()
            .filter(|w| within.contains(*w))
            .cloned()
            .collect()
    };

    let mut cliques: BTreeMap<VSet, VSet> = BTreeMap::new();
    for v in within {
        if !g.succs_of(v).iter().any(|w| within.contains(w)) {
            cliques
                .entry(g.preds_of(v).clone())
                .or_default()
                .insert(v.clone());
        }
    }

    let mut parts = Vec::with_capacity(cliques.len());
    let mut owner: HashMap<VertexId, usize> = HashMap::new();
    for (preds, clique) in cliques {
        let assumptions = g
            .up_closure_of(&preds)
            .expect("predecessors are vertices of the graph");
        let index = parts.len();
        for v in assumptions.iter().chain(&clique) {
            if let Some(&earlier) = owner.get(v) {
                let earlier: &LevelPart = &parts[earlier];
                return Err(Violation::Overlap {
                    first: earlier.clique.clone(),
                    second: clique.clone(),
                    vertex: v.clone(),
                });
            }
            owner.insert(v.clone(), index);
        }
        parts.push(LevelPart {
            clique,
            preds,
            assumptions,
        });
    }

    for part in &parts {
        for w in &part.preds {
            let successors = succs_within(w);
            if successors != part.clique {
                return Err(Violation::SuccessorMismatch {
                    vertex: w.clone(),
                    successors,
                    clique: part.clique.clone(),
                });
            }
        }
    }
    debug_assert_eq!(owner.len(), within.len(), "parts cover an acyclic level");
    Ok(parts)
}

/// Runs the conclusion-clique recursion over the whole graph.
pub(crate) fn check_levels(g: &RawGraph) -> Result<(), Violation> {
    let mut pending = vec![g.vertex_set()];
    while let Some(level) = pending.pop() {
        for part in split_level(g, &level)? {
            if !part.assumptions.is_empty() {
                pending.push(part.assumptions);
            }
        }
    }
    Ok(())
}
