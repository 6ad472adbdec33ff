//! Vertex alpha-equivalence.
//!
//! Candidate isomorphisms are grown by a depth-first traversal of the first
//! graph: at every visited vertex each candidate map is extended, in every
//! possible way, by matching the vertex's unmapped predecessors against the
//! unmapped predecessors of its image. Candidates that cannot be extended
//! drop out, and the traversal stops as soon as none are left.

use std::collections::HashSet;

use crate::graph::RawGraph;
use crate::names::{VSet, VertexId};
use crate::traversal::{traverse_dfs, Action};
pub use crate::vmap::VMap;

/// All extensions of `m` that send the unmapped members of `asms1`
/// injectively and label-preservingly into the unmapped members of `asms2`.
///
/// Already-mapped members of `asms1` must land in `asms2`, otherwise there is
/// no extension. Results are in lexicographic order of assignment.
pub fn vertex_match_perms(
    g1: &RawGraph,
    asms1: &VSet,
    g2: &RawGraph,
    asms2: &VSet,
    m: &VMap,
) -> Vec<VMap> {
    let mut pending = Vec::new();
    for v in asms1 {
        match m.get(v) {
            Some(w) if !asms2.contains(w) => return Vec::new(),
            Some(_) => {}
            None => pending.push(v),
        }
    }
    let free: Vec<&VertexId> = asms2.iter().filter(|w| !m.contains_value(w)).collect();
    if pending.len() > free.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; free.len()];
    assign(g1, g2, &pending, &free, &mut used, &mut m.clone(), &mut out);
    out
}

fn assign(
    g1: &RawGraph,
    g2: &RawGraph,
    pending: &[&VertexId],
    free: &[&VertexId],
    used: &mut [bool],
    current: &mut VMap,
    out: &mut Vec<VMap>,
) {
    let Some((&v, rest)) = pending.split_first() else {
        out.push(current.clone());
        return;
    };
    let label = g1.label(v);
    for (i, &w) in free.iter().enumerate() {
        if used[i] || g2.label(w) != label {
            continue;
        }
        used[i] = true;
        let mut next = current.clone();
        next.insert(v.clone(), w.clone());
        assign(g1, g2, rest, free, used, &mut next, out);
        used[i] = false;
    }
}

/// Every map, starting from `v1 ↦ v2`, that embeds the up-closure of `v1` in
/// `g1` into `g2` preserving labels and edges.
pub fn mk_graph_iso(g1: &RawGraph, v1: &VertexId, g2: &RawGraph, v2: &VertexId) -> Vec<VMap> {
    extend_graph_iso(g1, v1, g2, v2, &VMap::new())
}

/// [`mk_graph_iso`] seeded with an existing partial map, which every result
/// extends.
pub fn extend_graph_iso(
    g1: &RawGraph,
    v1: &VertexId,
    g2: &RawGraph,
    v2: &VertexId,
    seed: &VMap,
) -> Vec<VMap> {
    if !g2.contains(v2) || g1.label(v1) != g2.label(v2) {
        return Vec::new();
    }
    let mut start = seed.clone();
    if !start.insert(v1.clone(), v2.clone()) {
        return Vec::new();
    }
    let searched = traverse_dfs(
        |x, (mut seen, maps): (HashSet<VertexId>, Vec<VMap>)| {
            if maps.is_empty() {
                return (Action::Stop, (seen, maps));
            }
            // A revisited vertex already has its predecessors mapped, so this
            // only filters out inconsistent candidates.
            let action = if seen.insert(x.clone()) {
                Action::Continue
            } else {
                Action::Skip
            };
            let asms1 = g1.preds_of(x);
            let extended = maps
                .iter()
                .flat_map(|m| {
                    let image = m.get(x).expect("visited vertices are mapped");
                    vertex_match_perms(g1, asms1, g2, g2.preds_of(image), m)
                })
                .collect();
            (action, (seen, extended))
        },
        g1,
        v1,
        (HashSet::new(), vec![start]),
    );
    searched.map(|(_, maps)| maps).unwrap_or_default()
}

/// Whether `m` is a label-preserving bijection `V(g1) → V(g2)` that maps the
/// edges of `g1` exactly onto the edges of `g2`.
pub fn is_isomorphism(g1: &RawGraph, g2: &RawGraph, m: &VMap) -> bool {
    if m.len() != g1.vertex_count() || m.len() != g2.vertex_count() {
        return false;
    }
    if g1.edge_count() != g2.edge_count() {
        return false;
    }
    let labels_kept = g1
        .labelling()
        .iter()
        .all(|(v, l)| m.get(v).and_then(|w| g2.label(w)) == Some(l));
    // A bijection that preserves edges between equally sized edge sets also
    // reflects them.
    labels_kept
        && g1.edges().all(|(a, b)| match (m.get(a), m.get(b)) {
            (Some(x), Some(y)) => g2.has_edge(x, y),
            _ => false,
        })
}

fn could_be_isomorphic(g1: &RawGraph, g2: &RawGraph) -> bool {
    g1.vertex_count() == g2.vertex_count()
        && g1.edge_count() == g2.edge_count()
        && g1.label_counts() == g2.label_counts()
}

/// A witness isomorphism between `g1` and `g2`, if they are alpha-equivalent.
pub fn alpha_equiv(g1: &RawGraph, g2: &RawGraph) -> Option<VMap> {
    let mut found = None;
    search_isomorphisms(g1, g2, &mut |m| {
        found = Some(m);
        true
    });
    found
}

/// Every isomorphism between `g1` and `g2`, sorted and without duplicates.
pub fn isomorphisms(g1: &RawGraph, g2: &RawGraph) -> Vec<VMap> {
    let mut all = Vec::new();
    search_isomorphisms(g1, g2, &mut |m| {
        all.push(m);
        false
    });
    all.sort();
    all.dedup();
    all
}

/// Matches the conclusions of `g1` one at a time, least first, against
/// unmatched conclusions of `g2`, growing one shared map and backtracking on
/// failure. In an acyclic graph every vertex lies above some conclusion, so
/// the map is total once all conclusions are placed; vertices of a cyclic raw
/// graph that are still unmapped afterwards become extra roots. `found`
/// returns `true` to end the search.
fn search_isomorphisms(g1: &RawGraph, g2: &RawGraph, found: &mut dyn FnMut(VMap) -> bool) {
    if !could_be_isomorphic(g1, g2) {
        return;
    }
    let conclusions1 = g1.conclusions();
    let roots: Vec<VertexId> = conclusions1
        .iter()
        .chain(g1.vertices().filter(|v| !conclusions1.contains(*v)))
        .cloned()
        .collect();
    let search = Search {
        g1,
        g2,
        conclusions2: g2.conclusions().into_iter().collect(),
        everything2: g2.vertices().cloned().collect(),
        conclusions1,
    };
    search.place(&roots, VMap::new(), found);
}

struct Search<'a> {
    g1: &'a RawGraph,
    g2: &'a RawGraph,
    conclusions1: VSet,
    conclusions2: Vec<VertexId>,
    everything2: Vec<VertexId>,
}

impl Search<'_> {
    fn place(&self, roots: &[VertexId], map: VMap, found: &mut dyn FnMut(VMap) -> bool) -> bool {
        let Some(pos) = roots.iter().position(|r| !map.contains_key(r)) else {
            return is_isomorphism(self.g1, self.g2, &map) && found(map);
        };
        let root = &roots[pos];
        let targets = if self.conclusions1.contains(root) {
            &self.conclusions2
        } else {
            &self.everything2
        };
        for target in targets {
            if map.contains_value(target) {
                continue;
            }
            for extended in extend_graph_iso(self.g1, root, self.g2, target, &map) {
                if self.place(&roots[pos + 1..], extended, found) {
                    return true;
                }
            }
        }
        false
    }
}
