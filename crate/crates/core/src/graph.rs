//! Labelled directed graphs and their name-sensitive structural queries.

use std::collections::{BTreeMap, HashMap};
use std::ops::Deref;

use crate::error::GraphError;
use crate::names::{LabelId, VSet, VertexId};
use crate::traversal;
use crate::validate;
use crate::vmap::VMap;

static NO_VERTICES: VSet = VSet::new();

/// An unvalidated labelled digraph: a total labelling of its vertices plus an
/// edge relation over them.
///
/// The label set is the image of the labelling, so every label has an
/// instance. Edges are stored in both directions; only vertices with at
/// least one neighbour have an adjacency entry.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RawGraph {
    labelling: BTreeMap<VertexId, LabelId>,
    succs: BTreeMap<VertexId, VSet>,
    preds: BTreeMap<VertexId, VSet>,
}

/// How one graph sits inside another, comparing vertex names directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphRelation {
    NotSubgraph,
    /// Labelling and edges are contained in the other graph's.
    VertexSubgraph,
    /// Contained, and has an edge between two of its vertices exactly when
    /// the other graph does.
    StrictVertexSubgraph,
}

impl RawGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from a labelling and an edge list.
    pub fn from_parts<V, E>(labelling: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = (VertexId, LabelId)>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = RawGraph {
            labelling: labelling.into_iter().collect(),
            ..Default::default()
        };
        for (src, dst) in edges {
            g.try_insert_edge(src, dst)?;
        }
        Ok(g)
    }

    /// Adds (or relabels) a vertex.
    pub fn with_vertex(mut self, v: impl Into<VertexId>, label: impl Into<LabelId>) -> Self {
        self.labelling.insert(v.into(), label.into());
        self
    }

    /// Adds an edge; both endpoints must already be present.
    pub fn with_edge(
        mut self,
        src: impl Into<VertexId>,
        dst: impl Into<VertexId>,
    ) -> Result<Self, GraphError> {
        self.try_insert_edge(src.into(), dst.into())?;
        Ok(self)
    }

    fn try_insert_edge(&mut self, src: VertexId, dst: VertexId) -> Result<(), GraphError> {
        for v in [&src, &dst] {
            if !self.labelling.contains_key(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        self.insert_edge(src, dst);
        Ok(())
    }

    pub(crate) fn insert_vertex(&mut self, v: VertexId, label: LabelId) {
        self.labelling.insert(v, label);
    }

    pub(crate) fn insert_edge(&mut self, src: VertexId, dst: VertexId) {
        debug_assert!(self.labelling.contains_key(&src) && self.labelling.contains_key(&dst));
        self.succs
            .entry(src.clone())
            .or_default()
            .insert(dst.clone());
        self.preds.entry(dst).or_default().insert(src);
    }

    pub fn labelling(&self) -> &BTreeMap<VertexId, LabelId> {
        &self.labelling
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.labelling.keys()
    }

    pub fn vertex_set(&self) -> VSet {
        self.labelling.keys().cloned().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.labelling.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succs.values().map(VSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.labelling.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.labelling.contains_key(v)
    }

    pub fn label(&self, v: &VertexId) -> Option<&LabelId> {
        self.labelling.get(v)
    }

    pub fn has_edge(&self, src: &VertexId, dst: &VertexId) -> bool {
        self.succs.get(src).is_some_and(|out| out.contains(dst))
    }

    /// Edges sorted by `(src, dst)`.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> {
        self.succs
            .iter()
            .flat_map(|(src, out)| out.iter().map(move |dst| (src, dst)))
    }

    /// Number of vertices carrying each label.
    pub fn label_counts(&self) -> BTreeMap<LabelId, usize> {
        let mut counts = BTreeMap::new();
        for label in self.labelling.values() {
            *counts.entry(label.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Vertices with an edge into `v`.
    pub fn predecessors(&self, v: &VertexId) -> Result<VSet, GraphError> {
        self.require(v)?;
        Ok(self.preds_of(v).clone())
    }

    /// Vertices that `v` has an edge to.
    pub fn successors(&self, v: &VertexId) -> Result<VSet, GraphError> {
        self.require(v)?;
        Ok(self.succs_of(v).clone())
    }

    pub(crate) fn preds_of(&self, v: &VertexId) -> &VSet {
        self.preds.get(v).unwrap_or(&NO_VERTICES)
    }

    pub(crate) fn succs_of(&self, v: &VertexId) -> &VSet {
        self.succs.get(v).unwrap_or(&NO_VERTICES)
    }

    pub(crate) fn require(&self, v: &VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.clone()))
        }
    }

    /// Vertices with no outgoing edge.
    pub fn conclusions(&self) -> VSet {
        self.labelling
            .keys()
            .filter(|v| !self.succs.contains_key(*v))
            .cloned()
            .collect()
    }

    /// `v` together with every vertex that has a directed path to `v`.
    pub fn up_closure(&self, v: &VertexId) -> Result<VSet, GraphError> {
        traversal::fold_reachable(
            |w, mut seen: VSet| {
                seen.insert(w.clone());
                seen
            },
            self,
            v,
            VSet::new(),
        )
    }

    /// Up-closure of a set of vertices.
    pub fn up_closure_of(&self, roots: &VSet) -> Result<VSet, GraphError> {
        for v in roots {
            self.require(v)?;
        }
        let mut seen = VSet::new();
        let mut stack: Vec<&VertexId> = roots.iter().collect();
        while let Some(v) = stack.pop() {
            if seen.insert(v.clone()) {
                stack.extend(self.preds_of(v).iter().filter(|w| !seen.contains(*w)));
            }
        }
        Ok(seen)
    }

    /// The subgraph containing exactly the vertices in `keep` and the edges
    /// between them.
    pub fn induced_subgraph(&self, keep: &VSet) -> Result<RawGraph, GraphError> {
        let mut sub = RawGraph::new();
        for v in keep {
            let label = self
                .label(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            sub.labelling.insert(v.clone(), label.clone());
        }
        for v in keep {
            let out: VSet = self
                .succs_of(v)
                .iter()
                .filter(|w| keep.contains(*w))
                .cloned()
                .collect();
            for w in &out {
                sub.preds.entry(w.clone()).or_default().insert(v.clone());
            }
            if !out.is_empty() {
                sub.succs.insert(v.clone(), out);
            }
        }
        Ok(sub)
    }

    /// Applies a renaming to every vertex. The map must cover all vertices.
    pub fn map_vertices(&self, renaming: &VMap) -> Result<RawGraph, GraphError> {
        let rename = |v: &VertexId| {
            renaming
                .get(v)
                .cloned()
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))
        };
        let mut out = RawGraph::new();
        for (v, label) in &self.labelling {
            out.labelling.insert(rename(v)?, label.clone());
        }
        for (src, dst) in self.edges() {
            out.insert_edge(rename(src)?, rename(dst)?);
        }
        Ok(out)
    }

    /// Renames every vertex that occurs in `avoid` to a fresh name outside
    /// `avoid` and the graph's own vertices. Returns the renamed graph and the
    /// total renaming (identity on untouched vertices).
    ///
    /// A fresh name keeps the collided name's non-numeric stem and takes the
    /// smallest numeric suffix not already in use, so `v0` becomes `v1` when
    /// `v1` is free.
    pub fn rename_apart(&self, avoid: &VSet) -> (RawGraph, VMap) {
        let mut renaming = VMap::new();
        let mut fresh =
            FreshNames::new(|name: &str| avoid.contains(name) || self.labelling.contains_key(name));
        for v in self.labelling.keys() {
            let target = if avoid.contains(v) {
                fresh.next(v)
            } else {
                v.clone()
            };
            renaming.insert(v.clone(), target);
        }
        let renamed = if renaming.iter().all(|(a, b)| a == b) {
            self.clone()
        } else {
            self.map_vertices(&renaming).expect("renaming is total")
        };
        (renamed, renaming)
    }
}

impl std::fmt::Debug for RawGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vertices: Vec<String> = self
            .labelling
            .iter()
            .map(|(v, l)| format!("{v}:{l}"))
            .collect();
        let edges: Vec<String> = self.edges().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "<{{{}}}; {{{}}}>", vertices.join(", "), edges.join(", "))
    }
}

struct FreshNames<F> {
    taken: F,
    issued: VSet,
    next_suffix: HashMap<String, u64>,
}

impl<F: Fn(&str) -> bool> FreshNames<F> {
    fn new(taken: F) -> Self {
        Self {
            taken,
            issued: VSet::new(),
            next_suffix: HashMap::new(),
        }
    }

    fn next(&mut self, collided: &VertexId) -> VertexId {
        let stem = collided
            .as_str()
            .trim_end_matches(|c: char| c.is_ascii_digit())
            .to_owned();
        // Names are only ever added, so every suffix below the cursor stays taken.
        let cursor = self.next_suffix.entry(stem.clone()).or_insert(0);
        loop {
            let candidate = format!("{stem}{cursor}");
            *cursor += 1;
            if !(self.taken)(&candidate) && !self.issued.contains(candidate.as_str()) {
                let id = VertexId::new(candidate);
                self.issued.insert(id.clone());
                return id;
            }
        }
    }
}

/// Compares two graphs by vertex name.
pub fn subgraph_relation(g: &RawGraph, h: &RawGraph) -> SubgraphRelation {
    let labels_contained = g.labelling.iter().all(|(v, l)| h.label(v) == Some(l));
    if !labels_contained || !g.edges().all(|(a, b)| h.has_edge(a, b)) {
        return SubgraphRelation::NotSubgraph;
    }
    let strict = g.vertices().all(|v| {
        h.succs_of(v)
            .iter()
            .filter(|w| g.contains(w))
            .all(|w| g.has_edge(v, w))
    });
    if strict {
        SubgraphRelation::StrictVertexSubgraph
    } else {
        SubgraphRelation::VertexSubgraph
    }
}

/// A graph that is acyclic and well-formed, i.e. reads as a formula.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LogicalGraph(RawGraph);

impl LogicalGraph {
    pub fn empty() -> Self {
        LogicalGraph(RawGraph::new())
    }

    /// Only for graphs whose validity follows from how they were built.
    pub(crate) fn trusted(raw: RawGraph) -> Self {
        debug_assert!(raw.vertex_count() > 256 || validate::validate(raw.clone()).is_ok());
        LogicalGraph(raw)
    }

    pub(crate) fn trusted_unchecked(raw: RawGraph) -> Self {
        LogicalGraph(raw)
    }

    pub fn as_raw(&self) -> &RawGraph {
        &self.0
    }

    pub fn into_raw(self) -> RawGraph {
        self.0
    }

    /// The assumption graph of `v`: the induced subgraph on its up-closure,
    /// with `v` as the unique conclusion.
    pub fn assumption_graph(&self, v: &VertexId) -> Result<LogicalGraph, GraphError> {
        let keep = self.0.up_closure(v)?;
        Ok(LogicalGraph::trusted(self.0.induced_subgraph(&keep)?))
    }

    /// The union of the assumption graphs of `v`'s direct predecessors.
    pub fn full_assumption_graph(&self, v: &VertexId) -> Result<LogicalGraph, GraphError> {
        let roots = self.0.predecessors(v)?;
        let keep = self.0.up_closure_of(&roots)?;
        Ok(LogicalGraph::trusted(self.0.induced_subgraph(&keep)?))
    }
}

impl Deref for LogicalGraph {
    type Target = RawGraph;

    fn deref(&self) -> &RawGraph {
        &self.0
    }
}

impl AsRef<RawGraph> for LogicalGraph {
    fn as_ref(&self) -> &RawGraph {
        &self.0
    }
}

impl std::fmt::Debug for LogicalGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<RawGraph> for LogicalGraph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        validate::validate(raw)
    }
}

/// Builds a graph from `(vertex, label)` pairs and `(src, dst)` edges given as
/// string slices. Mostly useful in tests and examples.
pub fn graph_of(vertices: &[(&str, &str)], edges: &[(&str, &str)]) -> Result<RawGraph, GraphError> {
    RawGraph::from_parts(
        vertices
            .iter()
            .map(|&(v, l)| (VertexId::new(v), LabelId::new(l))),
        edges
            .iter()
            .map(|&(a, b)| (VertexId::new(a), VertexId::new(b))),
    )
}
