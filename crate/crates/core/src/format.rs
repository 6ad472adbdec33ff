//! Graph files and Graphviz export.
//!
//! A graph file is a JSON object:
//!
//! ```text
//! {"vertices":{"a":"p","b":"q"},"edges":[["a","b"]]}
//! ```
//!
//! Output is compact, with vertex keys sorted and edges sorted by source then
//! destination, so equal graphs always serialise to identical bytes. Input may
//! list keys and edges in any order. An optional `"formula"` string records
//! where a graph came from; it is written on request and ignored on input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::RawGraph;
use crate::names::{LabelId, VertexId};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed graph file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("empty {0} name in graph file")]
    EmptyName(&'static str),

    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FormatError {
    pub fn kind(&self) -> &'static str {
        match self {
            FormatError::Json(_) | FormatError::EmptyName(_) => "format",
            FormatError::Graph(e) => e.kind(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: BTreeMap<String, String>,
    edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
}

/// The canonical bytes of `g`, newline-terminated.
pub fn write_graph(g: &RawGraph) -> String {
    render(g, None)
}

/// Like [`write_graph`], with a `"formula"` field recording provenance.
pub fn write_graph_with_formula(g: &RawGraph, formula: &str) -> String {
    render(g, Some(formula.to_owned()))
}

fn render(g: &RawGraph, formula: Option<String>) -> String {
    let file = GraphFile {
        vertices: g
            .labelling()
            .iter()
            .map(|(v, l)| (v.to_string(), l.to_string()))
            .collect(),
        edges: g
            .edges()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        formula,
    };
    let mut text = serde_json::to_string(&file).expect("graph files always serialise");
    text.push('\n');
    text
}

/// Parses a graph file. Edges must join listed vertices; any provenance
/// formula is dropped.
pub fn read_graph(text: &str) -> Result<RawGraph, FormatError> {
    let file: GraphFile = serde_json::from_str(text)?;
    let vertex = |name: &str| VertexId::try_new(name).ok_or(FormatError::EmptyName("vertex"));
    let mut labelling = Vec::with_capacity(file.vertices.len());
    for (v, l) in &file.vertices {
        let label = LabelId::try_new(l).ok_or(FormatError::EmptyName("label"))?;
        labelling.push((vertex(v)?, label));
    }
    let mut edges = Vec::with_capacity(file.edges.len());
    for (a, b) in &file.edges {
        edges.push((vertex(a)?, vertex(b)?));
    }
    Ok(RawGraph::from_parts(labelling, edges)?)
}

fn dot_id(name: &str) -> String {
    let bare = name
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if bare {
        name.to_owned()
    } else {
        format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Graphviz source: one node per vertex, named after it and showing its
/// label, then one line per edge, both in sorted order.
pub fn to_dot(g: &RawGraph) -> String {
    let mut out = String::from("digraph {\n");
    for (v, l) in g.labelling() {
        let label = l.as_str().replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {} [label=\"{label}\"];", dot_id(v.as_str())).expect("string write");
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {} -> {};", dot_id(a.as_str()), dot_id(b.as_str())).expect("string write");
    }
    out.push_str("}\n");
    out
}
