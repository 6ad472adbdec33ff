//! MILL formulas and their translation to and from logical graphs.
//!
//! Formulas become graphs by structural recursion: `1` is the empty graph, an
//! atom a single vertex, `A * B` graph addition and `A -o B` graph
//! implication. Going back, a logical graph is split level by level into
//! conclusion cliques; each clique reads as `assumptions -o c1 * ... * cn`
//! and the cliques of one level are tensored together.
//!
//! Sorting the cliques' labels and the parts of each level by their rendered
//! text makes the way back canonical: alpha-equivalent graphs produce the same
//! formula, and so do formulas that differ only by tensor symmetry or
//! currying.

mod formula;
mod syntax;

use thiserror::Error;

pub use formula::{print, Formula};
pub use syntax::{parse, SyntaxError};

use crate::algebra::{add, empty, implies, singleton};
use crate::error::GraphError;
use crate::graph::{LogicalGraph, RawGraph};
use crate::names::VSet;
use crate::validate::{split_level, validate, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MillError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),

    /// The formula's graph is not well-formed, so it has no normal form.
    #[error("formula is outside the normalisable fragment: {0}")]
    NotInFragment(Violation),
}

impl MillError {
    pub fn kind(&self) -> &'static str {
        match self {
            MillError::Syntax(_) => "syntax",
            MillError::NotInFragment(_) => "not-in-fragment",
        }
    }
}

/// One conclusion clique and the decomposition of what it assumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub clique: VSet,
    pub assumptions: Decomposition,
}

/// The recursive conclusion-clique structure of a logical graph. No parts
/// means the empty graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Every vertex mentioned anywhere in the decomposition.
    pub fn vertices(&self) -> VSet {
        let mut out = VSet::new();
        for part in &self.parts {
            out.extend(part.clique.iter().cloned());
            out.extend(part.assumptions.vertices());
        }
        out
    }
}

/// Translates a formula to its graph. Always acyclic, not always well-formed.
pub fn to_graph(formula: &Formula) -> RawGraph {
    match formula {
        Formula::Unit => empty().into_raw(),
        Formula::Atom(label) => singleton(label.clone()).into_raw(),
        Formula::Tensor(a, b) => add(&to_graph(a), &to_graph(b)).graph,
        Formula::Lolli(a, b) => implies(&to_graph(a), &to_graph(b)).graph,
    }
}

/// Splits a graph into conclusion cliques, parts in canonical order.
pub fn decompose(graph: &LogicalGraph) -> Decomposition {
    canonical_level(graph, &graph.vertex_set()).0
}

/// Reads a logical graph back as a formula, in canonical form.
pub fn to_formula(graph: &LogicalGraph) -> Formula {
    canonical_level(graph, &graph.vertex_set()).1
}

/// Canonical text of a graph: equal exactly for alpha-equivalent graphs.
pub fn canonical_key(graph: &LogicalGraph) -> String {
    to_formula(graph).to_string()
}

/// The canonical representative of a formula's symmetry class.
pub fn normalize(formula: &Formula) -> Result<Formula, MillError> {
    Ok(to_formula(&fragment_graph(formula)?))
}

/// The formula's graph, if it is well-formed.
pub fn fragment_graph(formula: &Formula) -> Result<LogicalGraph, MillError> {
    match validate(to_graph(formula)) {
        Ok(graph) => Ok(graph),
        Err(GraphError::NotWellFormed(violation)) => Err(MillError::NotInFragment(violation)),
        Err(other) => unreachable!("formula graphs are acyclic and closed: {other}"),
    }
}

/// Decomposes the level induced on `within` and renders it, returning the
/// parts sorted by rendered text together with the tensor of their formulas.
fn canonical_level(graph: &RawGraph, within: &VSet) -> (Decomposition, Formula) {
    let split = split_level(graph, within).expect("logical graphs split into cliques");
    let mut rendered: Vec<(String, Formula, Part)> = split
        .into_iter()
        .map(|level_part| {
            let mut labels: Vec<&str> = level_part
                .clique
                .iter()
                .map(|v| {
                    graph
                        .label(v)
                        .expect("clique members are vertices")
                        .as_str()
                })
                .collect();
            labels.sort_unstable();
            let conclusion = Formula::tensor_all(labels.into_iter().map(Formula::atom));
            let (assumptions, formula) = if level_part.assumptions.is_empty() {
                (Decomposition::default(), conclusion)
            } else {
                let (sub, antecedent) = canonical_level(graph, &level_part.assumptions);
                (sub, Formula::lolli(antecedent, conclusion))
            };
            let part = Part {
                clique: level_part.clique,
                assumptions,
            };
            (formula.to_string(), formula, part)
        })
        .collect();
    rendered.sort_by(|a, b| a.0.cmp(&b.0));
    let mut parts = Vec::with_capacity(rendered.len());
    let mut formulas = Vec::with_capacity(rendered.len());
    for (_, formula, part) in rendered {
        formulas.push(formula);
        parts.push(part);
    }
    (Decomposition { parts }, Formula::tensor_all(formulas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_of;
    use crate::iso::alpha_equiv;
    use crate::names::vset;

    fn f(text: &str) -> Formula {
        parse(text).unwrap()
    }

    fn logical(text: &str) -> LogicalGraph {
        validate(to_graph(&f(text))).unwrap()
    }

    fn nested_graph() -> LogicalGraph {
        let names = ["f", "g", "a", "b", "c", "d", "e"];
        let vertices: Vec<_> = names.iter().map(|n| (*n, *n)).collect();
        validate(
            graph_of(
                &vertices,
                &[
                    ("f", "g"),
                    ("a", "b"),
                    ("a", "c"),
                    ("b", "e"),
                    ("c", "e"),
                    ("d", "e"),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn to_graph_examples() {
        let chain = graph_of(
            &[("x", "p"), ("y", "q"), ("z", "r")],
            &[("x", "y"), ("y", "z")],
        )
        .unwrap();
        assert!(alpha_equiv(&to_graph(&f("(p -o q) -o r")), &chain).is_some());

        assert!(alpha_equiv(
            &to_graph(&f("(p1 * p2) -o q")),
            &to_graph(&f("p1 -o p2 -o q"))
        )
        .is_some());

        let shared_label_graph = graph_of(
            &[("a", "a"), ("b", "b"), ("b2", "b"), ("c", "c")],
            &[("a", "b2"), ("a", "c"), ("b", "b2"), ("b", "c")],
        )
        .unwrap();
        assert!(alpha_equiv(&to_graph(&f("a * b -o b * c")), &shared_label_graph).is_some());
        assert!(to_graph(&f("1")).is_empty());
    }

    #[test]
    fn decompose_examples() {
        assert!(decompose(&LogicalGraph::empty()).is_empty());

        let d = decompose(&nested_graph());
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0].clique, vset(["e"]));
        let inner = &d.parts[0].assumptions;
        assert_eq!(inner.parts.len(), 2);
        assert_eq!(inner.parts[0].clique, vset(["b", "c"]));
        assert_eq!(inner.parts[0].assumptions.vertices(), vset(["a"]));
        assert_eq!(inner.parts[1].clique, vset(["d"]));
        assert!(inner.parts[1].assumptions.is_empty());
        assert_eq!(d.parts[1].clique, vset(["g"]));
        assert_eq!(d.parts[1].assumptions.vertices(), vset(["f"]));

        let pq = logical("p * q");
        let d = decompose(&pq);
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].clique, pq.vertex_set());
        assert!(d.parts[0].assumptions.is_empty());
    }

    #[test]
    fn to_formula_examples() {
        assert_eq!(to_formula(&singleton("p")), f("p"));
        assert_eq!(to_formula(&logical("(p -o q) -o r")), f("(p -o q) -o r"));
        assert_eq!(to_formula(&LogicalGraph::empty()), Formula::Unit);

        let a = nested_graph();
        let back = to_formula(&a);
        assert_eq!(back.to_string(), "((a -o b * c) * d -o e) * (f -o g)");
        let reference = to_graph(&f("(f -o g) * ((a -o b*c) * d -o e)"));
        assert!(alpha_equiv(&to_graph(&back), &reference).is_some());
        assert!(alpha_equiv(&reference, &a).is_some());
    }

    #[test]
    fn normalize_examples() {
        let variants = [
            "(p1 * p2) -o q",
            "(p2 * p1) -o q",
            "p2 -o (p1 -o q)",
            "p1 -o (p2 -o q)",
        ];
        let normal: Vec<String> = variants
            .iter()
            .map(|v| normalize(&f(v)).unwrap().to_string())
            .collect();
        assert!(normal.iter().all(|n| n == "p1 * p2 -o q"), "{normal:?}");

        assert_eq!(normalize(&f("1 * p")).unwrap(), f("p"));
        assert!(matches!(
            normalize(&f("p -o (a -o b) * c")),
            Err(MillError::NotInFragment(_))
        ));
    }

    #[test]
    fn unit_consequent_collapses() {
        // A -o 1 and A share a graph.
        assert_eq!(normalize(&f("p -o 1")).unwrap(), f("p"));
        assert_eq!(normalize(&f("1 -o p")).unwrap(), f("p"));
        assert_eq!(normalize(&f("1")).unwrap(), Formula::Unit);
    }

    #[test]
    fn canonical_key_examples() {
        let eq1 = logical("(p1 * p2) -o q");
        let eq4 = logical("p1 -o (p2 -o q)");
        assert_eq!(canonical_key(&eq1), canonical_key(&eq4));

        let (renamed, _) = eq1.rename_apart(&eq1.vertex_set());
        assert_eq!(
            canonical_key(&eq1),
            canonical_key(&validate(renamed).unwrap())
        );
        assert_eq!(canonical_key(&LogicalGraph::empty()), "1");
    }

    #[test]
    fn normalize_is_idempotent_on_examples() {
        for text in [
            "a * b -o b * c",
            "(f -o g) * ((a -o b*c) * d -o e)",
            "q * (p -o q) * 1",
        ] {
            let once = normalize(&f(text)).unwrap();
            assert_eq!(normalize(&once).unwrap(), once);
        }
    }
}
