//! Shared fixtures for the benchmarks.

use logical_graphs::{
    parse, to_graph, validate, Formula, LabelId, LogicalGraph, RawGraph, VertexId,
};

/// Name of the `i`-th chain vertex; zero-padded so names sort by position.
pub fn chain_vertex(i: usize) -> VertexId {
    VertexId::new(format!("v{i:07}"))
}

/// The chain `v0 -> v1 -> ... -> v(n-1)`, labels alternating `p` and `q`.
pub fn chain(n: usize) -> LogicalGraph {
    let labelling = (0..n).map(|i| {
        (
            chain_vertex(i),
            LabelId::new(if i % 2 == 0 { "p" } else { "q" }),
        )
    });
    let edges = (1..n).map(|i| (chain_vertex(i - 1), chain_vertex(i)));
    validate(RawGraph::from_parts(labelling, edges).expect("edges join chain vertices"))
        .expect("chains are logical")
}

/// `(a1 * ... * an) -o c` written curried and in reverse, so normalising it
/// has to undo both the currying and the ordering.
pub fn curried_formula(n: usize) -> Formula {
    let mut text = String::new();
    for i in (1..=n).rev() {
        text.push_str(&format!("a{i} -o "));
    }
    text.push('c');
    parse(&text).expect("generated text parses")
}

/// The graph of a tensor of `n` copies of `p -o q`, which has `n!`
/// automorphisms and so stresses the isomorphism search.
pub fn symmetric_graph(n: usize) -> RawGraph {
    let unit = "(p -o q)";
    let text = vec![unit; n].join(" * ");
    to_graph(&parse(&text).expect("generated text parses"))
}
