//! Logical graphs: a directed-acyclic-graph normal form for multiplicative
//! intuitionistic linear logic (MILL) formulas.
//!
//! A formula such as `(p1 * p2) -o q` becomes a labelled DAG whose edges read
//! as implication. Tensor and currying symmetries disappear in the graph, so
//! formulas that differ only by those symmetries map to isomorphic graphs and
//! share one canonical form.
//!
//! ```
//! use logical_graphs::mill::{normalize, parse};
//!
//! let curried = parse("p2 -o p1 -o q").unwrap();
//! let uncurried = parse("(p1 * p2) -o q").unwrap();
//! assert_eq!(normalize(&curried).unwrap(), normalize(&uncurried).unwrap());
//! ```

pub mod algebra;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod mill;
pub mod names;
pub mod oracle;
pub mod traversal;
pub mod validate;
pub mod vmap;

pub use algebra::{
    add, empty, implies, singleton, subtract, vertex_equivalent, AlgebraError, SumResult,
};
pub use error::GraphError;
pub use graph::{graph_of, subgraph_relation, LogicalGraph, RawGraph, SubgraphRelation};
pub use iso::{alpha_equiv, mk_graph_iso, vertex_match_perms};
pub use mill::{canonical_key, normalize, parse, print, to_formula, to_graph, Formula, MillError};
pub use names::{vset, LabelId, VSet, VertexId};
pub use traversal::{fold_reachable, traverse_dfs, Action};
pub use validate::{validate, Violation};
pub use vmap::VMap;
