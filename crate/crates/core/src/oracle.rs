//! Brute-force references and test corpora.
//!
//! Everything here is deliberately naive and shares no code path with the
//! algorithms it is used to check: isomorphisms are found by trying every
//! bijection, and formulas are enumerated exhaustively.

use std::sync::Arc;

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::graph::RawGraph;
use crate::mill::Formula;
use crate::names::{LabelId, VertexId};
use crate::vmap::VMap;

/// Largest connective count [`enumerate_formulas`] accepts.
pub const MAX_CONNECTIVES: usize = 6;
/// Largest number of atoms [`enumerate_formulas`] accepts.
pub const MAX_ATOMS: usize = 3;
/// Largest corpus [`enumerate_formulas`] will build.
pub const MAX_CORPUS: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "enumeration bounds too large: {atoms} atoms and {connectives} connectives give {count} formulas \
         (limits: {MAX_ATOMS} atoms, {MAX_CONNECTIVES} connectives, {MAX_CORPUS} formulas)"
    )]
    BoundsTooLarge {
        atoms: usize,
        connectives: usize,
        count: u64,
    },
}

impl OracleError {
    pub fn kind(&self) -> &'static str {
        "bounds-too-large"
    }
}

/// Every label- and edge-preserving bijection `V(g1) → V(g2)`, found by
/// trying each label-preserving bijection in turn. Meant for graphs with at
/// most eight vertices.
pub fn naive_iso(g1: &RawGraph, g2: &RawGraph) -> Vec<VMap> {
    let left: Vec<VertexId> = g1.vertices().cloned().collect();
    let right: Vec<VertexId> = g2.vertices().cloned().collect();
    if left.len() != right.len() {
        return Vec::new();
    }
    let n = left.len();
    let adjacency1 = adjacency(g1, &left);
    let adjacency2 = adjacency(g2, &right);
    let labels1: Vec<_> = left.iter().map(|v| g1.label(v)).collect();
    let labels2: Vec<_> = right.iter().map(|v| g2.label(v)).collect();

    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut stack = vec![0usize];
    // Iterative backtracking: stack[i] is the next candidate for left[i].
    while !stack.is_empty() {
        let i = stack.len() - 1;
        if i == n {
            let edges_match =
                (0..n).all(|a| (0..n).all(|b| adjacency1[a][b] == adjacency2[image[a]][image[b]]));
            if edges_match {
                out.push(
                    (0..n)
                        .map(|a| (left[a].clone(), right[image[a]].clone()))
                        .collect(),
                );
            }
            stack.pop();
            continue;
        }
        if image[i] != usize::MAX {
            used[image[i]] = false;
            image[i] = usize::MAX;
        }
        match (stack[i]..n).find(|&j| !used[j] && labels1[i] == labels2[j]) {
            Some(j) => {
                stack[i] = j + 1;
                image[i] = j;
                used[j] = true;
                stack.push(0);
            }
            None => {
                stack.pop();
            }
        }
    }
    out.sort();
    out
}

fn adjacency(g: &RawGraph, order: &[VertexId]) -> Vec<Vec<bool>> {
    order
        .iter()
        .map(|a| order.iter().map(|b| g.has_edge(a, b)).collect())
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Standard next-permutation step.
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// A complete isomorphism invariant computed by brute force: the least
/// encoding of labels plus adjacency over every vertex ordering that lists
/// labels in ascending order. Two graphs get equal signatures exactly when
/// they are isomorphic.
pub fn brute_force_signature(g: &RawGraph) -> String {
    let mut groups: Vec<(&LabelId, Vec<&VertexId>)> = Vec::new();
    for (v, label) in g.labelling() {
        match groups.iter_mut().find(|(l, _)| *l == label) {
            Some((_, members)) => members.push(v),
            None => groups.push((label, vec![v])),
        }
    }
    groups.sort_by(|a, b| a.0.cmp(b.0));

    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut order: Vec<&VertexId> = Vec::with_capacity(g.vertex_count());
    fn orderings<'a>(
        groups: &[(&LabelId, Vec<&'a VertexId>)],
        order: &mut Vec<&'a VertexId>,
        visit: &mut dyn FnMut(&[&'a VertexId]),
    ) {
        let Some(((_, members), rest)) = groups.split_first() else {
            visit(order);
            return;
        };
        for perm in permutations(members.len()) {
            let base = order.len();
            order.extend(perm.iter().map(|&i| members[i]));
            orderings(rest, order, visit);
            order.truncate(base);
        }
    }
    orderings(&groups, &mut order, &mut |order| {
        let position = |v: &VertexId| order.iter().position(|w| *w == v).expect("vertex");
        let mut edges: Vec<(usize, usize)> =
            g.edges().map(|(a, b)| (position(a), position(b))).collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });

    let labels: Vec<String> = groups
        .iter()
        .map(|(l, members)| format!("{l}x{}", members.len()))
        .collect();
    let edges: Vec<String> = best
        .unwrap_or_default()
        .iter()
        .map(|(a, b)| format!("{a}>{b}"))
        .collect();
    format!("{}|{}", labels.join(","), edges.join(","))
}

/// Number of formulas [`enumerate_formulas`] would return.
pub fn corpus_size(atoms: usize, max_connectives: usize) -> u64 {
    let leaves = atoms as u64 + 1;
    let mut exact = vec![leaves];
    for n in 1..=max_connectives {
        let mut count: u64 = 0;
        for k in 0..n {
            count =
                count.saturating_add(exact[k].saturating_mul(exact[n - 1 - k]).saturating_mul(2));
        }
        exact.push(count);
    }
    exact.iter().fold(0u64, |a, b| a.saturating_add(*b))
}

/// Every formula over `1` and `atoms` with at most `max_connectives` tensor
/// and lollipop nodes, each exactly once.
///
/// Ordered by connective count, then by the split point of the top-level
/// connective, then tensor before lollipop, then left and right operands in
/// enumeration order. Leaves come as `1` followed by the atoms as given.
pub fn enumerate_formulas(
    atoms: &[LabelId],
    max_connectives: usize,
) -> Result<Vec<Formula>, OracleError> {
    let mut distinct: Vec<LabelId> = Vec::new();
    for a in atoms {
        if !distinct.contains(a) {
            distinct.push(a.clone());
        }
    }
    let count = corpus_size(distinct.len(), max_connectives);
    if distinct.len() > MAX_ATOMS || max_connectives > MAX_CONNECTIVES || count > MAX_CORPUS {
        return Err(OracleError::BoundsTooLarge {
            atoms: distinct.len(),
            connectives: max_connectives,
            count,
        });
    }

    let leaves: Vec<Arc<Formula>> = std::iter::once(Formula::Unit)
        .chain(distinct.into_iter().map(Formula::Atom))
        .map(Arc::new)
        .collect();
    let mut by_size: Vec<Vec<Arc<Formula>>> = vec![leaves];
    for n in 1..=max_connectives {
        let mut level = Vec::new();
        for k in 0..n {
            for tensor in [true, false] {
                for left in &by_size[k] {
                    for right in &by_size[n - 1 - k] {
                        let node = if tensor {
                            Formula::Tensor(left.clone(), right.clone())
                        } else {
                            Formula::Lolli(left.clone(), right.clone())
                        };
                        level.push(Arc::new(node));
                    }
                }
            }
        }
        by_size.push(level);
    }
    Ok(by_size
        .into_iter()
        .flatten()
        .map(|f| Arc::try_unwrap(f).unwrap_or_else(|shared| (*shared).clone()))
        .collect())
}

fn has_atom(f: &Formula) -> bool {
    match f {
        Formula::Unit => false,
        Formula::Atom(_) => true,
        Formula::Tensor(a, b) | Formula::Lolli(a, b) => has_atom(a) || has_atom(b),
    }
}

/// Rewrites that apply at the root of `f`.
fn root_rewrites(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::Tensor(a, b) => {
            out.push(Formula::Tensor(b.clone(), a.clone()));
            if let Formula::Tensor(x, y) = &**a {
                out.push(Formula::Tensor(
                    x.clone(),
                    Arc::new(Formula::Tensor(y.clone(), b.clone())),
                ));
            }
            if let Formula::Tensor(y, z) = &**b {
                out.push(Formula::Tensor(
                    Arc::new(Formula::Tensor(a.clone(), y.clone())),
                    z.clone(),
                ));
            }
            if **a == Formula::Unit {
                out.push((**b).clone());
            }
            if **b == Formula::Unit {
                out.push((**a).clone());
            }
        }
        Formula::Lolli(a, c) => {
            // Currying only where the consequent has an atom: with an empty
            // consequent graph, A -o 1 collapses to A and the two sides of the
            // law would translate to different graphs.
            if let Formula::Tensor(x, y) = &**a {
                if has_atom(c) {
                    out.push(Formula::Lolli(
                        x.clone(),
                        Arc::new(Formula::Lolli(y.clone(), c.clone())),
                    ));
                }
            }
            if let Formula::Lolli(y, z) = &**c {
                if has_atom(z) {
                    out.push(Formula::Lolli(
                        Arc::new(Formula::Tensor(a.clone(), y.clone())),
                        z.clone(),
                    ));
                }
            }
            if **a == Formula::Unit {
                out.push((**c).clone());
            }
        }
        Formula::Unit | Formula::Atom(_) => {}
    }
}

/// Every formula one rewrite away from `f`, at any position.
pub fn single_step_rewrites(f: &Formula) -> Vec<Formula> {
    let mut out = Vec::new();
    root_rewrites(f, &mut out);
    match f {
        Formula::Tensor(a, b) | Formula::Lolli(a, b) => {
            let rebuild = |l: Arc<Formula>, r: Arc<Formula>| match f {
                Formula::Tensor(..) => Formula::Tensor(l, r),
                _ => Formula::Lolli(l, r),
            };
            for new_a in single_step_rewrites(a) {
                out.push(rebuild(Arc::new(new_a), b.clone()));
            }
            for new_b in single_step_rewrites(b) {
                out.push(rebuild(a.clone(), Arc::new(new_b)));
            }
        }
        Formula::Unit | Formula::Atom(_) => {}
    }
    out
}

/// The formulas reachable from `f` in at most `depth` rewrite rounds, `f`
/// included.
///
/// Rules: tensor commutativity and associativity (both directions), currying
/// and uncurrying when the consequent contains an atom, and removal of a unit
/// tensor factor or unit antecedent.
pub fn rewrite_variants(f: &Formula, depth: usize) -> FxHashSet<Formula> {
    let mut seen: FxHashSet<Formula> = FxHashSet::default();
    seen.insert(f.clone());
    let mut frontier = vec![f.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in &frontier {
            for h in single_step_rewrites(g) {
                if !seen.contains(&h) {
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}
