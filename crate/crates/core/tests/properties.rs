use proptest::prelude::*;

use logical_graphs::mill::decompose;
use logical_graphs::oracle::{
    brute_force_signature, enumerate_formulas, naive_iso, rewrite_variants,
};
use logical_graphs::*;

fn formula_strategy() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Unit),
        Just(Formula::atom("p")),
        Just(Formula::atom("q")),
        Just(Formula::atom("r")),
    ];
    leaf.prop_recursive(5, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::tensor(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::lolli(a, b)),
        ]
    })
}

fn logical_strategy() -> impl Strategy<Value = LogicalGraph> {
    formula_strategy().prop_filter_map("outside the fragment", |f| validate(to_graph(&f)).ok())
}

fn small_corpus() -> Vec<Formula> {
    enumerate_formulas(&[LabelId::new("p"), LabelId::new("q")], 3).unwrap()
}

#[test]
fn parse_inverts_print_on_the_corpus() {
    for f in small_corpus() {
        assert_eq!(parse(&print(&f)).unwrap(), f, "{f}");
    }
}

#[test]
fn decomposition_partitions_each_level() {
    fn check(g: &RawGraph, level: &logical_graphs::mill::Decomposition, within: &VSet) {
        let mut covered = VSet::new();
        let level_conclusions: VSet = within
            .iter()
            .filter(|v| g.successors(v).unwrap().is_disjoint(within))
            .cloned()
            .collect();
        for part in &level.parts {
            assert!(part.clique.is_subset(&level_conclusions));
            let below = part.assumptions.vertices();
            assert!(covered.is_disjoint(&part.clique) && covered.is_disjoint(&below));
            covered.extend(part.clique.iter().cloned());
            covered.extend(below.iter().cloned());
            check(g, &part.assumptions, &below);
        }
        assert_eq!(&covered, within);
    }
    for f in small_corpus() {
        if let Ok(g) = validate(to_graph(&f)) {
            check(&g, &decompose(&g), &g.vertex_set());
        }
    }
}

#[test]
fn naive_iso_agrees_with_alpha_equiv_on_small_graphs() {
    let mut graphs: Vec<RawGraph> = Vec::new();
    for f in enumerate_formulas(&[LabelId::new("p"), LabelId::new("q")], 2).unwrap() {
        let g = to_graph(&f);
        if !graphs.contains(&g) {
            graphs.push(g);
        }
    }
    for g in &graphs {
        for h in &graphs {
            let naive = naive_iso(g, h);
            assert_eq!(alpha_equiv(g, h).is_some(), !naive.is_empty());
            let mut searched = logical_graphs::iso::isomorphisms(g, h);
            searched.sort();
            assert_eq!(searched, naive);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_inverts_print(f in formula_strategy()) {
        prop_assert_eq!(parse(&print(&f)).unwrap(), f);
    }

    #[test]
    fn normal_forms_keep_the_graph(f in formula_strategy()) {
        if let Ok(n) = normalize(&f) {
            prop_assert!(alpha_equiv(&to_graph(&n), &to_graph(&f)).is_some());
            prop_assert_eq!(normalize(&n).unwrap(), n);
        }
    }

    #[test]
    fn rewrites_stay_in_the_fragment(f in formula_strategy()) {
        if let Ok(n) = normalize(&f) {
            for variant in rewrite_variants(&f, 2) {
                prop_assert_eq!(normalize(&variant), Ok(n.clone()), "{}", variant);
            }
        }
    }

    #[test]
    fn canonical_key_tracks_isomorphism(g in logical_strategy(), h in logical_strategy()) {
        let same_key = canonical_key(&g) == canonical_key(&h);
        prop_assert_eq!(same_key, alpha_equiv(&g, &h).is_some());
        if g.vertex_count() <= 8 && h.vertex_count() <= 8 {
            prop_assert_eq!(same_key, brute_force_signature(&g) == brute_force_signature(&h));
        }
    }

    #[test]
    fn alpha_equiv_is_an_equivalence(g in logical_strategy(), seed in 0usize..4) {
        prop_assert!(alpha_equiv(&g, &g).is_some());
        let (h, _) = g.rename_apart(&g.vertex_set());
        let (k, _) = h.rename_apart(&(0..seed).fold(h.vertex_set(), |mut s, i| {
            s.insert(VertexId::new(format!("v{i}")));
            s
        }));
        let gh = alpha_equiv(&g, &h).unwrap();
        let hg = alpha_equiv(&h, &g).unwrap();
        prop_assert!(logical_graphs::iso::is_isomorphism(&h, &g, &gh.inverse()));
        prop_assert!(logical_graphs::iso::is_isomorphism(&g, &h, &hg.inverse()));
        let hk = alpha_equiv(&h, &k).unwrap();
        prop_assert!(logical_graphs::iso::is_isomorphism(&g, &k, &gh.then(&hk)));
    }

    #[test]
    fn mk_graph_iso_returns_embeddings(g in logical_strategy(), h in logical_strategy()) {
        for v1 in g.vertices() {
            let up = g.up_closure(v1).unwrap();
            for v2 in h.vertices() {
                let maps = mk_graph_iso(&g, v1, &h, v2);
                let mut unique = maps.clone();
                unique.sort();
                unique.dedup();
                prop_assert_eq!(unique.len(), maps.len());
                for m in &maps {
                    prop_assert_eq!(m.domain(), up.clone());
                    for u in &up {
                        prop_assert_eq!(h.label(m.get(u).unwrap()), g.label(u));
                    }
                    for (a, b) in g.edges() {
                        if up.contains(a) && up.contains(b) {
                            prop_assert!(h.has_edge(m.get(a).unwrap(), m.get(b).unwrap()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sums_add_labels_and_implication_adds_edges(g in logical_strategy(), h in logical_strategy()) {
        let s = add(&g, &h);
        let mut counts = g.label_counts();
        for (l, n) in h.label_counts() {
            *counts.entry(l).or_insert(0) += n;
        }
        prop_assert_eq!(s.graph.label_counts(), counts);
        prop_assert!(s.inj1.image().is_disjoint(&s.inj2.image()));
        prop_assert_eq!(s.inj1.len() + s.inj2.len(), s.graph.vertex_count());
        let i = implies(&g, &h);
        prop_assert_eq!(i.graph.edge_count(), s.graph.edge_count() + g.conclusions().len() * h.conclusions().len());
        prop_assert!(validate(g.sum(&h).into_raw()).is_ok());
    }

    #[test]
    fn traversal_counts(g in logical_strategy()) {
        for v in g.vertices() {
            let up = g.up_closure(v).unwrap();
            let count = fold_reachable(|_, n: usize| n + 1, &g, v, 0).unwrap();
            prop_assert_eq!(count, up.len());
            let stopped = traverse_dfs(|_, n: usize| (Action::Stop, n + 1), &g, v, 0).unwrap();
            prop_assert_eq!(stopped, 1);
            let skipped = traverse_dfs(|_, n: usize| (Action::Skip, n + 1), &g, v, 0).unwrap();
            prop_assert_eq!(skipped, 1);
        }
    }
}
