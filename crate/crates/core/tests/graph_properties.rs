use std::collections::BTreeSet;

use proptest::prelude::*;

use hhkit::canon::{canonical_form, find_isomorphism, is_isomorphic};
use hhkit::catalog::{named, CatalogId};
use hhkit::graph::Graph;
use hhkit::graph6::{emit_graph6, parse_graph6};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| code >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

#[test]
fn four_vertex_classes_by_exhaustive_permutation() {
    let perms = permutations(4);
    let graphs = labeled_graphs(4);
    assert_eq!(graphs.len(), 64);
    // Oracle: the smallest edge list over all 24 relabelings.
    let oracle = |g: &Graph| {
        perms
            .iter()
            .map(|p| g.permute(p).unwrap().edges())
            .min()
            .unwrap()
    };
    let oracle_classes: BTreeSet<_> = graphs.iter().map(oracle).collect();
    let keys: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(oracle_classes.len(), 11);
    assert_eq!(keys.len(), 11);
    for a in &graphs {
        for b in &graphs {
            let same = oracle(a) == oracle(b);
            assert_eq!(
                canonical_form(a).unwrap() == canonical_form(b).unwrap(),
                same
            );
            assert_eq!(is_isomorphic(a, b), same);
        }
    }
}

#[test]
fn canonical_form_invariant_under_every_relabeling_up_to_five() {
    for n in 0..=5 {
        let perms = permutations(n);
        for g in labeled_graphs(n).iter().step_by(7) {
            let key = canonical_form(g).unwrap();
            for p in &perms {
                assert_eq!(canonical_form(&g.permute(p).unwrap()).unwrap(), key);
            }
        }
    }
}

#[test]
fn c5_minus_any_vertex_is_p4() {
    let c5 = named(CatalogId::Cycle(5));
    let p4 = named(CatalogId::Path(4));
    for v in 0..5 {
        let verts: Vec<usize> = (0..5).filter(|&u| u != v).collect();
        assert!(is_isomorphic(&c5.induced_subgraph(&verts).unwrap(), &p4));
    }
}

#[test]
fn k23_side_and_co_domino() {
    let k23 = named(CatalogId::CompleteBipartite(2, 3));
    assert!(k23.induced_subgraph(&[0, 1]).unwrap().is_edgeless());
    assert!(is_isomorphic(
        &named(CatalogId::Domino).complement(),
        &named(CatalogId::CoDomino)
    ));
    let k2p3 = named(CatalogId::Complete(2))
        .disjoint_union(&named(CatalogId::Path(3)))
        .unwrap();
    assert!(is_isomorphic(
        &k2p3.complement(),
        &named(CatalogId::K23Plus)
    ));
    assert!(is_isomorphic(
        &named(CatalogId::Path(3))
            .disjoint_union(&named(CatalogId::Complete(3)))
            .unwrap(),
        &named(CatalogId::P3PlusK3)
    ));
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_degrees(g in arb_graph(12)) {
        let h = g.complement();
        for v in g.vertices() {
            prop_assert_eq!(h.degree(v), g.order() - 1 - g.degree(v));
        }
    }

    #[test]
    fn canonical_form_invariant_under_random_relabeling((g, perm) in arb_graph_with_perm(8)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&canonical_form(&g).unwrap().graph(), &g));
    }

    #[test]
    fn canonical_form_agrees_with_matcher(a in arb_graph(7), b in arb_graph(7)) {
        let same_key = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same_key, is_isomorphic(&a, &b));
        if let Some(m) = find_isomorphism(&a, &b) {
            for (u, v) in a.edges() {
                prop_assert!(b.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let s = emit_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(emit_graph6(&back), s);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn join_is_complement_of_union(a in arb_graph(6), b in arb_graph(6)) {
        let joined = a.join(&b).unwrap();
        let via = a.complement().disjoint_union(&b.complement()).unwrap().complement();
        prop_assert_eq!(joined, via);
    }
}
