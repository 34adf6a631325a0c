mod common;

use common::arb_graph;
use crownkit_core::{
    greedy_clique_cover, greedy_maximal_matching, induced_subgraph, isolated_vertices,
    max_bipartite_matching, min_vertex_cover_bipartite, Graph,
};
use proptest::prelude::*;

/// Random bipartite instance: a graph on `a + b` vertices whose edges all run
/// between `0..a` and `a..a+b`.
fn arb_bipartite() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    (0usize..=12, 0usize..=12).prop_flat_map(|(a, b)| {
        (proptest::collection::vec(any::<u8>(), a * b), any::<u8>()).prop_map(
            move |(weights, threshold)| {
                let edges = (0..a)
                    .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                    .zip(&weights)
                    .filter(|(_, &w)| w < threshold)
                    .map(|(e, _)| e);
                let g = Graph::from_edges(a + b, edges).unwrap();
                (g, (0..a).collect(), (a..a + b).collect())
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn konig_cover_matches_matching((g, a, b) in arb_bipartite()) {
        let m = max_bipartite_matching(&g, &a, &b).unwrap();
        prop_assert!(m.is_valid_in(&g));
        let cover = min_vertex_cover_bipartite(&g, &a, &b, &m).unwrap();
        prop_assert_eq!(cover.len(), m.len());
        for (u, v) in g.edges() {
            prop_assert!(cover.contains(&u) || cover.contains(&v), "edge ({}, {}) uncovered", u, v);
        }
    }

    #[test]
    fn greedy_matching_is_maximal(g in arb_graph(20)) {
        let m = greedy_maximal_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        let used = m.vertices();
        for (u, v) in g.edges() {
            prop_assert!(used.contains(&u) || used.contains(&v), "edge ({}, {}) could extend the matching", u, v);
        }
    }

    #[test]
    fn greedy_cover_is_valid(g in arb_graph(16)) {
        let cover = greedy_clique_cover(&g);
        let owner = cover.validate(&g).unwrap();
        prop_assert_eq!(owner.len(), g.n());
        for c in cover.cliques() {
            prop_assert!(g.is_clique(c));
        }
    }

    #[test]
    fn induced_subgraph_preserves_adjacency(g in arb_graph(14), mask in any::<u16>()) {
        let subset: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, map) = induced_subgraph(&g, &subset).unwrap();
        prop_assert_eq!(h.n(), subset.len());
        for i in 0..h.n() {
            for j in 0..h.n() {
                if i != j {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(map.old_id(i), map.old_id(j)));
                }
            }
        }
    }

    #[test]
    fn adjacency_round_trip(g in arb_graph(14)) {
        let lists: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let h = Graph::from_adjacency(lists).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(h.edges().count(), g.m());
        prop_assert_eq!(h.complement().complement(), g.clone());
        for v in isolated_vertices(&g) {
            prop_assert_eq!(g.degree(v), 0);
        }
    }
}

#[test]
fn sparse_and_dense_storage_agree() {
    let edges = [(0, 5), (5, 9), (2, 3), (9, 0), (1, 7)];
    let dense = Graph::from_edges(10, edges).unwrap();
    let sparse = Graph::from_edges_with_width(10, edges, 0).unwrap();
    assert!(dense.row(0).is_some());
    assert!(sparse.row(0).is_none());
    for u in 0..10 {
        assert_eq!(dense.neighbors(u), sparse.neighbors(u));
        for v in 0..10 {
            assert_eq!(dense.has_edge(u, v), sparse.has_edge(u, v));
        }
    }
}
