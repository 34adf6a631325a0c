mod common;

use common::{alpha, chi_conf, graph_from_bits, ind, minrank, pow, with_isolated_vertex};
use crownkit_core::exact::capacity_at_least;
use crownkit_core::generate::{all_labeled_graphs, crown_planted, gnp, seeded_rng};
use crownkit_core::{
    induced_subgraph, kernelize, reduce_for_values, replay, Error, Graph, ReductionStep,
    ReductionTrace,
};
use proptest::prelude::*;

fn assert_replays(g: &Graph, trace: &ReductionTrace, vertices: &[usize], kernel: &Graph) {
    let replayed = replay(g, trace).unwrap_or_else(|e| panic!("{e}: {trace:?}"));
    assert_eq!(replayed, vertices);
    if !trace.is_sentinel() {
        assert_eq!(&induced_subgraph(g, &replayed).unwrap().0, kernel);
    }
}

fn arb_instance() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (0usize..60, 0.0f64..0.35, any::<u64>()).prop_map(|(n, p, s)| gnp(
            n,
            p,
            &mut seeded_rng(s)
        )
        .unwrap()),
        (1usize..40).prop_map(Graph::star),
        (
            1usize..12,
            0.0f64..1.0,
            0usize..20,
            0.0f64..0.5,
            any::<u64>()
        )
            .prop_map(|(c, hf, r, p, s)| {
                let h = 1 + ((c - 1) as f64 * hf) as usize;
                crown_planted(c, h, r, p, &mut seeded_rng(s)).unwrap().0
            }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn kernel_is_bounded_and_replays(g in arb_instance(), k in -2i64..12) {
        let kernel = kernelize(&g, k).unwrap();
        let t = &kernel.trace;
        prop_assert!(t.kernel_bound_holds(), "{:?}", t);
        prop_assert!(kernel.graph.n() <= (3 * kernel.k - 3).max(0) as usize);
        prop_assert!(kernel.k <= k.max(0));
        prop_assert_eq!(kernel.graph.n(), t.kernel_n);
        prop_assert!(t.offsets_consistent());
        assert_replays(&g, t, &kernel.vertices, &kernel.graph);
    }

    #[test]
    fn value_mode_replays(g in arb_instance()) {
        let res = reduce_for_values(&g).unwrap();
        prop_assert!(!res.trace.is_sentinel());
        assert_replays(&g, &res.trace, &res.vertices, &res.graph);
    }

    #[test]
    fn tampered_kernel_size_fails_replay(g in arb_instance(), k in 1i64..8, bump in 1usize..4) {
        let mut trace = kernelize(&g, k).unwrap().trace;
        trace.kernel_n += bump;
        prop_assert!(matches!(replay(&g, &trace), Err(Error::Replay(_))));
    }
}

#[test]
fn tampered_steps_fail_replay() {
    let g = Graph::star(6);
    let good = kernelize(&g, 2).unwrap().trace;
    replay(&g, &good).unwrap();

    let mut t = good.clone();
    t.steps.reverse();
    assert!(replay(&g, &t).is_err());

    let mut t = good.clone();
    if let ReductionStep::CrownReduction { crown, royal, .. } = &mut t.steps[0] {
        royal.push(crown.pop().unwrap());
    }
    assert!(replay(&g, &t).is_err());

    let mut t = good.clone();
    t.dual_offset += 1;
    assert!(replay(&g, &t).is_err());

    let mut t = good;
    t.short_circuit = true;
    assert!(replay(&g, &t).is_err());
    assert!(replay(&Graph::star(5), &kernelize(&g, 2).unwrap().trace).is_err());
}

/// Decision preservation on every labeled graph with `n <= 5`, `k` in `0..=5`.
#[test]
fn kernel_preserves_all_three_decisions() {
    for n in 0..=5 {
        for g in all_labeled_graphs(n) {
            let (a, i, r) = (alpha(&g, 2), ind(&g, 2) as i64, minrank(&g, 2) as i64);
            for k in 0..=5i64 {
                let kernel = kernelize(&g, k).unwrap();
                let kn = kernel.graph.n() as i64;
                let sc = kernel.trace.short_circuit;
                let h = &kernel.graph;
                assert_eq!(
                    capacity_at_least(a, 2, k),
                    sc || capacity_at_least(alpha(h, 2), 2, kernel.k),
                    "SC on {g:?}, k={k}"
                );
                assert_eq!(
                    i <= n as i64 - k,
                    sc || ind(h, 2) as i64 <= kn - kernel.k,
                    "DIC on {g:?}, k={k}"
                );
                assert_eq!(
                    r <= n as i64 - k,
                    sc || minrank(h, 2) as i64 <= kn - kernel.k,
                    "DMR on {g:?}, k={k}"
                );
            }
        }
    }
}

/// Removing `C ∪ H` of a planted crown shifts every value by an exact offset.
#[test]
fn planted_crown_offsets_are_exact() {
    let mut rng = seeded_rng(33);
    use rand::Rng;
    for _ in 0..80 {
        let n = rng.gen_range(2..=7);
        let c = rng.gen_range(1..n);
        let h = rng.gen_range(1..=c.min(n - c));
        let r = n - c - h;
        let (g, d) = crown_planted(c, h, r, rng.gen_range(0.0..1.0), &mut rng).unwrap();
        let (rest, _) = induced_subgraph(&g, &d.royal).unwrap();
        assert_eq!(
            alpha(&g, 2) as u128,
            alpha(&rest, 2) as u128 * pow(2, h),
            "{g:?} {d:?}"
        );
        assert_eq!(ind(&g, 2), ind(&rest, 2) + c, "{g:?} {d:?}");
        assert_eq!(minrank(&g, 2), minrank(&rest, 2) + c, "{g:?} {d:?}");
    }
}

/// An isolated vertex leaves `α` unchanged, doubles `χ` of the binary
/// confusion graph and adds one to the minrank, for every base graph on up to
/// five vertices.
#[test]
fn isolated_vertex_offsets_are_exact() {
    for n in 0..=5 {
        for g in all_labeled_graphs(n) {
            let (a, chi, r) = (alpha(&g, 2), chi_conf(&g, 2), minrank(&g, 2));
            // The position of the new vertex is irrelevant up to relabeling,
            // so checking two positions is enough to exercise the bookkeeping.
            for at in [0, n] {
                let big = with_isolated_vertex(&g, at);
                assert_eq!(alpha(&big, 2), a);
                assert_eq!(chi_conf(&big, 2), 2 * chi);
                assert_eq!(minrank(&big, 2), r + 1);
            }
        }
    }
}

#[test]
fn bits_helper_matches_enumeration() {
    let bits = [true, false, true];
    assert_eq!(
        graph_from_bits(3, &bits),
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    );
}
