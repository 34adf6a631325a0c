//! Direct (unkernelized) solvers and graph strategies shared by the
//! integration tests.
#![allow(dead_code)]

use crownkit_core::exact::{self, build_confusion_graph, chromatic_number, independence_number};
use crownkit_core::{Graph, SolverCaps};
use proptest::prelude::*;

pub fn caps() -> SolverCaps {
    SolverCaps::default()
}

pub fn alpha(g: &Graph, q: u64) -> usize {
    exact::storage_capacity_alpha(g, q, &caps()).unwrap()
}

pub fn ind(g: &Graph, q: u64) -> usize {
    exact::index_coding_length(g, q, &caps()).unwrap()
}

pub fn minrank(g: &Graph, p: u64) -> usize {
    exact::minrank(g, p, caps().minrank).unwrap()
}

pub fn chi_conf(g: &Graph, q: u64) -> usize {
    exact::confusion_chromatic_number(g, q, &caps()).unwrap()
}

/// `χ(Conf_q(G))` from the generic solver, without the Cayley bound.
pub fn chi_conf_generic(g: &Graph, q: u64) -> usize {
    let conf = build_confusion_graph(g, q, caps().confusion).unwrap();
    chromatic_number(&conf.graph, caps().chi).unwrap()
}

pub fn alpha_conf_direct(g: &Graph, q: u64) -> usize {
    let conf = build_confusion_graph(g, q, caps().confusion).unwrap();
    independence_number(&conf.graph, caps().alpha).unwrap()
}

/// `base^e` as `u128`.
pub fn pow(base: u64, e: usize) -> u128 {
    (base as u128).pow(e as u32)
}

/// Graphs on up to `max_n` vertices with edge density drawn per graph.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

/// `g` with a new isolated vertex inserted at position `at`.
pub fn with_isolated_vertex(g: &Graph, at: usize) -> Graph {
    let shift = |v: usize| if v >= at { v + 1 } else { v };
    Graph::from_edges(g.n() + 1, g.edges().map(|(u, v)| (shift(u), shift(v)))).unwrap()
}
