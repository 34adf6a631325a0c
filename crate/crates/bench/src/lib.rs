//! Fixed instances shared by the criterion benches.

use crownkit_core::generate::{crown_planted, gnp, seeded_rng};
use crownkit_core::Graph;

/// `G(n, p)` from a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, &mut seeded_rng(seed)).expect("probability in range")
}

/// A planted crown with `|C| = 2h`, head `h` and a body of `r` vertices.
pub fn planted(h: usize, r: usize, seed: u64) -> Graph {
    crown_planted(2 * h, h, r, 0.2, &mut seeded_rng(seed))
        .expect("valid crown sizes")
        .0
}

/// Sparse graphs whose kernels for small `k` stay nonempty.
pub fn sparse_suite() -> Vec<(String, Graph)> {
    [50, 200, 1000]
        .into_iter()
        .map(|n| {
            (
                format!("gnp-{n}"),
                random_graph(n, 2.0 / n as f64, n as u64),
            )
        })
        .collect()
}

/// Small graphs for the exact solvers, each paired with its name.
pub fn small_suite() -> Vec<(String, Graph)> {
    vec![
        ("c5".into(), Graph::cycle(5)),
        ("gnp-7".into(), random_graph(7, 0.4, 7)),
        ("k4".into(), Graph::complete(4)),
        ("path-8".into(), Graph::path(8)),
    ]
}
