//! Instance generators. Every random generator takes the caller's RNG so a
//! single seeded stream can drive a whole experiment.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crown::CrownDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};

/// The generator used throughout for reproducible runs.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} is not in [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A graph with a planted crown: `R` is `G(r, p)`, `C` is independent, each
/// head vertex `h_i` is matched to crown vertex `c_i`, and every other H–C,
/// H–H and H–R pair is an edge with probability `p`. Labels are shuffled.
///
/// Requires `1 <= h <= c`.
pub fn crown_planted<R: Rng + ?Sized>(
    c: usize,
    h: usize,
    r: usize,
    p: f64,
    rng: &mut R,
) -> Result<(Graph, CrownDecomposition)> {
    if h == 0 || h > c {
        return Err(Error::InvalidParameter(format!(
            "crown-planted needs 1 <= |H| <= |C|, got |H|={h}, |C|={c}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} is not in [0, 1]"
        )));
    }
    let n = c + h + r;
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    // Before relabeling: C = 0..c, H = c..c+h, R = c+h..n.
    let head = |i: usize| c + i;
    let royal = |i: usize| c + h + i;

    let mut edges = Vec::new();
    let mut witness = Matching::new();
    for i in 0..h {
        edges.push((head(i), i));
        witness.push(label[head(i)], label[i]);
    }
    let mut coin = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>| {
        if rng.gen_bool(p) {
            edges.push((u, v));
        }
    };
    for i in 0..h {
        for j in 0..c {
            if j != i {
                coin(head(i), j, &mut edges);
            }
        }
        for j in i + 1..h {
            coin(head(i), head(j), &mut edges);
        }
        for j in 0..r {
            coin(head(i), royal(j), &mut edges);
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            coin(royal(i), royal(j), &mut edges);
        }
    }

    let g = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (label[u], label[v])))?;
    let sorted = |range: std::ops::Range<usize>| {
        let mut v: Vec<usize> = range.map(|i| label[i]).collect();
        v.sort_unstable();
        v
    };
    let d = CrownDecomposition {
        crown: sorted(0..c),
        head: sorted(c..c + h),
        royal: sorted(c + h..n),
        witness,
    };
    Ok((g, d))
}

/// Every labeled simple graph on `n` vertices, `2^(n(n-1)/2)` in all. Graph
/// number `mask` contains the `t`-th pair of the lexicographic pair order iff
/// bit `t` of `mask` is set.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many labeled graphs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(t, _)| mask >> t & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are valid edges")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crown::verify_crown;

    #[test]
    fn gnp_extremes() {
        let mut rng = seeded_rng(1);
        assert_eq!(gnp(10, 0.0, &mut rng).unwrap().m(), 0);
        assert_eq!(gnp(10, 1.0, &mut rng).unwrap().m(), 45);
        assert!(gnp(3, 1.5, &mut rng).is_err());
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp(30, 0.2, &mut seeded_rng(9)).unwrap();
        let b = gnp(30, 0.2, &mut seeded_rng(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn planted_crowns_verify() {
        let mut rng = seeded_rng(7);
        for _ in 0..200 {
            let c = rng.gen_range(1..6);
            let h = rng.gen_range(1..=c);
            let r = rng.gen_range(0..6);
            let (g, d) = crown_planted(c, h, r, 0.5, &mut rng).unwrap();
            assert_eq!(g.n(), c + h + r);
            verify_crown(&g, &d).unwrap();
        }
        assert!(crown_planted(2, 3, 1, 0.5, &mut rng).is_err());
        assert!(crown_planted(2, 0, 1, 0.5, &mut rng).is_err());
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(0).count(), 1);
        assert_eq!(all_labeled_graphs(1).count(), 1);
        assert_eq!(all_labeled_graphs(3).count(), 8);
        assert_eq!(all_labeled_graphs(5).count(), 1024);
        let total_edges: usize = all_labeled_graphs(4).map(|g| g.m()).sum();
        assert_eq!(total_edges, 6 * 32);
    }
}
