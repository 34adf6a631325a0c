use crate::error::{Error, Result};
use crate::graph::Graph;

/// `Conf_q(G)`: one vertex per vector in `{0..q-1}^n`, with `x ~ y` iff some
/// coordinate `i` has `x_i != y_i` while `x` and `y` agree on `N(i)`.
///
/// Vector `x` has id `Σ x_i q^i` (little-endian base `q`).
#[derive(Clone, Debug)]
pub struct ConfusionGraph {
    pub q: u64,
    pub base_n: usize,
    pub graph: Graph,
}

impl ConfusionGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    pub fn vector_of(&self, id: usize) -> Vec<u64> {
        decode_vector(id, self.q, self.base_n)
    }

    pub fn id_of(&self, x: &[u64]) -> usize {
        encode_vector(x, self.q)
    }
}

pub(crate) fn decode_vector(mut id: usize, q: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = id as u64 % q;
            id /= q as usize;
            d
        })
        .collect()
}

pub(crate) fn encode_vector(x: &[u64], q: u64) -> usize {
    x.iter()
        .rev()
        .fold(0usize, |acc, &d| acc * q as usize + d as usize)
}

/// `q^n`, or `None` on overflow.
pub(crate) fn checked_power(q: u64, n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(q as u128)?;
    }
    Some(acc)
}

/// Builds `Conf_q(G)` provided `q^n <= cap`.
pub fn build_confusion_graph(g: &Graph, q: u64, cap: usize) -> Result<ConfusionGraph> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    let n = g.n();
    let size = checked_power(q, n).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what: "confusion graph",
            size,
            cap: cap as u128,
        });
    }
    let size = size as usize;
    let weight: Vec<usize> = (0..n).map(|i| q.pow(i as u32) as usize).collect();

    // For coordinate i the neighbors of x are obtained by changing x_i and
    // freely re-assigning every coordinate outside N(i) ∪ {i}.
    let free: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && !g.has_edge(i, j)).collect())
        .collect();

    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut digits = vec![0u64; n];
    for (x, list) in lists.iter_mut().enumerate() {
        let mut rest = x;
        for d in digits.iter_mut() {
            *d = (rest % q as usize) as u64;
            rest /= q as usize;
        }
        for i in 0..n {
            let cleared = x
                - digits[i] as usize * weight[i]
                - free[i]
                    .iter()
                    .map(|&j| digits[j] as usize * weight[j])
                    .sum::<usize>();
            let combos = q.pow(free[i].len() as u32) as usize;
            for combo in 0..combos {
                let mut base = cleared;
                let mut c = combo;
                for &j in &free[i] {
                    base += (c % q as usize) * weight[j];
                    c /= q as usize;
                }
                for v in 0..q {
                    if v != digits[i] {
                        list.push(base + v as usize * weight[i]);
                    }
                }
            }
        }
        list.sort_unstable();
        list.dedup();
    }
    let graph = Graph::from_sorted_lists(lists, crate::graph::DEFAULT_DENSE_WIDTH);
    Ok(ConfusionGraph {
        q,
        base_n: n,
        graph,
    })
}
