use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact `α(H)`.
pub fn independence_number(h: &Graph, cap: usize) -> Result<usize> {
    Ok(maximum_independent_set(h, cap)?.len())
}

/// A maximum independent set of `h`, ascending.
///
/// Branch and bound over candidate sets, searched as maximum clique in the
/// complement. The bound at each node is a greedy partition of the
/// candidates into cliques of `h`: an independent set takes at most one
/// vertex from each.
pub fn maximum_independent_set(h: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = h.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "independence solver input",
            size: n as u128,
            cap: cap as u128,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    // Low-degree vertices first, so they get the small color classes.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (h.degree(v), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let compatible: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut row = BitSet::full(n);
            row.remove(pos[v]);
            for &w in h.neighbors(v) {
                row.remove(pos[w]);
            }
            row
        })
        .collect();

    let mut search = Search {
        compatible: &compatible,
        best: greedy_seed(&compatible),
        current: Vec::new(),
    };
    search.expand(BitSet::full(n));

    let mut result: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    result.sort_unstable();
    Ok(result)
}

fn greedy_seed(compatible: &[BitSet]) -> Vec<usize> {
    let mut cand = BitSet::full(compatible.len());
    let mut chosen = Vec::new();
    while let Some(v) = cand.first() {
        chosen.push(v);
        cand.intersect_with(&compatible[v]);
    }
    chosen
}

struct Search<'a> {
    compatible: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: BitSet) {
        let colored = self.color(&cand);
        for &(v, color) in colored.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand.intersection(&self.compatible[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }

    /// Candidates with their class number (1-based), sorted by class.
    fn color(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut classes: Vec<BitSet> = Vec::new();
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(cand.count());
        for v in cand.iter() {
            let slot = classes
                .iter()
                .position(|c| c.is_disjoint(&self.compatible[v]));
            match slot {
                Some(i) => {
                    classes[i].insert(v);
                    out.push((v, i + 1));
                }
                None => {
                    let mut c = BitSet::new(cand.universe());
                    c.insert(v);
                    classes.push(c);
                    out.push((v, classes.len()));
                }
            }
        }
        out.sort_by_key(|&(_, c)| c);
        out
    }
}
