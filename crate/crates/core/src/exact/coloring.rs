use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};

fn check_cap(h: &Graph, cap: usize) -> Result<()> {
    if h.n() > cap {
        return Err(Error::CapExceeded {
            what: "coloring solver input",
            size: h.n() as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// Exact `χ(H)`.
///
/// Disconnected graphs are solved per component (`χ` is the maximum) and
/// graphs with a disconnected complement per co-component (`χ` is the sum,
/// since every vertex of one part is adjacent to every vertex of the other).
/// What remains is solved by DSATUR for an upper bound, a greedy clique for a
/// lower bound, and `k`-colorability tests for increasing `k` in between.
pub fn chromatic_number(h: &Graph, cap: usize) -> Result<usize> {
    check_cap(h, cap)?;
    Ok(chi(h, 0))
}

/// [`chromatic_number`] when `χ(H) >= lower` is already known.
pub(crate) fn chromatic_number_at_least(h: &Graph, lower: usize, cap: usize) -> Result<usize> {
    check_cap(h, cap)?;
    Ok(chi(h, lower))
}

fn chi(h: &Graph, lower: usize) -> usize {
    match split(h) {
        Split::Components(parts) => parts.iter().map(|p| chi(p, 0)).max().unwrap_or(0),
        Split::CoComponents(parts) => parts.iter().map(|p| chi(p, 0)).sum(),
        Split::Prime => {
            let upper = color_count(&dsatur_coloring(h));
            let clique = greedy_clique(h);
            for k in clique.len().max(lower)..upper {
                if k_coloring_with_clique(h, k, &clique).is_some() {
                    return k;
                }
            }
            upper
        }
    }
}

/// Whether `h` admits a proper coloring with at most `k` colors.
pub fn is_colorable(h: &Graph, k: usize, cap: usize) -> Result<bool> {
    check_cap(h, cap)?;
    Ok(colorable(h, k))
}

fn colorable(h: &Graph, k: usize) -> bool {
    if k >= h.n() {
        return true;
    }
    match split(h) {
        Split::Components(parts) => parts.iter().all(|p| colorable(p, k)),
        Split::CoComponents(parts) => {
            let mut total = 0;
            parts.iter().all(|p| {
                total += chi(p, 0);
                total <= k
            })
        }
        Split::Prime => {
            if k >= color_count(&dsatur_coloring(h)) {
                return true;
            }
            let clique = greedy_clique(h);
            k >= clique.len() && k_coloring_with_clique(h, k, &clique).is_some()
        }
    }
}

enum Split {
    Components(Vec<Graph>),
    CoComponents(Vec<Graph>),
    Prime,
}

fn split(h: &Graph) -> Split {
    let n = h.n();
    if n <= 1 {
        return Split::Prime;
    }
    let parts = components(n, |v, w| h.has_edge(v, w));
    if parts.len() > 1 {
        return Split::Components(induced_parts(h, &parts));
    }
    let parts = components(n, |v, w| v != w && !h.has_edge(v, w));
    if parts.len() > 1 {
        return Split::CoComponents(induced_parts(h, &parts));
    }
    Split::Prime
}

fn components(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let v = part[i];
            i += 1;
            for (w, seen_w) in seen.iter_mut().enumerate() {
                if !*seen_w && adjacent(v, w) {
                    *seen_w = true;
                    part.push(w);
                }
            }
        }
        parts.push(part);
    }
    parts
}

fn induced_parts(h: &Graph, parts: &[Vec<usize>]) -> Vec<Graph> {
    parts
        .iter()
        .map(|p| induced_subgraph(h, p).expect("parts hold valid vertices").0)
        .collect()
}

/// A proper coloring with colors `0..k`, if one exists.
pub fn find_coloring(h: &Graph, k: usize) -> Option<Vec<usize>> {
    let clique = greedy_clique(h);
    if k < clique.len() {
        return None;
    }
    k_coloring_with_clique(h, k, &clique)
}

pub(crate) fn color_count(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Heuristic DSATUR coloring: always color the vertex seeing the most distinct
/// colors (ties: higher degree, then lower id) with its smallest free color.
pub fn dsatur_coloring(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], h.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..)
            .find(|&c| !seen[v].get(c).copied().unwrap_or(false))
            .unwrap();
        color[v] = c;
        for &w in h.neighbors(v) {
            if color[w] == usize::MAX {
                if seen[w].len() <= c {
                    seen[w].resize(c + 1, false);
                }
                if !seen[w][c] {
                    seen[w][c] = true;
                    sat[w] += 1;
                }
            }
        }
    }
    color
}

/// A maximal clique grown greedily from each vertex; the largest found.
pub(crate) fn greedy_clique(h: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..h.n() {
        if h.degree(start) < best.len() {
            continue;
        }
        let mut clique = vec![start];
        let mut cand: Vec<usize> = h.neighbors(start).to_vec();
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&v| {
                    (
                        cand.iter().filter(|&&w| h.has_edge(v, w)).count(),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            clique.push(v);
            cand.retain(|&w| w != v && h.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Exhaustive DSATUR-ordered backtracking for a `k`-coloring, with `clique`
/// precolored `0..|clique|` and new colors opened only in increasing order.
fn k_coloring_with_clique(h: &Graph, k: usize, clique: &[usize]) -> Option<Vec<usize>> {
    let n = h.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 || clique.len() > k {
        return None;
    }
    let mut st = ColorState {
        h,
        k,
        color: vec![usize::MAX; n],
        blocked: vec![0u32; n * k],
        sat: vec![0; n],
        used: 0,
        remaining: n,
    };
    for (c, &v) in clique.iter().enumerate() {
        if !st.assign(v, c) {
            return None;
        }
        st.used = st.used.max(c + 1);
    }
    if st.solve() {
        Some(st.color)
    } else {
        None
    }
}

struct ColorState<'a> {
    h: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// `blocked[v * k + c]`: colored neighbors of `v` holding color `c`.
    blocked: Vec<u32>,
    sat: Vec<usize>,
    used: usize,
    remaining: usize,
}

impl ColorState<'_> {
    /// Colors `v` with `c`; returns false (with the assignment still applied)
    /// if some uncolored neighbor is left without a free color.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        self.remaining -= 1;
        let mut ok = true;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.color[w] == usize::MAX && self.sat[w] == self.k {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        self.remaining += 1;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0, 0);
        for v in 0..self.color.len() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let k = (self.sat[v], self.h.degree(v));
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn solve(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        let v = self.pick();
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.blocked[v * self.k + c] != 0 {
                continue;
            }
            let opened = c == self.used;
            if opened {
                self.used += 1;
            }
            let ok = self.assign(v, c);
            if ok && self.solve() {
                return true;
            }
            self.unassign(v);
            if opened {
                self.used -= 1;
            }
        }
        false
    }
}
