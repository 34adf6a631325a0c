use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A set of pairwise vertex-disjoint edges. Each edge is stored as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new() -> Matching {
        Matching::default()
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Matching {
        Matching {
            edges: edges
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect(),
        }
    }

    pub fn push(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of all edges, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// Partner of `v`, if matched.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }

    /// Every edge exists in `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.edges.iter().all(|&(u, v)| {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            true
        })
    }

    /// The first `k` edges in lexicographic order.
    pub fn truncated(&self, k: usize) -> Matching {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.truncate(k);
        Matching { edges }
    }
}

/// Scans edges in ascending `(u, v)` order, taking every edge whose endpoints
/// are both still free. The result is maximal.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut used = vec![false; g.n()];
    let mut m = Matching::new();
    for (u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            m.push(u, v);
        }
    }
    m
}

fn side_masks(g: &Graph, a: &[usize], b: &[usize]) -> Result<(Vec<bool>, Vec<bool>)> {
    let mut in_a = vec![false; g.n()];
    let mut in_b = vec![false; g.n()];
    for &v in a {
        g.check_vertex(v)?;
        in_a[v] = true;
    }
    for &v in b {
        g.check_vertex(v)?;
        if in_a[v] {
            return Err(Error::OverlappingSides(v));
        }
        in_b[v] = true;
    }
    Ok((in_a, in_b))
}

/// Maximum matching among the edges joining `a` to `b`, by repeated
/// augmenting-path search from each `a` vertex in ascending order.
pub fn max_bipartite_matching(g: &Graph, a: &[usize], b: &[usize]) -> Result<Matching> {
    let (in_a, in_b) = side_masks(g, a, b)?;
    let a_side: Vec<usize> = (0..g.n()).filter(|&v| in_a[v]).collect();
    let across: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            if in_a[v] {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| in_b[w])
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();

    let mut mate_of_b: Vec<Option<usize>> = vec![None; g.n()];
    let mut visited = vec![false; g.n()];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &start in &a_side {
        visited.iter_mut().for_each(|x| *x = false);
        stack.clear();
        stack.push((start, 0));
        while let Some(top) = stack.last_mut() {
            let (u, idx) = *top;
            if idx == across[u].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let w = across[u][idx];
            if visited[w] {
                continue;
            }
            visited[w] = true;
            match mate_of_b[w] {
                None => {
                    // Flip the alternating path recorded on the stack.
                    for &(x, next) in &stack {
                        mate_of_b[across[x][next - 1]] = Some(x);
                    }
                    break;
                }
                Some(x) => stack.push((x, 0)),
            }
        }
    }

    let mut m = Matching::new();
    for (w, mate) in mate_of_b.iter().enumerate() {
        if let Some(x) = *mate {
            m.push(x, w);
        }
    }
    m.edges.sort_unstable();
    Ok(m)
}

/// König cover from a maximum `a`–`b` matching: with `Z` the vertices reachable
/// from unmatched `b` vertices along alternating paths, the cover is
/// `(A ∩ Z) ∪ (B \ Z)`. Returned ascending.
pub fn min_vertex_cover_bipartite(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    m: &Matching,
) -> Result<Vec<usize>> {
    let (in_a, in_b) = side_masks(g, a, b)?;
    let mut mate: Vec<Option<usize>> = vec![None; g.n()];
    for &(u, v) in m.edges() {
        let crosses = (in_a[u] && in_b[v]) || (in_b[u] && in_a[v]);
        if !crosses || !g.has_edge(u, v) || mate[u].is_some() || mate[v].is_some() {
            return Err(Error::Precondition(format!(
                "({u}, {v}) is not a valid A-B matching edge"
            )));
        }
        mate[u] = Some(v);
        mate[v] = Some(u);
    }

    let mut reached = vec![false; g.n()];
    let mut queue: VecDeque<usize> = (0..g.n())
        .filter(|&v| in_b[v] && mate[v].is_none())
        .collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        if in_b[v] {
            for &w in g.neighbors(v) {
                if in_a[w] && mate[v] != Some(w) && !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        } else if let Some(w) = mate[v] {
            if !reached[w] {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }

    let cover: Vec<usize> = (0..g.n())
        .filter(|&v| (in_a[v] && reached[v]) || (in_b[v] && !reached[v]))
        .collect();
    if cover.len() != m.len() {
        return Err(Error::KonigMismatch {
            matching: m.len(),
            cover: cover.len(),
        });
    }
    Ok(cover)
}
