//! Simple undirected graphs on dense vertex ids `0..n`, plus the matching and
//! covering subroutines the crown construction is built from.

mod cover;
mod matching;

pub use cover::{greedy_clique_cover, CliqueCover};
pub use matching::{
    greedy_maximal_matching, max_bipartite_matching, min_vertex_cover_bipartite, Matching,
};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Graphs with at most this many vertices also carry bit-parallel adjacency rows.
pub const DEFAULT_DENSE_WIDTH: usize = 4096;

/// A simple undirected graph. Neighbor lists are sorted; graphs up to the dense
/// width additionally keep one [`BitSet`] row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    rows: Option<Vec<BitSet>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_lists(vec![Vec::new(); n], DEFAULT_DENSE_WIDTH)
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Graph::from_edges_with_width(n, edges, DEFAULT_DENSE_WIDTH)
    }

    pub fn from_edges_with_width(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        dense_width: usize,
    ) -> Result<Graph> {
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        Ok(Graph::from_sorted_lists(lists, dense_width))
    }

    /// Builds a graph from per-vertex neighbor lists, checking every invariant.
    pub fn from_adjacency(lists: Vec<Vec<usize>>) -> Result<Graph> {
        let n = lists.len();
        let mut sorted = lists;
        for (u, l) in sorted.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            for &v in l.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
            }
        }
        for (u, l) in sorted.iter().enumerate() {
            for &v in l {
                if sorted[v].binary_search(&u).is_err() {
                    return Err(Error::AsymmetricAdjacency(u, v));
                }
            }
        }
        Ok(Graph::from_sorted_lists(sorted, DEFAULT_DENSE_WIDTH))
    }

    /// Lists must already be sorted, deduplicated, symmetric and loop-free.
    pub(crate) fn from_sorted_lists(neighbors: Vec<Vec<usize>>, dense_width: usize) -> Graph {
        let n = neighbors.len();
        let rows = (n <= dense_width).then(|| {
            neighbors
                .iter()
                .map(|l| BitSet::from_iter_in(n, l.iter().copied()))
                .collect()
        });
        Graph { neighbors, rows }
    }

    pub fn complete(n: usize) -> Graph {
        let lists = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph::from_sorted_lists(lists, DEFAULT_DENSE_WIDTH)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Graph {
        if n < 3 {
            return Graph::path(n);
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// Star on `n` vertices: center 0, leaves `1..n`.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges are in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn m(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.neighbors[u].binary_search(&v).is_ok(),
        }
    }

    /// Dense adjacency row, if this graph is within the dense width.
    pub fn row(&self, u: usize) -> Option<&BitSet> {
        self.rows.as_ref().map(|r| &r[u])
    }

    /// Adjacency rows as bit sets, built on demand for wide graphs.
    pub fn bit_rows(&self) -> Vec<BitSet> {
        match &self.rows {
            Some(rows) => rows.clone(),
            None => self
                .neighbors
                .iter()
                .map(|l| BitSet::from_iter_in(self.n(), l.iter().copied()))
                .collect(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let lists = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_sorted_lists(lists, DEFAULT_DENSE_WIDTH)
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }
}

/// Correspondence between a parent graph and an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    old_of_new: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl Relabeling {
    /// New id of parent vertex `old`, if it was kept.
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    /// Parent ids of the kept vertices, ascending; index is the new id.
    pub fn kept(&self) -> &[usize] {
        &self.old_of_new
    }
}

/// `G[S]`. Kept vertices are renumbered `0..|S|` in ascending order of their
/// original ids; repeated entries in `S` are ignored.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<(Graph, Relabeling)> {
    let mut kept = subset.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if let Some(&bad) = kept.last().filter(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.n(),
        });
    }
    let mut new_of_old = vec![None; g.n()];
    for (new, &old) in kept.iter().enumerate() {
        new_of_old[old] = Some(new);
    }
    let lists = kept
        .iter()
        .map(|&old| {
            g.neighbors(old)
                .iter()
                .filter_map(|&w| new_of_old[w])
                .collect()
        })
        .collect();
    let sub = Graph::from_sorted_lists(lists, DEFAULT_DENSE_WIDTH);
    Ok((
        sub,
        Relabeling {
            old_of_new: kept,
            new_of_old,
        },
    ))
}

/// Vertices with empty neighborhoods, ascending.
pub fn isolated_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&u| g.degree(u) == 0).collect()
}
