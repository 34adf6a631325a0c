use super::Graph;
use crate::bitset::BitSet;

/// A partition of the vertex set into cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    /// Wraps the given cliques; each is sorted. Validity against a graph is
    /// checked separately by [`CliqueCover::validate`].
    pub fn new(cliques: Vec<Vec<usize>>) -> CliqueCover {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        CliqueCover { cliques }
    }

    /// One singleton clique per vertex.
    pub fn singletons(n: usize) -> CliqueCover {
        CliqueCover {
            cliques: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Index of the clique holding each vertex, or a description of the first
    /// violated invariant.
    pub fn validate(&self, g: &Graph) -> Result<Vec<usize>, String> {
        let mut owner = vec![usize::MAX; g.n()];
        for (i, clique) in self.cliques.iter().enumerate() {
            if clique.is_empty() {
                return Err(format!("clique {i} is empty"));
            }
            for &v in clique {
                if v >= g.n() {
                    return Err(format!("vertex {v} out of range"));
                }
                if owner[v] != usize::MAX {
                    return Err(format!("vertex {v} is covered twice"));
                }
                owner[v] = i;
            }
            if !g.is_clique(clique) {
                return Err(format!("set {clique:?} is not a clique"));
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("vertex {v} is not covered"));
        }
        Ok(owner)
    }
}

/// Repeatedly grows a clique from the lowest uncovered vertex, adding each
/// uncovered vertex (ascending) that is adjacent to everything chosen so far.
pub fn greedy_clique_cover(g: &Graph) -> CliqueCover {
    let mut uncovered = BitSet::full(g.n());
    let mut cliques = Vec::new();
    while let Some(seed) = uncovered.first() {
        uncovered.remove(seed);
        let mut clique = vec![seed];
        let mut candidates: Vec<usize> = g
            .neighbors(seed)
            .iter()
            .copied()
            .filter(|&v| uncovered.contains(v))
            .collect();
        while let Some(&v) = candidates.first() {
            clique.push(v);
            uncovered.remove(v);
            candidates.retain(|&w| w != v && g.has_edge(v, w));
        }
        cliques.push(clique);
    }
    CliqueCover { cliques }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_one_clique() {
        let c = greedy_clique_cover(&Graph::complete(5));
        assert_eq!(c.cliques(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn edgeless_gives_singletons() {
        let g = Graph::empty(4);
        assert_eq!(greedy_clique_cover(&g), CliqueCover::singletons(4));
    }

    #[test]
    fn path_cover_from_vertex_zero() {
        let c = greedy_clique_cover(&Graph::path(3));
        assert_eq!(c.cliques(), &[vec![0, 1], vec![2]]);
        assert!(c.validate(&Graph::path(3)).is_ok());
    }

    #[test]
    fn validate_catches_defects() {
        let g = Graph::path(3);
        assert!(CliqueCover::new(vec![vec![0, 2], vec![1]])
            .validate(&g)
            .is_err());
        assert!(CliqueCover::new(vec![vec![0, 1]]).validate(&g).is_err());
        assert!(CliqueCover::new(vec![vec![0, 1], vec![1, 2]])
            .validate(&g)
            .is_err());
    }
}
