//! Crown decompositions `(C, H, R)`: the crown `C` is independent, the head `H`
//! separates `C` from the royal body `R`, and `H` matches into `C`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{
    greedy_maximal_matching, max_bipartite_matching, min_vertex_cover_bipartite, Graph, Matching,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrownDecomposition {
    pub crown: Vec<usize>,
    pub head: Vec<usize>,
    pub royal: Vec<usize>,
    /// Matching of the head into the crown, `|head|` edges.
    pub witness: Matching,
}

/// The first violated clause found by [`verify_crown`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrownDefect {
    NotAPartition(usize),
    EmptyCrown,
    EmptyHead,
    CrownNotIndependent(usize, usize),
    CrownTouchesRoyal { crown: usize, royal: usize },
    WitnessSize { expected: usize, found: usize },
    WitnessEdge(usize, usize),
}

impl fmt::Display for CrownDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrownDefect::NotAPartition(v) => {
                write!(f, "vertex {v} is missing, repeated or out of range")
            }
            CrownDefect::EmptyCrown => write!(f, "crown is empty"),
            CrownDefect::EmptyHead => write!(f, "head is empty"),
            CrownDefect::CrownNotIndependent(u, v) => {
                write!(f, "crown vertices {u} and {v} are adjacent")
            }
            CrownDefect::CrownTouchesRoyal { crown, royal } => {
                write!(
                    f,
                    "crown vertex {crown} is adjacent to royal vertex {royal}"
                )
            }
            CrownDefect::WitnessSize { expected, found } => {
                write!(f, "witness has {found} edges, head has {expected} vertices")
            }
            CrownDefect::WitnessEdge(u, v) => write!(
                f,
                "witness edge ({u}, {v}) is not a head-crown matching edge"
            ),
        }
    }
}

impl std::error::Error for CrownDefect {}

impl CrownDecomposition {
    /// Builds a decomposition for given `crown`/`head`, taking every other vertex
    /// as royal and a maximum head-crown matching as witness. Returns `None` when
    /// the head does not match into the crown.
    pub fn with_matched_head(
        g: &Graph,
        crown: &[usize],
        head: &[usize],
    ) -> Result<Option<CrownDecomposition>> {
        let witness = max_bipartite_matching(g, head, crown)?;
        if witness.len() != head.len() {
            return Ok(None);
        }
        let mut in_ch = vec![false; g.n()];
        for &v in crown.iter().chain(head) {
            in_ch[v] = true;
        }
        let mut crown = crown.to_vec();
        let mut head = head.to_vec();
        crown.sort_unstable();
        head.sort_unstable();
        Ok(Some(CrownDecomposition {
            crown,
            head,
            royal: (0..g.n()).filter(|&v| !in_ch[v]).collect(),
            witness,
        }))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Unassigned,
    Crown,
    Head,
    Royal,
}

/// Checks every clause of the crown definition against `g`.
pub fn verify_crown(g: &Graph, d: &CrownDecomposition) -> Result<(), CrownDefect> {
    let mut part = vec![Part::Unassigned; g.n()];
    for (set, label) in [
        (&d.crown, Part::Crown),
        (&d.head, Part::Head),
        (&d.royal, Part::Royal),
    ] {
        for &v in set {
            if v >= g.n() || part[v] != Part::Unassigned {
                return Err(CrownDefect::NotAPartition(v));
            }
            part[v] = label;
        }
    }
    if let Some(v) = part.iter().position(|&p| p == Part::Unassigned) {
        return Err(CrownDefect::NotAPartition(v));
    }
    if d.crown.is_empty() {
        return Err(CrownDefect::EmptyCrown);
    }
    if d.head.is_empty() {
        return Err(CrownDefect::EmptyHead);
    }
    for &c in &d.crown {
        for &w in g.neighbors(c) {
            match part[w] {
                Part::Crown => return Err(CrownDefect::CrownNotIndependent(c.min(w), c.max(w))),
                Part::Royal => return Err(CrownDefect::CrownTouchesRoyal { crown: c, royal: w }),
                _ => {}
            }
        }
    }
    if d.witness.len() != d.head.len() {
        return Err(CrownDefect::WitnessSize {
            expected: d.head.len(),
            found: d.witness.len(),
        });
    }
    let mut used = vec![false; g.n()];
    for &(u, v) in d.witness.edges() {
        let bad = || CrownDefect::WitnessEdge(u, v);
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
            return Err(bad());
        }
        let joins = matches!(
            (part[u], part[v]),
            (Part::Head, Part::Crown) | (Part::Crown, Part::Head)
        );
        if !joins {
            return Err(bad());
        }
        used[u] = true;
        used[v] = true;
    }
    Ok(())
}

/// Outcome of [`find_crown_or_matching`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrownOutcome {
    Matching(Matching),
    Crown(CrownDecomposition),
}

/// Given `k >= 1` and a graph without isolated vertices on at least `3k - 2`
/// vertices, returns a matching of exactly `k` edges or a crown decomposition.
///
/// Construction: a greedy maximal matching `M`; if it is too small, the
/// unmatched vertices `I` form an independent set of size at least `k`, and a
/// maximum matching between `V(M)` and `I` with its König cover `X` yields the
/// head `X ∩ V(M)` and crown `I \ X`.
pub fn find_crown_or_matching(g: &Graph, k: usize) -> Result<CrownOutcome> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    if g.n() + 2 < 3 * k {
        return Err(Error::Precondition(format!(
            "graph has {} vertices, fewer than 3k-2 = {}",
            g.n(),
            3 * k - 2
        )));
    }

    let maximal = greedy_maximal_matching(g);
    if maximal.len() >= k {
        return Ok(CrownOutcome::Matching(maximal.truncated(k)));
    }

    let matched = maximal.vertices();
    let mut in_matched = vec![false; g.n()];
    for &v in &matched {
        in_matched[v] = true;
    }
    let unmatched: Vec<usize> = (0..g.n()).filter(|&v| !in_matched[v]).collect();

    let across = max_bipartite_matching(g, &matched, &unmatched)?;
    if across.len() >= k {
        return Ok(CrownOutcome::Matching(across.truncated(k)));
    }
    let cover = min_vertex_cover_bipartite(g, &matched, &unmatched, &across)?;
    let mut in_cover = vec![false; g.n()];
    for &v in &cover {
        in_cover[v] = true;
    }

    let head: Vec<usize> = matched.iter().copied().filter(|&v| in_cover[v]).collect();
    let crown: Vec<usize> = unmatched
        .iter()
        .copied()
        .filter(|&v| !in_cover[v])
        .collect();
    if head.is_empty() || crown.is_empty() {
        return Err(Error::CrownGuarantee(format!(
            "head has {} and crown has {} vertices",
            head.len(),
            crown.len()
        )));
    }
    let royal: Vec<usize> = (0..g.n())
        .filter(|&v| in_cover[v] != in_matched[v])
        .collect();
    let witness = Matching::from_edges(
        across
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| (in_cover[u] && in_matched[u]) || (in_cover[v] && in_matched[v])),
    );
    let d = CrownDecomposition {
        crown,
        head,
        royal,
        witness,
    };
    verify_crown(g, &d).map_err(|defect| Error::CrownGuarantee(defect.to_string()))?;
    Ok(CrownOutcome::Crown(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star3() -> Graph {
        Graph::star(4)
    }

    #[test]
    fn star_is_canonical_crown() {
        let d = CrownDecomposition {
            crown: vec![1, 2, 3],
            head: vec![0],
            royal: vec![],
            witness: Matching::from_edges([(0, 1)]),
        };
        assert_eq!(verify_crown(&star3(), &d), Ok(()));
    }

    #[test]
    fn star_with_center_as_crown_fails_separation() {
        let d = CrownDecomposition {
            crown: vec![0],
            head: vec![1],
            royal: vec![2, 3],
            witness: Matching::from_edges([(0, 1)]),
        };
        assert!(matches!(
            verify_crown(&star3(), &d),
            Err(CrownDefect::CrownTouchesRoyal { crown: 0, .. })
        ));
    }

    #[test]
    fn triangle_has_no_crown() {
        let g = Graph::complete(3);
        // Every assignment of the 3 vertices to C/H/R.
        for code in 0..27usize {
            let mut parts = [vec![], vec![], vec![]];
            for v in 0..3 {
                parts[code / 3usize.pow(v as u32) % 3].push(v);
            }
            let [crown, head, _] = &parts;
            if crown.is_empty() || head.is_empty() {
                continue;
            }
            if let Some(d) = CrownDecomposition::with_matched_head(&g, crown, head).unwrap() {
                assert!(verify_crown(&g, &d).is_err(), "{d:?}");
            }
        }
    }

    #[test]
    fn defects_are_reported() {
        let g = Graph::path(3);
        let base = CrownDecomposition {
            crown: vec![0, 2],
            head: vec![1],
            royal: vec![],
            witness: Matching::from_edges([(0, 1)]),
        };
        assert_eq!(verify_crown(&g, &base), Ok(()));

        let mut d = base.clone();
        d.royal.push(1);
        assert_eq!(verify_crown(&g, &d), Err(CrownDefect::NotAPartition(1)));

        let mut d = base.clone();
        d.witness = Matching::new();
        assert_eq!(
            verify_crown(&g, &d),
            Err(CrownDefect::WitnessSize {
                expected: 1,
                found: 0
            })
        );

        let mut d = base.clone();
        d.witness = Matching::from_edges([(0, 2)]);
        assert_eq!(verify_crown(&g, &d), Err(CrownDefect::WitnessEdge(0, 2)));

        let g2 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            verify_crown(&g2, &base),
            Err(CrownDefect::CrownNotIndependent(0, 2))
        );
    }

    #[test]
    fn triangle_k1_gives_matching() {
        match find_crown_or_matching(&Graph::complete(3), 1).unwrap() {
            CrownOutcome::Matching(m) => assert_eq!(m.edges(), &[(0, 1)]),
            other => panic!("expected matching, got {other:?}"),
        }
    }

    #[test]
    fn star_five_k2_gives_crown() {
        let g = Graph::star(5);
        match find_crown_or_matching(&g, 2).unwrap() {
            CrownOutcome::Crown(d) => {
                assert_eq!(d.head, vec![0]);
                assert_eq!(d.crown, vec![2, 3, 4]);
                assert_eq!(d.royal, vec![1]);
                assert_eq!(verify_crown(&g, &d), Ok(()));
            }
            other => panic!("expected crown, got {other:?}"),
        }
    }

    #[test]
    fn perfect_matching_graph() {
        for k in 1..3 {
            let g = Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).unwrap();
            match find_crown_or_matching(&g, k).unwrap() {
                CrownOutcome::Matching(m) => {
                    assert_eq!(m.len(), k);
                    assert!(m.is_valid_in(&g));
                }
                other => panic!("expected matching, got {other:?}"),
            }
        }
    }

    #[test]
    fn preconditions_enforced() {
        assert!(matches!(
            find_crown_or_matching(&Graph::complete(3), 0),
            Err(Error::Precondition(_))
        ));
        let with_isolated = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            find_crown_or_matching(&with_isolated, 1),
            Err(Error::Precondition(_))
        ));
        // 3 vertices < 3*2-2 = 4
        assert!(matches!(
            find_crown_or_matching(&Graph::complete(3), 2),
            Err(Error::Precondition(_))
        ));
    }
}
