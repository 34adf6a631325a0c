//! Exact solvers for the three graph quantities, on top of the confusion graph
//! (`α` gives the storage capacity, `⌈log_q χ⌉` the index coding length) and a
//! direct minrank search over prime fields.
//!
//! Storage capacity is never turned into a floating-point logarithm: it is
//! carried as the integer `α(Conf_q(G))` and compared against `q^k` exactly.

mod codes;
mod coloring;
mod confusion;
mod gf;
mod independence;
mod minrank;
pub mod oracle;

pub use codes::{clique_cover_index_code, clique_cover_minrank_matrix, IndexCode};
pub use coloring::{chromatic_number, dsatur_coloring, find_coloring, is_colorable};
pub use confusion::{build_confusion_graph, ConfusionGraph};
pub use gf::{gf_rank, is_prime, GfMatrix, MAX_MODULUS};
pub use independence::{independence_number, maximum_independent_set};
pub use minrank::{minrank, minrank_by_pattern_enumeration, represents};

use num_bigint::BigUint;

use crate::error::Result;
use crate::graph::{greedy_clique_cover, greedy_maximal_matching, induced_subgraph, Graph};

/// Size limits for the exact solvers. Exceeding one is an error, never an
/// approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverCaps {
    /// Maximum `q^n` when building a confusion graph.
    pub confusion: usize,
    /// Maximum vertex count handed to the independence solver.
    pub alpha: usize,
    /// Maximum vertex count handed to the coloring solver.
    pub chi: usize,
    /// Maximum normalized minrank search space `p^(2|E|)`.
    pub minrank: u128,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            confusion: 1 << 20,
            alpha: 4096,
            chi: 512,
            minrank: 1 << 40,
        }
    }
}

/// `α(Conf_q(G))`. The storage capacity is `log_q` of this value.
pub fn storage_capacity_alpha(g: &Graph, q: u64, caps: &SolverCaps) -> Result<usize> {
    let conf = build_confusion_graph(g, q, caps.confusion.min(caps.alpha))
        .map_err(|e| relabel_cap(e, "confusion graph for the independence solver"))?;
    confusion_independence_number(&conf, caps)
}

/// Maximum matching size for graphs small enough to branch on, otherwise the
/// size of a greedy maximal matching.
fn matching_number_lower_bound(g: &Graph) -> usize {
    fn best(g: &Graph, free: u64) -> usize {
        let Some(v) = (free != 0).then(|| free.trailing_zeros() as usize) else {
            return 0;
        };
        let rest = free & !(1 << v);
        let mut m = best(g, rest);
        for &w in g.neighbors(v) {
            if rest >> w & 1 == 1 {
                m = m.max(1 + best(g, rest & !(1 << w)));
            }
        }
        m
    }
    if g.n() <= 14 {
        best(g, (1u64 << g.n()) - 1)
    } else {
        greedy_maximal_matching(g).len()
    }
}

/// `α` of a confusion graph.
///
/// Conflicts depend only on the difference of two words, so the graph is a
/// Cayley graph on `Z_q^n`. Translating a maximum independent set puts the
/// zero word in it, leaving only the zero word's non-neighbors to search.
pub fn confusion_independence_number(conf: &ConfusionGraph, caps: &SolverCaps) -> Result<usize> {
    let h = &conf.graph;
    if h.n() > caps.alpha {
        return Err(crate::Error::CapExceeded {
            what: "independence solver input",
            size: h.n() as u128,
            cap: caps.alpha as u128,
        });
    }
    let rest: Vec<usize> = (1..h.n()).filter(|&v| !h.has_edge(0, v)).collect();
    let (sub, _) = induced_subgraph(h, &rest)?;
    Ok(1 + independence_number(&sub, caps.alpha)?)
}

/// Decides `Capa_q(G) >= k` from bounds alone when they suffice: a matching
/// of size `r` gives `Capa >= r`, and an independent set `I` gives
/// `Capa <= n - |I|` since its symbols are functions of the others.
pub fn storage_capacity_by_bounds(g: &Graph, k: i64) -> Result<Option<bool>> {
    if k <= matching_number_lower_bound(g) as i64 {
        return Ok(Some(true));
    }
    if (g.n() - independence_number(g, usize::MAX)?) < k as usize {
        return Ok(Some(false));
    }
    Ok(None)
}

/// `Capa_q(G) >= k`, decided as `α >= q^k` in exact arithmetic.
pub fn capacity_at_least(alpha: usize, q: u64, k: i64) -> bool {
    if k <= 0 {
        return true;
    }
    BigUint::from(alpha) >= BigUint::from(q).pow(k as u32)
}

/// Lower bound `⌈q^n / α⌉` on `χ(Conf_q(G))`.
///
/// Whether two words conflict depends only on their difference, so the
/// confusion graph is a Cayley graph on `Z_q^n`. Vertex-transitive graphs have
/// fractional chromatic number `|V| / α`, which bounds `χ` from below.
fn cayley_chromatic_bound(conf: &ConfusionGraph, caps: &SolverCaps) -> Result<usize> {
    let alpha = confusion_independence_number(conf, caps)?;
    Ok(conf.vertex_count().div_ceil(alpha.max(1)))
}

/// Exact `χ(Conf_q(G))`.
pub fn confusion_chromatic_number(g: &Graph, q: u64, caps: &SolverCaps) -> Result<usize> {
    let conf = build_confusion_graph(g, q, caps.confusion.min(caps.chi))
        .map_err(|e| relabel_cap(e, "confusion graph for the coloring solver"))?;
    let lower = cayley_chromatic_bound(&conf, caps)?;
    coloring::chromatic_number_at_least(&conf.graph, lower, caps.chi)
}

/// Exact `Ind_q(G) = ⌈log_q χ(Conf_q(G))⌉`, found as the least `l` for which the
/// confusion graph is `q^l`-colorable.
pub fn index_coding_length(g: &Graph, q: u64, caps: &SolverCaps) -> Result<usize> {
    let conf = build_confusion_graph(g, q, caps.confusion.min(caps.chi))
        .map_err(|e| relabel_cap(e, "confusion graph for the coloring solver"))?;
    let h = &conf.graph;
    let lower = coloring::greedy_clique(h)
        .len()
        .max(cayley_chromatic_bound(&conf, caps)?);
    let mut len = 0usize;
    let mut colors: u128 = 1;
    while colors < lower as u128 {
        len += 1;
        colors *= q as u128;
    }
    let floor = independence_number(g, usize::MAX)?;
    while len < floor {
        len += 1;
        colors *= q as u128;
    }
    let upper = known_code_length(g, &conf);
    loop {
        if len >= upper || is_colorable(h, colors as usize, caps.chi)? {
            return Ok(len);
        }
        len += 1;
        colors *= q as u128;
    }
}

/// Length of a code found without coloring search: `⌈log_q⌉` of a DSATUR
/// coloring of the confusion graph, the greedy clique cover code, or for prime
/// `q` an optimal linear code (its length is the minrank over GF(q)).
fn known_code_length(g: &Graph, conf: &ConfusionGraph) -> usize {
    let dsatur = coloring::color_count(&dsatur_coloring(&conf.graph)) as u128;
    let mut len = 0;
    let mut colors: u128 = 1;
    while colors < dsatur {
        len += 1;
        colors *= conf.q as u128;
    }
    let mut best = len.min(greedy_clique_cover(g).len());
    if is_prime(conf.q) && conf.q <= MAX_MODULUS {
        // The confusion graph fits under the coloring cap, so `g` is tiny and
        // the search-space cap meant for direct minrank queries is not needed.
        if let Ok(linear) = minrank(g, conf.q, u128::MAX) {
            best = best.min(linear);
        }
    }
    best
}

/// `Ind_q(G) <= t`, i.e. `χ(Conf_q(G)) <= q^t`.
pub fn index_coding_at_most(g: &Graph, q: u64, t: i64, caps: &SolverCaps) -> Result<bool> {
    if t < 0 {
        return Ok(false);
    }
    if t as usize >= g.n() {
        // The singleton clique cover gives a code of length n.
        return Ok(true);
    }
    let conf = build_confusion_graph(g, q, caps.confusion.min(caps.chi))
        .map_err(|e| relabel_cap(e, "confusion graph for the coloring solver"))?;
    index_coding_at_most_with(g, &conf, t as usize, caps)
}

/// [`index_coding_at_most`] on a prebuilt confusion graph, for `t < n`.
pub fn index_coding_at_most_with(
    g: &Graph,
    conf: &ConfusionGraph,
    t: usize,
    caps: &SolverCaps,
) -> Result<bool> {
    if t >= known_code_length(g, conf) {
        return Ok(true);
    }
    // An independent set of G must be sent in full.
    if t < independence_number(g, usize::MAX)? {
        return Ok(false);
    }
    // q^t < q^n = |V(Conf)| fits in usize here.
    let colors = conf.q.pow(t as u32) as usize;
    if colors < coloring::greedy_clique(&conf.graph).len()
        || colors < cayley_chromatic_bound(conf, caps)?
    {
        return Ok(false);
    }
    is_colorable(&conf.graph, colors, caps.chi)
}

fn relabel_cap(e: crate::Error, what: &'static str) -> crate::Error {
    match e {
        crate::Error::CapExceeded { size, cap, .. } => {
            crate::Error::CapExceeded { what, size, cap }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_examples() {
        let caps = SolverCaps::default();
        assert_eq!(
            storage_capacity_alpha(&Graph::complete(2), 2, &caps).unwrap(),
            2
        );
        assert_eq!(
            storage_capacity_alpha(&Graph::complete(3), 2, &caps).unwrap(),
            4
        );
        for q in 2..5 {
            assert_eq!(
                storage_capacity_alpha(&Graph::empty(0), q, &caps).unwrap(),
                1
            );
        }
    }

    #[test]
    fn bounds_decide_easy_capacity_questions() {
        assert_eq!(
            storage_capacity_by_bounds(&Graph::complete(4), 2).unwrap(),
            Some(true)
        );
        assert_eq!(
            storage_capacity_by_bounds(&Graph::star(6), 2).unwrap(),
            Some(false)
        );
        assert_eq!(
            storage_capacity_by_bounds(&Graph::cycle(5), 3).unwrap(),
            None
        );
        let caps = SolverCaps::default();
        let conf = build_confusion_graph(&Graph::cycle(5), 2, 1 << 20).unwrap();
        assert_eq!(
            confusion_independence_number(&conf, &caps).unwrap(),
            independence_number(&conf.graph, 4096).unwrap()
        );
    }

    #[test]
    fn capacity_threshold_is_exact() {
        assert!(capacity_at_least(4, 2, 2));
        assert!(!capacity_at_least(3, 2, 2));
        assert!(capacity_at_least(1, 7, 0));
        assert!(capacity_at_least(0, 7, -1));
        assert!(!capacity_at_least(usize::MAX, 2, 64));
    }

    #[test]
    fn index_coding_examples() {
        let caps = SolverCaps::default();
        assert_eq!(
            index_coding_length(&Graph::complete(2), 2, &caps).unwrap(),
            1
        );
        assert_eq!(index_coding_length(&Graph::empty(3), 2, &caps).unwrap(), 3);
        assert_eq!(index_coding_length(&Graph::empty(0), 2, &caps).unwrap(), 0);
        // C5 over the binary alphabet needs 3 symbols.
        assert_eq!(index_coding_length(&Graph::cycle(5), 2, &caps).unwrap(), 3);
    }

    #[test]
    fn confusion_chromatic_examples() {
        let caps = SolverCaps::default();
        assert_eq!(
            confusion_chromatic_number(&Graph::complete(3), 2, &caps).unwrap(),
            2
        );
        assert_eq!(
            confusion_chromatic_number(&Graph::empty(3), 2, &caps).unwrap(),
            8
        );
        let c5 = build_confusion_graph(&Graph::cycle(5), 2, 1 << 20).unwrap();
        assert_eq!(
            confusion_chromatic_number(&Graph::cycle(5), 2, &caps).unwrap(),
            chromatic_number(&c5.graph, 512).unwrap()
        );
    }

    #[test]
    fn index_coding_decision_matches_value() {
        let caps = SolverCaps::default();
        for g in [
            Graph::cycle(5),
            Graph::path(4),
            Graph::empty(2),
            Graph::complete(4),
        ] {
            let ind = index_coding_length(&g, 2, &caps).unwrap() as i64;
            for t in -1..=g.n() as i64 {
                assert_eq!(
                    index_coding_at_most(&g, 2, t, &caps).unwrap(),
                    ind <= t,
                    "{g:?} t={t}"
                );
            }
        }
    }

    #[test]
    fn caps_are_errors() {
        let caps = SolverCaps {
            chi: 16,
            ..SolverCaps::default()
        };
        assert!(matches!(
            index_coding_length(&Graph::path(5), 2, &caps),
            Err(crate::Error::CapExceeded { .. })
        ));
        let caps = SolverCaps {
            alpha: 8,
            ..SolverCaps::default()
        };
        assert!(storage_capacity_alpha(&Graph::path(4), 2, &caps).is_err());
    }
}
