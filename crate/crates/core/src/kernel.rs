//! The kernelization loop (k-test, isolated removal, crown reduction), its
//! replayable trace, and lifting of kernel values back to the input graph.
//!
//! One reduction serves all three problems: storage capacity `>= k`, index
//! coding length `<= n - k` and minrank `<= n - k`. Removing an isolated vertex
//! leaves the capacity unchanged and lowers the other two by one; removing
//! `C ∪ H` of a crown lowers the capacity by `|H|` and the other two by `|C|`.

use num_bigint::BigUint;

use crate::crown::{find_crown_or_matching, verify_crown, CrownDecomposition, CrownOutcome};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, isolated_vertices, Graph};

/// One reduction applied by the kernelizer. Vertex ids are input-graph ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    IsolatedRemoval {
        vertices: Vec<usize>,
    },
    CrownReduction {
        crown: Vec<usize>,
        head: Vec<usize>,
        royal: Vec<usize>,
    },
}

impl ReductionStep {
    /// Amount subtracted from the parameter.
    pub fn k_decrement(&self) -> usize {
        match self {
            ReductionStep::IsolatedRemoval { .. } => 0,
            ReductionStep::CrownReduction { head, .. } => head.len(),
        }
    }

    fn removed(&self) -> usize {
        match self {
            ReductionStep::IsolatedRemoval { vertices } => vertices.len(),
            ReductionStep::CrownReduction { crown, head, .. } => crown.len() + head.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input_n: usize,
    pub input_m: usize,
    /// `None` for value-mode reductions, which carry no parameter.
    pub input_k: Option<i64>,
    pub steps: Vec<ReductionStep>,
    /// The crown routine returned a matching of size `k`.
    pub short_circuit: bool,
    pub kernel_n: usize,
    pub kernel_k: Option<i64>,
    /// Sum of `|H|` over crown steps.
    pub capacity_offset: usize,
    /// Sum of `|C|` over crown steps plus the number of removed isolated vertices.
    pub dual_offset: usize,
}

impl ReductionTrace {
    fn new(g: &Graph, input_k: Option<i64>) -> ReductionTrace {
        ReductionTrace {
            input_n: g.n(),
            input_m: g.m(),
            input_k,
            steps: Vec::new(),
            short_circuit: false,
            kernel_n: 0,
            kernel_k: input_k.map(|_| 0),
            capacity_offset: 0,
            dual_offset: 0,
        }
    }

    fn push(&mut self, step: ReductionStep) {
        match &step {
            ReductionStep::IsolatedRemoval { vertices } => self.dual_offset += vertices.len(),
            ReductionStep::CrownReduction { crown, head, .. } => {
                self.capacity_offset += head.len();
                self.dual_offset += crown.len();
            }
        }
        self.steps.push(step);
    }

    /// Vertices left after applying every step.
    pub fn residual_n(&self) -> usize {
        self.input_n
            .saturating_sub(self.steps.iter().map(ReductionStep::removed).sum())
    }

    /// The kernel is the fixed YES instance rather than the reduced graph, so
    /// kernel values say nothing exact about the input.
    pub fn is_sentinel(&self) -> bool {
        self.short_circuit || self.residual_n() != self.kernel_n
    }

    /// `kernel_n <= max(3 k' - 3, 0)` and `k' <= k`. Value-mode traces carry no
    /// parameter and satisfy this vacuously.
    pub fn kernel_bound_holds(&self) -> bool {
        match (self.input_k, self.kernel_k) {
            (Some(k), Some(kk)) => {
                let bound = (3 * kk - 3).max(0) as usize;
                self.kernel_n <= bound && kk <= k.max(0) && kk >= 0
            }
            (None, None) => true,
            _ => false,
        }
    }

    /// Recorded offsets match the recorded steps.
    pub fn offsets_consistent(&self) -> bool {
        let mut cap = 0;
        let mut dual = 0;
        for step in &self.steps {
            match step {
                ReductionStep::IsolatedRemoval { vertices } => dual += vertices.len(),
                ReductionStep::CrownReduction { crown, head, .. } => {
                    cap += head.len();
                    dual += crown.len();
                }
            }
        }
        cap == self.capacity_offset && dual == self.dual_offset
    }
}

/// A reduced instance together with the trace that produced it.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub graph: Graph,
    pub k: i64,
    /// Input ids of the kernel's vertices; kernel vertex `i` is `vertices[i]`.
    pub vertices: Vec<usize>,
    pub trace: ReductionTrace,
}

/// Result of the parameter-free value-mode reduction.
#[derive(Clone, Debug)]
pub struct Residual {
    pub graph: Graph,
    pub vertices: Vec<usize>,
    pub trace: ReductionTrace,
}

/// Removes every isolated vertex. Returns `G[V \ isolated]` and the removed set.
pub fn apply_isolated_rule(g: &Graph) -> (Graph, Vec<usize>) {
    let isolated = isolated_vertices(g);
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let (sub, _) = induced_subgraph(g, &keep).expect("kept vertices are in range");
    (sub, isolated)
}

/// Replaces `(G, k)` by `(G[R], k - |H|)`.
pub fn apply_crown_rule(g: &Graph, d: &CrownDecomposition, k: i64) -> Result<(Graph, i64)> {
    verify_crown(g, d)?;
    let (sub, _) = induced_subgraph(g, &d.royal)?;
    Ok((sub, k - d.head.len() as i64))
}

struct Reducer {
    graph: Graph,
    ids: Vec<usize>,
    trace: ReductionTrace,
}

impl Reducer {
    fn new(g: &Graph, input_k: Option<i64>) -> Reducer {
        Reducer {
            graph: g.clone(),
            ids: (0..g.n()).collect(),
            trace: ReductionTrace::new(g, input_k),
        }
    }

    fn restrict(&mut self, keep: &[usize]) {
        let (sub, map) = induced_subgraph(&self.graph, keep).expect("kept vertices are in range");
        self.ids = map.kept().iter().map(|&v| self.ids[v]).collect();
        self.graph = sub;
    }

    fn remove_isolated(&mut self) {
        let isolated = isolated_vertices(&self.graph);
        if isolated.is_empty() {
            return;
        }
        let vertices = isolated.iter().map(|&v| self.ids[v]).collect();
        self.trace.push(ReductionStep::IsolatedRemoval { vertices });
        let keep: Vec<usize> = (0..self.graph.n())
            .filter(|&v| self.graph.degree(v) > 0)
            .collect();
        self.restrict(&keep);
    }

    fn remove_crown(&mut self, d: &CrownDecomposition) {
        let lift = |set: &[usize]| set.iter().map(|&v| self.ids[v]).collect::<Vec<_>>();
        self.trace.push(ReductionStep::CrownReduction {
            crown: lift(&d.crown),
            head: lift(&d.head),
            royal: lift(&d.royal),
        });
        self.restrict(&d.royal);
    }
}

/// Runs the kernelization loop on `(g, k)`.
///
/// Each round: if `k <= 0` stop with `(K_0, 0)`; drop isolated vertices; if at
/// least `3k - 2` vertices remain, ask for a crown or a `k`-matching. A matching
/// ends the run with the YES instance `(K_0, 0)` and `short_circuit` set; a
/// crown continues with `(G[R], k - |H|)`. Otherwise the current instance is
/// the kernel.
///
/// The only error is an internal failure of the crown construction.
pub fn kernelize(g: &Graph, k: i64) -> Result<Kernel> {
    let mut r = Reducer::new(g, Some(k));
    let mut k = k;
    loop {
        if k <= 0 {
            return Ok(finish_sentinel(r.trace, false));
        }
        r.remove_isolated();
        let n = r.graph.n();
        let k_usize = k as usize;
        if n + 2 < 3 * k_usize {
            let mut trace = r.trace;
            trace.kernel_n = n;
            trace.kernel_k = Some(k);
            return Ok(Kernel {
                graph: r.graph,
                k,
                vertices: r.ids,
                trace,
            });
        }
        match find_crown_or_matching(&r.graph, k_usize)? {
            CrownOutcome::Matching(_) => return Ok(finish_sentinel(r.trace, true)),
            CrownOutcome::Crown(d) => {
                k -= d.head.len() as i64;
                r.remove_crown(&d);
            }
        }
    }
}

fn finish_sentinel(mut trace: ReductionTrace, short_circuit: bool) -> Kernel {
    trace.short_circuit = short_circuit;
    trace.kernel_n = 0;
    trace.kernel_k = Some(0);
    Kernel {
        graph: Graph::empty(0),
        k: 0,
        vertices: Vec::new(),
        trace,
    }
}

/// Applies only the value-preserving rules: isolated removal, and crown
/// reduction with the largest admissible parameter `floor((n + 2) / 3)`. Stops
/// when the graph is empty or the crown routine answers with a matching.
pub fn reduce_for_values(g: &Graph) -> Result<Residual> {
    let mut r = Reducer::new(g, None);
    loop {
        r.remove_isolated();
        let n = r.graph.n();
        if n == 0 {
            break;
        }
        match find_crown_or_matching(&r.graph, n.div_ceil(3))? {
            CrownOutcome::Matching(_) => break,
            CrownOutcome::Crown(d) => r.remove_crown(&d),
        }
    }
    let mut trace = r.trace;
    trace.kernel_n = r.graph.n();
    trace.kernel_k = None;
    Ok(Residual {
        graph: r.graph,
        vertices: r.ids,
        trace,
    })
}

/// A value of one of the three problems on some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemValue {
    /// `α(Conf_q(G))`; the storage capacity is `log_q` of it.
    Alpha {
        alpha: BigUint,
        q: u64,
    },
    IndexCodingLength(usize),
    Minrank(usize),
}

/// Lifts a value computed on the kernel back to the input graph: `α` is
/// multiplied by `q^capacity_offset`, the other two gain `dual_offset`.
///
/// Refuses traces whose kernel is the fixed YES instance, since those steps do
/// not preserve values.
pub fn lift_value(trace: &ReductionTrace, value: ProblemValue) -> Result<ProblemValue> {
    if trace.short_circuit {
        return Err(Error::NotLiftable("the run ended on a matching"));
    }
    if trace.is_sentinel() {
        return Err(Error::NotLiftable(
            "the kernel replaced a nonempty residual graph",
        ));
    }
    Ok(match value {
        ProblemValue::Alpha { alpha, q } => {
            let factor = BigUint::from(q).pow(trace.capacity_offset as u32);
            ProblemValue::Alpha {
                alpha: alpha * factor,
                q,
            }
        }
        ProblemValue::IndexCodingLength(v) => {
            ProblemValue::IndexCodingLength(v + trace.dual_offset)
        }
        ProblemValue::Minrank(v) => ProblemValue::Minrank(v + trace.dual_offset),
    })
}

/// Re-applies the trace to `g`, checking that every step is legal where it is
/// applied and that the recorded kernel, parameter and offsets follow. Returns
/// the input ids of the kernel vertices.
pub fn replay(g: &Graph, trace: &ReductionTrace) -> Result<Vec<usize>> {
    let fail = |msg: String| Err(Error::Replay(msg));
    if trace.input_n != g.n() || trace.input_m != g.m() {
        return fail(format!(
            "trace was recorded on n={}, m={}, graph has n={}, m={}",
            trace.input_n,
            trace.input_m,
            g.n(),
            g.m()
        ));
    }
    if !trace.offsets_consistent() {
        return fail("offsets disagree with the steps".into());
    }

    let mut current: Vec<usize> = (0..g.n()).collect();
    let mut k = trace.input_k;
    for (i, step) in trace.steps.iter().enumerate() {
        if k.is_some_and(|k| k <= 0) {
            return fail(format!(
                "step {i} applied after the parameter reached {}",
                k.unwrap()
            ));
        }
        let (sub, map) = induced_subgraph(g, &current)?;
        let local = |set: &[usize]| -> Result<Vec<usize>> {
            set.iter()
                .map(|&v| {
                    map.new_id(v).ok_or_else(|| {
                        Error::Replay(format!("step {i}: vertex {v} already removed"))
                    })
                })
                .collect()
        };
        match step {
            ReductionStep::IsolatedRemoval { vertices } => {
                let mut got = local(vertices)?;
                got.sort_unstable();
                if got != isolated_vertices(&sub) {
                    return fail(format!(
                        "step {i}: removed set is not the set of isolated vertices"
                    ));
                }
                current.retain(|v| !vertices.contains(v));
            }
            ReductionStep::CrownReduction { crown, head, royal } => {
                let (c, h) = (local(crown)?, local(head)?);
                let d = CrownDecomposition::with_matched_head(&sub, &c, &h)?.ok_or_else(|| {
                    Error::Replay(format!("step {i}: head does not match into crown"))
                })?;
                let mut r = local(royal)?;
                r.sort_unstable();
                if r != d.royal {
                    return fail(format!(
                        "step {i}: crown, head and royal body do not partition the graph"
                    ));
                }
                verify_crown(&sub, &d).map_err(|e| Error::Replay(format!("step {i}: {e}")))?;
                k = k.map(|k| k - head.len() as i64);
                current = royal.clone();
                current.sort_unstable();
            }
        }
    }

    let (rest, _) = induced_subgraph(g, &current)?;
    match (trace.input_k, k) {
        (Some(_), Some(k)) => {
            if trace.short_circuit {
                if trace.kernel_n != 0 || trace.kernel_k != Some(0) {
                    return fail("short-circuited trace must end in (K_0, 0)".into());
                }
                let admissible =
                    k > 0 && isolated_vertices(&rest).is_empty() && rest.n() + 2 >= 3 * k as usize;
                if !admissible {
                    return fail(
                        "short circuit recorded where the crown routine could not run".into(),
                    );
                }
                Ok(Vec::new())
            } else if k <= 0 {
                if trace.kernel_n != 0 || trace.kernel_k != Some(0) {
                    return fail(format!("parameter fell to {k}, kernel must be (K_0, 0)"));
                }
                Ok(Vec::new())
            } else {
                if trace.kernel_n != rest.n() || trace.kernel_k != Some(k) {
                    return fail(format!(
                        "recorded kernel (n={}, k={:?}) but replay gives (n={}, k={k})",
                        trace.kernel_n,
                        trace.kernel_k,
                        rest.n()
                    ));
                }
                if !isolated_vertices(&rest).is_empty() || rest.n() + 2 >= 3 * k as usize {
                    return fail("kernel is not a stopping state of the reduction loop".into());
                }
                Ok(current)
            }
        }
        (None, None) => {
            if trace.short_circuit || trace.kernel_k.is_some() || trace.kernel_n != rest.n() {
                return fail(format!(
                    "recorded residual n={} but replay gives n={}",
                    trace.kernel_n,
                    rest.n()
                ));
            }
            Ok(current)
        }
        _ => unreachable!("k tracks input_k"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Matching;

    #[test]
    fn isolated_rule_examples() {
        let (g, removed) = apply_isolated_rule(&Graph::empty(4));
        assert_eq!((g.n(), removed), (0, vec![0, 1, 2, 3]));

        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let (h, removed) = apply_isolated_rule(&g);
        assert_eq!(h, Graph::complete(2));
        assert_eq!(removed, vec![2]);

        let (h, removed) = apply_isolated_rule(&Graph::complete(5));
        assert_eq!(h, Graph::complete(5));
        assert!(removed.is_empty());
    }

    #[test]
    fn crown_rule_examples() {
        let star = Graph::star(3);
        let d = CrownDecomposition {
            crown: vec![1, 2],
            head: vec![0],
            royal: vec![],
            witness: Matching::from_edges([(0, 1)]),
        };
        let (g, k) = apply_crown_rule(&star, &d, 2).unwrap();
        assert_eq!((g.n(), k), (0, 1));
        assert_eq!(apply_crown_rule(&star, &d, 1).unwrap().1, 0);

        let star5 = Graph::star(5);
        let d = match find_crown_or_matching(&star5, 2).unwrap() {
            CrownOutcome::Crown(d) => d,
            _ => unreachable!(),
        };
        let (g, k) = apply_crown_rule(&star5, &d, 2).unwrap();
        assert_eq!((g.n(), k), (1, 1));

        let bad = CrownDecomposition { head: vec![], ..d };
        assert!(matches!(
            apply_crown_rule(&star5, &bad, 2),
            Err(Error::InvalidCrown(_))
        ));
    }

    #[test]
    fn k_nonpositive_gives_k0() {
        for k in [0, -3] {
            let out = kernelize(&Graph::complete(5), k).unwrap();
            assert_eq!((out.graph.n(), out.k), (0, 0));
            assert!(out.trace.steps.is_empty());
            assert!(!out.trace.short_circuit);
        }
    }

    #[test]
    fn star_k15_with_k2() {
        let out = kernelize(&Graph::star(6), 2).unwrap();
        assert_eq!((out.graph.n(), out.k), (0, 1));
        let t = &out.trace;
        assert!(!t.short_circuit);
        assert_eq!(
            t.steps,
            vec![
                ReductionStep::CrownReduction {
                    crown: vec![2, 3, 4, 5],
                    head: vec![0],
                    royal: vec![1]
                },
                ReductionStep::IsolatedRemoval { vertices: vec![1] },
            ]
        );
        assert_eq!((t.capacity_offset, t.dual_offset), (1, 5));
        assert_eq!(replay(&Graph::star(6), t).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn k2_short_circuits() {
        let out = kernelize(&Graph::complete(2), 1).unwrap();
        assert_eq!((out.graph.n(), out.k), (0, 0));
        assert!(out.trace.short_circuit);
        assert!(matches!(
            lift_value(&out.trace, ProblemValue::Minrank(0)),
            Err(Error::NotLiftable(_))
        ));
    }

    #[test]
    fn empty_graph_keeps_parameter() {
        let out = kernelize(&Graph::empty(5), 3).unwrap();
        assert_eq!((out.graph.n(), out.k), (0, 3));
        assert_eq!(out.trace.dual_offset, 5);
    }

    #[test]
    fn lifting_star_values() {
        let residual = reduce_for_values(&Graph::star(6)).unwrap();
        assert_eq!(residual.graph.n(), 0);
        let t = &residual.trace;
        assert_eq!(
            lift_value(t, ProblemValue::IndexCodingLength(0)).unwrap(),
            ProblemValue::IndexCodingLength(5)
        );
        assert_eq!(
            lift_value(t, ProblemValue::Minrank(0)).unwrap(),
            ProblemValue::Minrank(5)
        );
        assert_eq!(
            lift_value(
                t,
                ProblemValue::Alpha {
                    alpha: 1u32.into(),
                    q: 2
                }
            )
            .unwrap(),
            ProblemValue::Alpha {
                alpha: 2u32.into(),
                q: 2
            }
        );
    }

    #[test]
    fn empty_trace_lifts_to_identity() {
        let out = kernelize(&Graph::complete(3), 5).unwrap();
        assert!(out.trace.steps.is_empty());
        assert_eq!(out.graph, Graph::complete(3));
        assert_eq!(
            lift_value(&out.trace, ProblemValue::Minrank(1)).unwrap(),
            ProblemValue::Minrank(1)
        );
    }

    #[test]
    fn discarded_residual_is_not_liftable() {
        // Crown step drives k to 0 while a royal body remains.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (3, 4)]).unwrap();
        let out = kernelize(&g, 1).unwrap();
        if !out.trace.short_circuit && out.trace.residual_n() > 0 {
            assert!(out.trace.is_sentinel());
            assert!(lift_value(&out.trace, ProblemValue::Minrank(0)).is_err());
        }
        assert!(lift_value(&kernelize(&g, 0).unwrap().trace, ProblemValue::Minrank(0)).is_err());
    }

    #[test]
    fn replay_rejects_tampering() {
        let g = Graph::star(6);
        let mut t = kernelize(&g, 2).unwrap().trace;
        t.kernel_n = 1;
        assert!(replay(&g, &t).is_err());

        let mut t = kernelize(&g, 2).unwrap().trace;
        t.capacity_offset = 2;
        assert!(replay(&g, &t).is_err());

        let mut t = kernelize(&g, 2).unwrap().trace;
        t.steps[0] = ReductionStep::CrownReduction {
            crown: vec![0],
            head: vec![1],
            royal: vec![2, 3, 4, 5],
        };
        assert!(replay(&g, &t).is_err());
    }
}
