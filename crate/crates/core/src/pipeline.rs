//! Kernelize-then-solve decision procedures and the exact value mode.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact::{
    build_confusion_graph, capacity_at_least, confusion_independence_number,
    index_coding_at_most_with, index_coding_length, is_prime, minrank, storage_capacity_alpha,
    storage_capacity_by_bounds, SolverCaps,
};
use crate::graph::Graph;
use crate::kernel::{
    kernelize, lift_value, reduce_for_values, Kernel, ProblemValue, ReductionTrace,
};

/// The three decision problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// `Capa_q(G) >= k`.
    StorageCapacity { q: u64 },
    /// `Ind_q(G) <= n - k`.
    DualIndexCoding { q: u64 },
    /// `minrank_GF(p)(G) <= n - k`.
    DualMinrank { p: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub kernelize: Duration,
    pub confusion: Duration,
    pub solve: Duration,
}

#[derive(Clone, Debug)]
pub struct DecisionReport {
    pub answer: bool,
    pub trace: ReductionTrace,
    pub kernel_n: usize,
    pub kernel_k: i64,
    /// Vertex count of the kernel's confusion graph, when one was built.
    pub confusion_size: Option<usize>,
    pub timings: PhaseTimings,
}

/// A failed pipeline run. Carries the trace when kernelization got that far.
#[derive(Clone, Debug)]
pub struct PipelineFailure {
    pub error: Error,
    pub trace: Option<Box<ReductionTrace>>,
    pub kernel_n: Option<usize>,
}

impl PipelineFailure {
    fn bare(error: Error) -> PipelineFailure {
        PipelineFailure {
            error,
            trace: None,
            kernel_n: None,
        }
    }

    fn after(error: Error, trace: &ReductionTrace) -> PipelineFailure {
        PipelineFailure {
            error,
            trace: Some(Box::new(trace.clone())),
            kernel_n: Some(trace.kernel_n),
        }
    }
}

impl fmt::Display for PipelineFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kernel_n {
            Some(n) => write!(f, "{} (kernel has {n} vertices)", self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

impl std::error::Error for PipelineFailure {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

impl From<Error> for PipelineFailure {
    fn from(error: Error) -> Self {
        PipelineFailure::bare(error)
    }
}

pub type PipelineResult<T> = std::result::Result<T, PipelineFailure>;

/// Kernelizes `(g, k)` and decides `problem` exactly on the kernel.
pub fn decide(
    g: &Graph,
    k: i64,
    problem: Problem,
    caps: &SolverCaps,
) -> PipelineResult<DecisionReport> {
    match problem {
        Problem::StorageCapacity { q } | Problem::DualIndexCoding { q } if q < 2 => {
            return Err(Error::InvalidAlphabet(q).into());
        }
        Problem::DualMinrank { p } if !is_prime(p) => return Err(Error::NotPrime(p).into()),
        _ => {}
    }
    let start = Instant::now();
    let kernel = kernelize(g, k)?;
    let mut timings = PhaseTimings {
        kernelize: start.elapsed(),
        ..PhaseTimings::default()
    };
    let trace = &kernel.trace;
    let mut confusion_size = None;

    let answer = if trace.short_circuit {
        true
    } else {
        solve_kernel(&kernel, problem, caps, &mut timings, &mut confusion_size)
            .map_err(|e| PipelineFailure::after(e, trace))?
    };
    Ok(DecisionReport {
        answer,
        kernel_n: kernel.graph.n(),
        kernel_k: kernel.k,
        trace: kernel.trace,
        confusion_size,
        timings,
    })
}

fn solve_kernel(
    kernel: &Kernel,
    problem: Problem,
    caps: &SolverCaps,
    timings: &mut PhaseTimings,
    confusion_size: &mut Option<usize>,
) -> Result<bool> {
    let g = &kernel.graph;
    let n = g.n() as i64;
    match problem {
        Problem::StorageCapacity { q } => {
            if let Some(answer) = storage_capacity_by_bounds(g, kernel.k)? {
                return Ok(answer);
            }
            let t = Instant::now();
            let conf = build_confusion_graph(g, q, caps.confusion.min(caps.alpha))?;
            timings.confusion = t.elapsed();
            *confusion_size = Some(conf.vertex_count());
            let t = Instant::now();
            let alpha = confusion_independence_number(&conf, caps)?;
            timings.solve = t.elapsed();
            Ok(capacity_at_least(alpha, q, kernel.k))
        }
        Problem::DualIndexCoding { q } => {
            let target = n - kernel.k;
            if target < 0 {
                return Ok(false);
            }
            if target >= n {
                return Ok(true);
            }
            let t = Instant::now();
            let conf = build_confusion_graph(g, q, caps.confusion.min(caps.chi))?;
            timings.confusion = t.elapsed();
            *confusion_size = Some(conf.vertex_count());
            let t = Instant::now();
            let answer = index_coding_at_most_with(g, &conf, target as usize, caps)?;
            timings.solve = t.elapsed();
            Ok(answer)
        }
        Problem::DualMinrank { p } => {
            let target = n - kernel.k;
            if target < 0 {
                return Ok(false);
            }
            if target >= n {
                return Ok(true);
            }
            let t = Instant::now();
            let rank = minrank(g, p, caps.minrank)?;
            timings.solve = t.elapsed();
            Ok(rank as i64 <= target)
        }
    }
}

/// Decides `Capa_q(G) >= k`.
pub fn decide_storage_capacity(
    g: &Graph,
    k: i64,
    q: u64,
    caps: &SolverCaps,
) -> PipelineResult<DecisionReport> {
    decide(g, k, Problem::StorageCapacity { q }, caps)
}

/// Decides `Ind_q(G) <= n - k`.
pub fn decide_dual_index_coding(
    g: &Graph,
    k: i64,
    q: u64,
    caps: &SolverCaps,
) -> PipelineResult<DecisionReport> {
    decide(g, k, Problem::DualIndexCoding { q }, caps)
}

/// Decides `minrank_GF(p)(G) <= n - k`.
pub fn decide_dual_minrank(
    g: &Graph,
    k: i64,
    p: u64,
    caps: &SolverCaps,
) -> PipelineResult<DecisionReport> {
    decide(g, k, Problem::DualMinrank { p }, caps)
}

/// Exact values of all three problems on one graph.
#[derive(Clone, Debug)]
pub struct ValueReport {
    /// `α(Conf_q(G))`; the storage capacity is `log_q` of it.
    pub alpha: BigUint,
    pub q: u64,
    pub p: u64,
    pub index_coding_length: usize,
    pub minrank: usize,
    /// Vertex count of the graph handed to the exact solvers.
    pub residual_n: usize,
    pub trace: ReductionTrace,
}

impl ValueReport {
    /// `Capa_q(G) >= k`.
    pub fn capacity_at_least(&self, k: u32) -> bool {
        self.alpha >= BigUint::from(self.q).pow(k)
    }

    /// `Capa_q(G)` when it is an integer, i.e. when `α` is a power of `q`.
    pub fn integral_capacity(&self) -> Option<u32> {
        let q = BigUint::from(self.q);
        let mut power = BigUint::from(1u32);
        let mut e = 0;
        while power < self.alpha {
            power *= &q;
            e += 1;
        }
        (power == self.alpha).then_some(e)
    }

    /// `q^Ind · α >= q^n`.
    pub fn duality_holds(&self) -> bool {
        let q = BigUint::from(self.q);
        q.pow(self.index_coding_length as u32) * &self.alpha >= q.pow(self.trace.input_n as u32)
    }
}

/// Reduces with the value-preserving rules, solves the residual graph exactly
/// and lifts the three values back to `g`.
pub fn compute_values(g: &Graph, q: u64, p: u64, caps: &SolverCaps) -> PipelineResult<ValueReport> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q).into());
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p).into());
    }
    let residual = reduce_for_values(g)?;
    let trace = &residual.trace;
    let h = &residual.graph;
    let solve = || -> Result<(BigUint, usize, usize)> {
        let alpha = BigUint::from(storage_capacity_alpha(h, q, caps)?);
        let ind = index_coding_length(h, q, caps)?;
        let mr = minrank(h, p, caps.minrank)?;
        let ProblemValue::Alpha { alpha, .. } =
            lift_value(trace, ProblemValue::Alpha { alpha, q })?
        else {
            unreachable!()
        };
        let ProblemValue::IndexCodingLength(ind) =
            lift_value(trace, ProblemValue::IndexCodingLength(ind))?
        else {
            unreachable!()
        };
        let ProblemValue::Minrank(mr) = lift_value(trace, ProblemValue::Minrank(mr))? else {
            unreachable!()
        };
        Ok((alpha, ind, mr))
    };
    let (alpha, index_coding_length, minrank) =
        solve().map_err(|e| PipelineFailure::after(e, trace))?;
    Ok(ValueReport {
        alpha,
        q,
        p,
        index_coding_length,
        minrank,
        residual_n: h.n(),
        trace: residual.trace,
    })
}
