//! JSON documents printed by `decide` and `solve`.

use crownkit_core::{DecisionReport, PhaseTimings, PipelineFailure, ValueReport};
use serde::Serialize;

use crate::tracefile::TraceFile;

#[derive(Serialize)]
pub struct Timings {
    pub kernelize_ms: f64,
    pub confusion_ms: f64,
    pub solve_ms: f64,
}

impl From<&PhaseTimings> for Timings {
    fn from(t: &PhaseTimings) -> Timings {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        Timings {
            kernelize_ms: ms(t.kernelize),
            confusion_ms: ms(t.confusion),
            solve_ms: ms(t.solve),
        }
    }
}

#[derive(Serialize)]
pub struct KernelSize {
    pub n: usize,
    pub k: i64,
}

#[derive(Serialize)]
pub struct DecisionJson {
    pub problem: &'static str,
    pub answer: bool,
    pub kernel: KernelSize,
    pub confusion_size: Option<usize>,
    pub timings: Timings,
    pub trace: TraceFile,
}

impl DecisionJson {
    pub fn new(problem: &'static str, q: Option<u64>, r: &DecisionReport) -> DecisionJson {
        DecisionJson {
            problem,
            answer: r.answer,
            kernel: KernelSize {
                n: r.kernel_n,
                k: r.kernel_k,
            },
            confusion_size: r.confusion_size,
            timings: (&r.timings).into(),
            trace: TraceFile::new(&r.trace, q, Some(r.answer)),
        }
    }
}

#[derive(Serialize)]
pub struct FailureJson {
    pub error: String,
    pub kernel_n: Option<usize>,
    pub trace: Option<TraceFile>,
}

impl FailureJson {
    pub fn new(q: Option<u64>, f: &PipelineFailure) -> FailureJson {
        FailureJson {
            error: f.error.to_string(),
            kernel_n: f.kernel_n,
            trace: f.trace.as_deref().map(|t| TraceFile::new(t, q, None)),
        }
    }
}

#[derive(Serialize)]
pub struct ValuesJson {
    pub q: u64,
    pub p: u64,
    /// Decimal, since it can exceed every fixed-width integer.
    pub alpha: String,
    pub capacity: String,
    pub capacity_integral: Option<u32>,
    pub index_coding_length: usize,
    pub minrank: usize,
    pub residual_n: usize,
    pub trace: TraceFile,
}

impl From<&ValueReport> for ValuesJson {
    fn from(v: &ValueReport) -> ValuesJson {
        let integral = v.integral_capacity();
        ValuesJson {
            q: v.q,
            p: v.p,
            alpha: v.alpha.to_string(),
            capacity: match integral {
                Some(c) => c.to_string(),
                None => format!("log_{}({})", v.q, v.alpha),
            },
            capacity_integral: integral,
            index_coding_length: v.index_coding_length,
            minrank: v.minrank,
            residual_n: v.residual_n,
            trace: TraceFile::new(&v.trace, Some(v.q), None),
        }
    }
}
