//! JSON forms of reduction traces and crown decompositions.

use crownkit_core::{CrownDecomposition, Matching, ReductionStep, ReductionTrace};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceFile {
    pub input: TraceInput,
    pub steps: Vec<TraceStep>,
    pub short_circuit: bool,
    pub kernel: TraceKernel,
    pub offsets: TraceOffsets,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub answer: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceInput {
    pub n: usize,
    pub m: usize,
    pub k: Option<i64>,
    pub q: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TraceStep {
    Isolated {
        vertices: Vec<usize>,
    },
    Crown {
        #[serde(rename = "H")]
        head: Vec<usize>,
        #[serde(rename = "C")]
        crown: Vec<usize>,
        #[serde(rename = "R")]
        royal: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceKernel {
    pub n: usize,
    pub k: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceOffsets {
    pub capacity: usize,
    pub dual: usize,
}

impl TraceFile {
    pub fn new(trace: &ReductionTrace, q: Option<u64>, answer: Option<bool>) -> TraceFile {
        let steps = trace
            .steps
            .iter()
            .map(|s| match s {
                ReductionStep::IsolatedRemoval { vertices } => TraceStep::Isolated {
                    vertices: vertices.clone(),
                },
                ReductionStep::CrownReduction { crown, head, royal } => TraceStep::Crown {
                    head: head.clone(),
                    crown: crown.clone(),
                    royal: royal.clone(),
                },
            })
            .collect();
        TraceFile {
            input: TraceInput {
                n: trace.input_n,
                m: trace.input_m,
                k: trace.input_k,
                q,
            },
            steps,
            short_circuit: trace.short_circuit,
            kernel: TraceKernel {
                n: trace.kernel_n,
                k: trace.kernel_k,
            },
            offsets: TraceOffsets {
                capacity: trace.capacity_offset,
                dual: trace.dual_offset,
            },
            answer,
        }
    }

    pub fn to_trace(&self) -> ReductionTrace {
        ReductionTrace {
            input_n: self.input.n,
            input_m: self.input.m,
            input_k: self.input.k,
            steps: self
                .steps
                .iter()
                .map(|s| match s {
                    TraceStep::Isolated { vertices } => ReductionStep::IsolatedRemoval {
                        vertices: vertices.clone(),
                    },
                    TraceStep::Crown { head, crown, royal } => ReductionStep::CrownReduction {
                        crown: crown.clone(),
                        head: head.clone(),
                        royal: royal.clone(),
                    },
                })
                .collect(),
            short_circuit: self.short_circuit,
            kernel_n: self.kernel.n,
            kernel_k: self.kernel.k,
            capacity_offset: self.offsets.capacity,
            dual_offset: self.offsets.dual,
        }
    }
}

/// Sidecar holding a crown decomposition and its head-crown matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrownFile {
    pub crown: Vec<usize>,
    pub head: Vec<usize>,
    pub royal: Vec<usize>,
    pub witness: Vec<[usize; 2]>,
}

impl From<&CrownDecomposition> for CrownFile {
    fn from(d: &CrownDecomposition) -> CrownFile {
        CrownFile {
            crown: d.crown.clone(),
            head: d.head.clone(),
            royal: d.royal.clone(),
            witness: d.witness.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl From<&CrownFile> for CrownDecomposition {
    fn from(f: &CrownFile) -> CrownDecomposition {
        CrownDecomposition {
            crown: f.crown.clone(),
            head: f.head.clone(),
            royal: f.royal.clone(),
            witness: Matching::from_edges(f.witness.iter().map(|&[u, v]| (u, v))),
        }
    }
}
