//! Grid benchmarks written as CSV.

use std::io::Write;
use std::time::Instant;

use crownkit_core::generate::{gnp, seeded_rng};
use crownkit_core::{decide, kernelize, Error, Graph, Problem, SolverCaps};
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchFamily {
    Gnp,
    Star,
    Path,
    Cycle,
    Complete,
    Empty,
}

#[derive(Clone, Debug)]
pub struct BenchGrid {
    pub family: BenchFamily,
    pub ns: Vec<usize>,
    /// Only used by `gnp`.
    pub ps: Vec<f64>,
    pub ks: Vec<i64>,
    pub replicates: usize,
    pub seed: u64,
    /// Kernelize only when `None`.
    pub problem: Option<Problem>,
    pub caps: SolverCaps,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: BenchFamily,
    pub n: usize,
    pub p: Option<f64>,
    pub k: i64,
    pub replicate: usize,
    pub seed: u64,
    pub kernel_n: usize,
    pub kernel_k: i64,
    pub short_circuit: bool,
    pub answer: Option<bool>,
    pub error: Option<String>,
    pub kernelize_us: u128,
    pub confusion_us: u128,
    pub solve_us: u128,
}

struct Job {
    n: usize,
    p: Option<f64>,
    replicate: usize,
    graph: Graph,
}

/// Every instance is drawn up front from one generator seeded with
/// `grid.seed`, so the rows do not depend on scheduling.
pub fn run_grid(grid: &BenchGrid) -> Result<Vec<BenchRow>, CliError> {
    let mut rng = seeded_rng(grid.seed);
    let single = [None];
    let gnp_ps: Vec<Option<f64>> = grid.ps.iter().map(|&p| Some(p)).collect();
    let ps: &[Option<f64>] = match grid.family {
        BenchFamily::Gnp => &gnp_ps,
        _ => &single,
    };
    let mut jobs = Vec::new();
    for &n in &grid.ns {
        for &p in ps {
            for replicate in 0..grid.replicates {
                let graph = match grid.family {
                    BenchFamily::Gnp => gnp(n, p.unwrap_or(0.0), &mut rng)?,
                    BenchFamily::Star => Graph::star(n),
                    BenchFamily::Path => Graph::path(n),
                    BenchFamily::Cycle => Graph::cycle(n),
                    BenchFamily::Complete => Graph::complete(n),
                    BenchFamily::Empty => Graph::empty(n),
                };
                jobs.push(Job {
                    n,
                    p,
                    replicate,
                    graph,
                });
            }
        }
    }
    let work: Vec<(&Job, i64)> = jobs
        .iter()
        .flat_map(|job| grid.ks.iter().map(move |&k| (job, k)))
        .collect();
    work.into_par_iter()
        .map(|(job, k)| measure(grid, job, k))
        .collect()
}

fn measure(grid: &BenchGrid, job: &Job, k: i64) -> Result<BenchRow, CliError> {
    let mut row = BenchRow {
        family: grid.family,
        n: job.n,
        p: job.p,
        k,
        replicate: job.replicate,
        seed: grid.seed,
        kernel_n: 0,
        kernel_k: 0,
        short_circuit: false,
        answer: None,
        error: None,
        kernelize_us: 0,
        confusion_us: 0,
        solve_us: 0,
    };
    match grid.problem {
        None => {
            let start = Instant::now();
            let kernel = kernelize(&job.graph, k)?;
            row.kernelize_us = start.elapsed().as_micros();
            row.kernel_n = kernel.graph.n();
            row.kernel_k = kernel.k;
            row.short_circuit = kernel.trace.short_circuit;
        }
        Some(problem) => match decide(&job.graph, k, problem, &grid.caps) {
            Ok(r) => {
                row.kernel_n = r.kernel_n;
                row.kernel_k = r.kernel_k;
                row.short_circuit = r.trace.short_circuit;
                row.answer = Some(r.answer);
                row.kernelize_us = r.timings.kernelize.as_micros();
                row.confusion_us = r.timings.confusion.as_micros();
                row.solve_us = r.timings.solve.as_micros();
            }
            Err(failure) => {
                let Some(trace) = failure.trace else {
                    return Err(failure.error.into());
                };
                if !matches!(failure.error, Error::CapExceeded { .. }) {
                    return Err(failure.error.into());
                }
                row.kernel_n = trace.kernel_n;
                row.kernel_k = trace.kernel_k.unwrap_or(0);
                row.short_circuit = trace.short_circuit;
                row.error = Some(failure.error.to_string());
            }
        },
    }
    Ok(row)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(HEADER)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub const HEADER: [&str; 14] = [
    "family",
    "n",
    "p",
    "k",
    "replicate",
    "seed",
    "kernel_n",
    "kernel_k",
    "short_circuit",
    "answer",
    "error",
    "kernelize_us",
    "confusion_us",
    "solve_us",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(family: BenchFamily, ns: Vec<usize>, ks: Vec<i64>) -> BenchGrid {
        BenchGrid {
            family,
            ns,
            ps: vec![0.1],
            ks,
            replicates: 2,
            seed: 5,
            problem: None,
            caps: SolverCaps::default(),
        }
    }

    #[test]
    fn header_matches_row_fields() {
        let rows = run_grid(&grid(BenchFamily::Path, vec![4], vec![1])).unwrap();
        let mut with_rows = Vec::new();
        write_csv(&rows, &mut with_rows).unwrap();
        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        let first = String::from_utf8(with_rows).unwrap();
        let header = String::from_utf8(empty).unwrap();
        assert_eq!(first.lines().next(), header.lines().next());
    }

    #[test]
    fn rows_follow_grid_order() {
        let rows = run_grid(&grid(BenchFamily::Gnp, vec![8, 12], vec![1, 2, 3])).unwrap();
        let keys: Vec<(usize, usize, i64)> = rows.iter().map(|r| (r.n, r.replicate, r.k)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(rows.len(), 12);
    }
}
