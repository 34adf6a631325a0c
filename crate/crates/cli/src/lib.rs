//! Library behind the `crownkit` binary: file formats, commands and the
//! benchmark grid.

pub mod bench;
pub mod instance;
pub mod report;
pub mod tracefile;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crownkit_core::generate::{crown_planted, gnp, seeded_rng};
use crownkit_core::{
    compute_values, decide, kernelize, replay, verify_crown, CrownDecomposition, Error, Graph,
    Problem, SolverCaps,
};

use bench::{BenchFamily, BenchGrid};
use instance::{parse_instance, write_instance, Format, Instance};
use report::{DecisionJson, FailureJson, ValuesJson};
use tracefile::{CrownFile, TraceFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub mod exit {
    pub const YES: u8 = 0;
    pub const NO: u8 = 1;
    pub const ERROR: u8 = 2;
    pub const CAP: u8 = 3;
}

#[derive(Parser, Debug)]
#[command(
    name = "crownkit",
    version,
    about = "Crown kernels and exact solvers for storage capacity, index coding and minrank"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce (G, k) to a kernel; prints the trace, writes the kernel to --out.
    Kernelize {
        input: PathBuf,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: Format,
    },
    /// Decide one problem; exit 0 on YES, 1 on NO, 2 on error, 3 on a solver cap.
    Decide {
        #[arg(value_enum)]
        problem: ProblemKind,
        input: PathBuf,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Exact α, storage capacity, index coding length and minrank.
    Solve {
        input: PathBuf,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, global = true, value_enum, default_value = "dimacs")]
        format: Format,
        /// Where crown-planted writes its decomposition; defaults to
        /// `<out>.crown.json`.
        #[arg(long, global = true)]
        sidecar: Option<PathBuf>,
    },
    /// Check a trace by replay or a crown decomposition against the graph.
    /// Exit 0 if it holds, 1 if not, 2 on unreadable input.
    Verify {
        input: PathBuf,
        #[command(flatten)]
        what: VerifyTarget,
    },
    /// Run a generation grid and write one CSV row per instance and k.
    Bench {
        #[arg(long, value_enum, default_value = "gnp")]
        family: BenchFamily,
        /// Comma-separated vertex counts.
        #[arg(long, default_value = "")]
        n: List<usize>,
        /// Comma-separated edge probabilities (gnp only).
        #[arg(long = "prob", default_value = "")]
        prob: List<f64>,
        /// Comma-separated parameters.
        #[arg(long, default_value = "")]
        k: List<i64>,
        #[arg(long, default_value_t = 1)]
        replicates: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also decide this problem; otherwise only kernelize.
        #[arg(long, value_enum)]
        problem: Option<ProblemKind>,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Sc,
    Dic,
    Dmr,
}

impl ProblemKind {
    fn name(self) -> &'static str {
        match self {
            ProblemKind::Sc => "sc",
            ProblemKind::Dic => "dic",
            ProblemKind::Dmr => "dmr",
        }
    }

    fn with(self, q: u64, p: u64) -> Problem {
        match self {
            ProblemKind::Sc => Problem::StorageCapacity { q },
            ProblemKind::Dic => Problem::DualIndexCoding { q },
            ProblemKind::Dmr => Problem::DualMinrank { p },
        }
    }
}

#[derive(Args, Debug)]
pub struct CapArgs {
    #[arg(long = "cap-conf")]
    conf: Option<usize>,
    #[arg(long = "cap-alpha")]
    alpha: Option<usize>,
    #[arg(long = "cap-chi")]
    chi: Option<usize>,
    #[arg(long = "cap-minrank")]
    minrank: Option<u128>,
}

impl CapArgs {
    fn caps(&self) -> SolverCaps {
        let d = SolverCaps::default();
        SolverCaps {
            confusion: self.conf.unwrap_or(d.confusion),
            alpha: self.alpha.unwrap_or(d.alpha),
            chi: self.chi.unwrap_or(d.chi),
            minrank: self.minrank.unwrap_or(d.minrank),
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct VerifyTarget {
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    crown: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GenFamily {
    Gnp {
        n: usize,
        p: f64,
    },
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    CrownPlanted {
        c: usize,
        h: usize,
        r: usize,
        #[arg(default_value_t = 0.3)]
        p: f64,
    },
}

/// A comma-separated list; the empty string is the empty list.
#[derive(Clone, Debug, PartialEq)]
pub struct List<T>(pub Vec<T>);

impl<T: FromStr> FromStr for List<T>
where
    T::Err: std::fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<Vec<T>, String>>()
            .map(List)
    }
}

fn read_input(path: &Path) -> Result<Instance, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = read_file(path)?;
    }
    parse_instance(&text)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

/// Writes to stdout. A closed pipe is not an error.
fn say(text: &str) -> Result<(), CliError> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, text),
        None => say(text),
    }
}

fn parameter(flag: Option<i64>, file: Option<i64>) -> Result<i64, CliError> {
    let k = flag
        .or(file)
        .ok_or_else(|| CliError::Usage("no parameter: pass --k or put k in the instance".into()))?;
    if k < 0 {
        return Err(CliError::Usage(format!("k must be nonnegative, got {k}")));
    }
    Ok(k)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Kernelize {
            input,
            k,
            out,
            format,
        } => {
            let inst = read_input(&input)?;
            let k = parameter(k, inst.k)?;
            let kernel = kernelize(&inst.graph, k)?;
            if let Some(path) = out {
                let mut kinst = Instance::new(kernel.graph.clone());
                kinst.k = Some(kernel.k);
                kinst.q = inst.q;
                kinst.p = inst.p;
                let ids: Vec<String> = kernel
                    .vertices
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect();
                let comments = [
                    format!(
                        "kernel of {} with k={k}; kernel k={}",
                        input.display(),
                        kernel.k
                    ),
                    format!("input vertices: {}", ids.join(" ")),
                ];
                write_file(&path, &write_instance(&kinst, format, &comments))?;
            }
            say(&to_json(&TraceFile::new(&kernel.trace, inst.q, None)))?;
            Ok(0)
        }
        Command::Decide {
            problem,
            input,
            k,
            q,
            p,
            caps,
        } => {
            let inst = read_input(&input)?;
            let k = parameter(k, inst.k)?;
            let q = q.or(inst.q).unwrap_or(2);
            let p = p.or(inst.p).unwrap_or(2);
            let trace_q = (problem != ProblemKind::Dmr).then_some(q);
            match decide(&inst.graph, k, problem.with(q, p), &caps.caps()) {
                Ok(r) => {
                    say(if r.answer { "YES\n" } else { "NO\n" })?;
                    say(&to_json(&DecisionJson::new(problem.name(), trace_q, &r)))?;
                    Ok(if r.answer { exit::YES } else { exit::NO })
                }
                Err(f) => {
                    eprintln!("error: {}", f.error);
                    say(&to_json(&FailureJson::new(trace_q, &f)))?;
                    Ok(failure_code(&f.error))
                }
            }
        }
        Command::Solve { input, q, p, caps } => {
            let inst = read_input(&input)?;
            let q = q.or(inst.q).unwrap_or(2);
            let p = p.or(inst.p).unwrap_or(2);
            match compute_values(&inst.graph, q, p, &caps.caps()) {
                Ok(v) => {
                    say(&to_json(&ValuesJson::from(&v)))?;
                    Ok(0)
                }
                Err(f) => {
                    eprintln!("error: {}", f.error);
                    say(&to_json(&FailureJson::new(Some(q), &f)))?;
                    Ok(failure_code(&f.error))
                }
            }
        }
        Command::Gen {
            family,
            seed,
            out,
            format,
            sidecar,
        } => generate(family, seed, out, format, sidecar),
        Command::Verify { input, what } => {
            let inst = read_input(&input)?;
            let verdict = match (what.trace, what.crown) {
                (Some(path), _) => {
                    let file: TraceFile = serde_json::from_str(&read_file(&path)?)?;
                    let trace = file.to_trace();
                    match replay(&inst.graph, &trace) {
                        Err(e) => Err(e.to_string()),
                        Ok(_) if !trace.kernel_bound_holds() => {
                            Err("kernel exceeds max(3k'-3, 0) vertices".to_string())
                        }
                        Ok(_) => Ok(()),
                    }
                }
                (None, Some(path)) => {
                    let file: CrownFile = serde_json::from_str(&read_file(&path)?)?;
                    verify_crown(&inst.graph, &CrownDecomposition::from(&file))
                        .map_err(|e| e.to_string())
                }
                (None, None) => unreachable!("clap requires one target"),
            };
            match verdict {
                Ok(()) => {
                    say("OK\n")?;
                    Ok(0)
                }
                Err(why) => {
                    say(&format!("FAIL: {why}\n"))?;
                    Ok(1)
                }
            }
        }
        Command::Bench {
            family,
            n,
            prob,
            k,
            replicates,
            seed,
            problem,
            q,
            p,
            caps,
            out,
        } => {
            let grid = BenchGrid {
                family,
                ns: n.0,
                ps: prob.0,
                ks: k.0,
                replicates,
                seed,
                problem: problem.map(|kind| kind.with(q, p)),
                caps: caps.caps(),
            };
            let rows = bench::run_grid(&grid)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).map_err(|source| CliError::File {
                        path: path.display().to_string(),
                        source,
                    })?;
                    bench::write_csv(&rows, file)?;
                }
                None => bench::write_csv(&rows, io::stdout().lock())?,
            }
            Ok(0)
        }
    }
}

fn failure_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => exit::CAP,
        _ => exit::ERROR,
    }
}

fn generate(
    family: GenFamily,
    seed: u64,
    out: Option<PathBuf>,
    format: Format,
    sidecar: Option<PathBuf>,
) -> Result<u8, CliError> {
    let mut rng = seeded_rng(seed);
    let mut planted = None;
    let (graph, desc): (Graph, String) = match family {
        GenFamily::Gnp { n, p } => (gnp(n, p, &mut rng)?, format!("gnp n={n} p={p}")),
        GenFamily::Star { n } => (Graph::star(n), format!("star n={n}")),
        GenFamily::Path { n } => (Graph::path(n), format!("path n={n}")),
        GenFamily::Cycle { n } => (Graph::cycle(n), format!("cycle n={n}")),
        GenFamily::Complete { n } => (Graph::complete(n), format!("complete n={n}")),
        GenFamily::Empty { n } => (Graph::empty(n), format!("empty n={n}")),
        GenFamily::CrownPlanted { c, h, r, p } => {
            let (g, d) = crown_planted(c, h, r, p, &mut rng)?;
            planted = Some(d);
            (g, format!("crown-planted c={c} h={h} r={r} p={p}"))
        }
    };
    let mut inst = Instance::new(graph);
    inst.seed = Some(seed);
    let comment = format!("crownkit gen {desc} seed={seed}");
    emit(&out, &write_instance(&inst, format, &[comment]))?;
    if let Some(d) = planted {
        let target = sidecar.or_else(|| {
            out.as_ref().map(|o| {
                let mut name = o.clone().into_os_string();
                name.push(".crown.json");
                PathBuf::from(name)
            })
        });
        match target {
            Some(path) => write_file(&path, &to_json(&CrownFile::from(&d)))?,
            None => eprintln!("note: planted decomposition not written; pass --sidecar or --out"),
        }
    }
    Ok(0)
}
