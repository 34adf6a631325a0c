//! Instance files: DIMACS edge format (1-indexed) and JSON adjacency lists
//! (0-indexed). DIMACS carries optional parameters as `c k 3`, `c q 2` and
//! `c p 2` comment lines.

use std::collections::BTreeSet;

use crownkit_core::Graph;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dimacs,
    Json,
}

/// A graph plus the optional parameters an instance file may carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: Option<i64>,
    pub q: Option<u64>,
    pub p: Option<u64>,
    pub seed: Option<u64>,
}

impl Instance {
    pub fn new(graph: Graph) -> Instance {
        Instance {
            graph,
            k: None,
            q: None,
            p: None,
            seed: None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonInstance {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

/// Parses either format; a document whose first non-blank character is `{`
/// is JSON.
pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs_instance(text)
    }
}

pub fn parse_dimacs_instance(text: &str) -> Result<Instance, CliError> {
    let mut inst = Instance::new(parse_dimacs(text)?);
    for (i, line) in text.lines().enumerate() {
        let tok: Vec<&str> = line.split_whitespace().collect();
        let ["c", key @ ("k" | "q" | "p" | "seed"), value] = tok[..] else {
            continue;
        };
        let bad = || CliError::Parse(format!("line {}: bad value {value:?} for {key}", i + 1));
        match key {
            "k" => inst.k = Some(value.parse().map_err(|_| bad())?),
            "q" => inst.q = Some(value.parse().map_err(|_| bad())?),
            "p" => inst.p = Some(value.parse().map_err(|_| bad())?),
            _ => inst.seed = Some(value.parse().map_err(|_| bad())?),
        }
    }
    Ok(inst)
}

pub fn parse_json(text: &str) -> Result<Instance, CliError> {
    let raw: JsonInstance = serde_json::from_str(text)?;
    if raw.adjacency.len() != raw.n {
        return Err(CliError::Parse(format!(
            "n is {} but {} adjacency lists were given",
            raw.n,
            raw.adjacency.len()
        )));
    }
    let graph = Graph::from_adjacency(raw.adjacency)?;
    Ok(Instance {
        graph,
        k: raw.k,
        q: raw.q,
        p: raw.p,
        seed: raw.seed,
    })
}

pub fn parse_dimacs(text: &str) -> Result<Graph, CliError> {
    let bad = |line: usize, why: &str| CliError::Parse(format!("line {line}: {why}"));
    let mut header: Option<(usize, usize)> = None;
    let mut edges = BTreeSet::new();
    let mut edge_lines = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(bad(lineno, "second problem line"));
                }
                if tok.next() != Some("edge") {
                    return Err(bad(lineno, "expected \"p edge n m\""));
                }
                let n = number(tok.next(), lineno)?;
                let m = number(tok.next(), lineno)?;
                if tok.next().is_some() {
                    return Err(bad(lineno, "trailing tokens"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| bad(lineno, "edge before the problem line"))?;
                let u = number(tok.next(), lineno)?;
                let v = number(tok.next(), lineno)?;
                if tok.next().is_some() {
                    return Err(bad(lineno, "trailing tokens"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(bad(lineno, &format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(bad(lineno, "self-loop"));
                }
                edges.insert((u.min(v) - 1, u.max(v) - 1));
                edge_lines += 1;
            }
            Some(other) => return Err(bad(lineno, &format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| CliError::Parse("missing \"p edge n m\" line".into()))?;
    if edge_lines != m {
        return Err(CliError::Parse(format!(
            "problem line declares {m} edges but {edge_lines} edge lines follow"
        )));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn number(tok: Option<&str>, line: usize) -> Result<usize, CliError> {
    let tok = tok.ok_or_else(|| CliError::Parse(format!("line {line}: missing number")))?;
    tok.parse()
        .map_err(|_| CliError::Parse(format!("line {line}: {tok:?} is not a nonnegative integer")))
}

/// Writes `instance` in `format`. For DIMACS the free-form `comments` come
/// first, then the parameter lines.
pub fn write_instance(instance: &Instance, format: Format, comments: &[String]) -> String {
    match format {
        Format::Dimacs => {
            let g = &instance.graph;
            let mut out = String::new();
            for c in comments {
                out.push_str(&format!("c {c}\n"));
            }
            let params = [
                ("k", instance.k.map(|v| v.to_string())),
                ("q", instance.q.map(|v| v.to_string())),
                ("p", instance.p.map(|v| v.to_string())),
                ("seed", instance.seed.map(|v| v.to_string())),
            ];
            for (key, value) in params {
                if let Some(v) = value {
                    out.push_str(&format!("c {key} {v}\n"));
                }
            }
            out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out
        }
        Format::Json => {
            let g = &instance.graph;
            let raw = JsonInstance {
                n: g.n(),
                adjacency: (0..g.n()).map(|u| g.neighbors(u).to_vec()).collect(),
                k: instance.k,
                q: instance.q,
                p: instance.p,
                seed: instance.seed,
            };
            let mut text = serde_json::to_string_pretty(&raw).expect("plain data serializes");
            text.push('\n');
            text
        }
    }
}
