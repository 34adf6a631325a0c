//! Definition-level brute force for tiny instances. None of these routines
//! touch the confusion graph or the normalized minrank search; they exist to
//! cross-check those.

use std::collections::HashMap;

use super::confusion::{checked_power, decode_vector};
use super::gf::{check_prime, GfMatrix};
use super::minrank::represents;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest enumeration any oracle will attempt.
pub const ORACLE_CAP: u128 = 1 << 20;

fn guard(what: &'static str, size: Option<u128>, cap: u128) -> Result<()> {
    let size = size.unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// Whether each coordinate of every word in `code` is a function of the
/// word's restriction to that coordinate's neighborhood.
fn is_recoverable_code(g: &Graph, code: &[Vec<u64>]) -> bool {
    (0..g.n()).all(|i| {
        let mut f: HashMap<Vec<u64>, u64> = HashMap::new();
        code.iter().all(|x| {
            let key: Vec<u64> = g.neighbors(i).iter().map(|&j| x[j]).collect();
            *f.entry(key).or_insert(x[i]) == x[i]
        })
    })
}

/// Largest recoverable code in `{0..q-1}^n`, by trying every subset of words.
/// Requires `q^n <= 8`.
pub fn oracle_storage_code(g: &Graph, q: u64) -> Result<usize> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    let words = checked_power(q, g.n());
    guard("storage-code oracle universe", words, 8)?;
    let words = words.unwrap() as usize;
    let all: Vec<Vec<u64>> = (0..words).map(|id| decode_vector(id, q, g.n())).collect();
    let mut best = 0;
    for mask in 0u32..1 << words {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let code: Vec<Vec<u64>> = (0..words)
            .filter(|&w| mask >> w & 1 == 1)
            .map(|w| all[w].clone())
            .collect();
        if is_recoverable_code(g, &code) {
            best = size;
        }
    }
    Ok(best)
}

/// Shortest index code found by trying every encoding function
/// `{0..q-1}^n -> {0..q-1}^l` for `l < n`; `n` itself always works.
pub fn oracle_index_code(g: &Graph, q: u64) -> Result<usize> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    let n = g.n();
    let words = checked_power(q, n);
    let longest = checked_power(q, n.saturating_sub(1))
        .and_then(|cw| words.and_then(|w| checked_power(cw as u64, w as usize)));
    guard("index-code oracle encoders", longest, ORACLE_CAP)?;
    let words = words.unwrap() as usize;
    let messages: Vec<Vec<u64>> = (0..words).map(|id| decode_vector(id, q, n)).collect();

    for len in 0..n {
        let codewords = q.pow(len as u32);
        let encoders = (codewords as u128).pow(words as u32);
        for e in 0..encoders {
            // Encoder value for message m is digit m of `e` in base `codewords`.
            let mut rest = e;
            let enc: Vec<u64> = (0..words)
                .map(|_| {
                    let d = (rest % codewords as u128) as u64;
                    rest /= codewords as u128;
                    d
                })
                .collect();
            let decodable = (0..n).all(|i| {
                let mut g_i: HashMap<(u64, Vec<u64>), u64> = HashMap::new();
                messages.iter().enumerate().all(|(m, x)| {
                    let side: Vec<u64> = g.neighbors(i).iter().map(|&j| x[j]).collect();
                    *g_i.entry((enc[m], side)).or_insert(x[i]) == x[i]
                })
            });
            if decodable {
                return Ok(len);
            }
        }
    }
    Ok(n)
}

/// Minrank over GF(p) by enumerating all `p^(n^2)` matrices.
pub fn oracle_minrank(g: &Graph, p: u64) -> Result<usize> {
    check_prime(p)?;
    let n = g.n();
    let total = checked_power(p, n * n);
    guard("unrestricted minrank enumeration", total, ORACLE_CAP)?;
    let mut best = n;
    for code in 0..total.unwrap() as usize {
        let entries = decode_vector(code, p, n * n);
        let rows: Vec<Vec<i64>> = entries
            .chunks(n.max(1))
            .take(n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        let a = GfMatrix::from_rows(p, &rows)?;
        if represents(&a, g) {
            best = best.min(a.rank());
        }
    }
    Ok(best)
}
