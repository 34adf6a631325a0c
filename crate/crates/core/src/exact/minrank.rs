use std::collections::HashSet;

use super::gf::{check_prime, inverse, GfMatrix};
use super::independence::independence_number;
use crate::error::{Error, Result};
use crate::graph::{greedy_clique_cover, Graph};

/// Whether `a` represents `g`: nonzero diagonal and zeros at every non-edge.
pub fn represents(a: &GfMatrix, g: &Graph) -> bool {
    let n = g.n();
    if a.rows() != n || a.cols() != n {
        return false;
    }
    (0..n)
        .all(|i| a.get(i, i) != 0 && (0..n).all(|j| j == i || g.has_edge(i, j) || a.get(i, j) == 0))
}

/// Size of the normalized search space, `p^(2|E|)`, checked against `cap`.
fn check_search_space(g: &Graph, p: u64, cap: u128) -> Result<()> {
    let size = super::confusion::checked_power(p, 2 * g.m()).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "minrank search space",
            size,
            cap,
        });
    }
    Ok(())
}

/// Exact minrank of `g` over GF(p).
///
/// Every representation can be row-scaled to an all-ones diagonal without
/// changing its rank, so only those are searched. Rows are fixed one at a
/// time while the span of the rows chosen so far is kept in reduced echelon
/// form; a row either lies in the current span (rank unchanged) or extends it.
/// Branches that cannot beat the best rank found are cut, and spans already
/// explored at the same row are skipped. The search starts from the greedy
/// clique cover bound and stops early at the independence-number lower bound.
pub fn minrank(g: &Graph, p: u64, cap: u128) -> Result<usize> {
    check_prime(p)?;
    check_search_space(g, p, cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let upper = greedy_clique_cover(g).len();
    let lower = independence_number(g, usize::MAX)?;
    if lower == upper {
        return Ok(upper);
    }
    let mut search = RowSearch {
        g,
        p,
        best: upper,
        lower,
        seen: HashSet::new(),
    };
    search.descend(0, &Span::new(n));
    Ok(search.best)
}

/// Minrank by enumerating every normalized matrix: diagonal fixed to 1 and
/// each ordered edge position ranging over GF(p).
pub fn minrank_by_pattern_enumeration(g: &Graph, p: u64, cap: u128) -> Result<usize> {
    check_prime(p)?;
    check_search_space(g, p, cap)?;
    let n = g.n();
    let mut a = GfMatrix::identity(p, n)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| g.neighbors(i).iter().map(move |&j| (i, j)))
        .collect();
    let mut digits = vec![0u64; slots.len()];
    let mut best = a.rank();
    loop {
        best = best.min(a.rank());
        // Mixed-radix increment over the edge slots.
        let mut pos = 0;
        loop {
            if pos == slots.len() {
                return Ok(best);
            }
            digits[pos] = (digits[pos] + 1) % p;
            let (i, j) = slots[pos];
            a.set(i, j, digits[pos]);
            if digits[pos] != 0 {
                break;
            }
            pos += 1;
        }
    }
}

/// Subspace of GF(p)^n in reduced row echelon form, rows sorted by pivot.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Span {
    n: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

impl Span {
    fn new(n: usize) -> Span {
        Span {
            n,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `v` reduced against the basis; zero iff `v` lies in the span.
    fn reduce(&self, v: &mut [u64], p: u64) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + p - f * r % p) % p;
                }
            }
        }
    }

    /// The span extended by `v`, or `None` if `v` is already inside.
    fn extended(&self, v: &[u64], p: u64) -> Option<Span> {
        let mut v = v.to_vec();
        self.reduce(&mut v, p);
        let c = v.iter().position(|&x| x != 0)?;
        let inv = inverse(v[c], p);
        v.iter_mut().for_each(|x| *x = *x * inv % p);
        let mut out = self.clone();
        for row in &mut out.rows {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        let at = out.pivots.partition_point(|&q| q < c);
        out.pivots.insert(at, c);
        out.rows.insert(at, v);
        Some(out)
    }
}

struct RowSearch<'a> {
    g: &'a Graph,
    p: u64,
    best: usize,
    lower: usize,
    seen: HashSet<(usize, Span)>,
}

impl RowSearch<'_> {
    fn descend(&mut self, i: usize, span: &Span) {
        if self.best == self.lower || span.rank() >= self.best {
            return;
        }
        if i == span.n {
            self.best = span.rank();
            return;
        }
        if !self.seen.insert((i, span.clone())) {
            return;
        }
        if self.row_fits_in_span(i, span) {
            self.descend(i + 1, span);
        }
        if span.rank() + 1 < self.best {
            let free = self.g.neighbors(i);
            let combos = self.p.pow(free.len() as u32);
            let mut v = vec![0u64; span.n];
            for code in 0..combos {
                v.iter_mut().for_each(|x| *x = 0);
                v[i] = 1;
                let mut c = code;
                for &j in free {
                    v[j] = c % self.p;
                    c /= self.p;
                }
                if let Some(next) = span.extended(&v, self.p) {
                    self.descend(i + 1, &next);
                    if self.best == self.lower || span.rank() + 1 >= self.best {
                        return;
                    }
                }
            }
        }
    }

    /// Some vector of the span has a 1 at `i` and zeros off `N(i) ∪ {i}`.
    ///
    /// A span vector is fixed by its values at the pivot columns, so pivots
    /// outside the pattern are forced to 0, a pivot at `i` to 1, and pivots in
    /// `N(i)` range freely.
    fn row_fits_in_span(&self, i: usize, span: &Span) -> bool {
        let p = self.p;
        let free: Vec<usize> = (0..span.rank())
            .filter(|&t| self.g.has_edge(i, span.pivots[t]))
            .collect();
        let fixed_one = span.pivots.iter().position(|&c| c == i);
        let combos = p.pow(free.len() as u32);
        let mut v = vec![0u64; span.n];
        for code in 0..combos {
            v.iter_mut().for_each(|x| *x = 0);
            let mut c = code;
            let mut add = |t: usize, coef: u64| {
                if coef != 0 {
                    for (x, &r) in v.iter_mut().zip(&span.rows[t]) {
                        *x = (*x + coef * r) % p;
                    }
                }
            };
            for &t in &free {
                add(t, c % p);
                c /= p;
            }
            if let Some(t) = fixed_one {
                add(t, 1);
            }
            let ok = v[i] == 1 && (0..span.n).all(|j| j == i || v[j] == 0 || self.g.has_edge(i, j));
            if ok {
                return true;
            }
        }
        false
    }
}
