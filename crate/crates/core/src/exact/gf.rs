use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest supported modulus; products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p > MAX_MODULUS {
        return Err(Error::InvalidParameter(format!(
            "modulus {p} exceeds {MAX_MODULUS}"
        )));
    }
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Multiplicative inverse in GF(p) by Fermat's little theorem.
pub(crate) fn inverse(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Dense matrix over the prime field GF(p), entries stored as residues.
#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl GfMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<GfMatrix> {
        check_prime(p)?;
        Ok(GfMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<GfMatrix> {
        let mut m = GfMatrix::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Entries are reduced mod `p`. All rows must have equal length.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<GfMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = GfMatrix::zeros(p, rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidParameter(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.rem_euclid(p as i64) as u64);
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = value % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        gf_rank(self)
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF({}) {}x{}", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

pub fn gf_rank(a: &GfMatrix) -> usize {
    let p = a.p;
    let cols = a.cols;
    let mut m = a.data.clone();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = inverse(m[rank * cols + col], p);
        for j in col..cols {
            m[rank * cols + j] = m[rank * cols + j] * inv % p;
        }
        for r in 0..a.rows {
            let factor = m[r * cols + col];
            if r != rank && factor != 0 {
                for j in col..cols {
                    let sub = factor * m[rank * cols + j] % p;
                    m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(GfMatrix::zeros(4, 1, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 13] {
            for a in 1..p {
                assert_eq!(a * inverse(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn rank_examples() {
        for n in 0..6 {
            assert_eq!(gf_rank(&GfMatrix::identity(5, n).unwrap()), n);
            let ones = GfMatrix::from_rows(3, &vec![vec![1; n]; n]).unwrap();
            assert_eq!(gf_rank(&ones), n.min(1));
        }
        assert_eq!(
            gf_rank(&GfMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap()),
            1
        );
        assert_eq!(
            gf_rank(&GfMatrix::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap()),
            1
        );
        assert_eq!(
            gf_rank(&GfMatrix::from_rows(5, &[vec![1, 2], vec![2, 1]]).unwrap()),
            2
        );
    }

    #[test]
    fn rank_depends_on_field() {
        // det = -2: singular only over GF(2).
        let rows = [vec![1, 1], vec![1, -1]];
        assert_eq!(gf_rank(&GfMatrix::from_rows(2, &rows).unwrap()), 1);
        assert_eq!(gf_rank(&GfMatrix::from_rows(3, &rows).unwrap()), 2);
    }

    #[test]
    fn rectangular() {
        let m = GfMatrix::from_rows(7, &[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!((m.rows(), m.cols()), (2, 3));
    }
}
