//! Explicit codes built from a clique cover: a linear index code of length
//! `|cover|` and a representing matrix of rank `|cover|`.

use super::gf::GfMatrix;
use crate::error::{Error, Result};
use crate::graph::{CliqueCover, Graph};

/// Index code sending, for each clique, the sum of its symbols mod `q`.
#[derive(Clone, Debug)]
pub struct IndexCode {
    q: u64,
    cover: CliqueCover,
    owner: Vec<usize>,
    neighbors: Vec<Vec<usize>>,
}

impl IndexCode {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn cover(&self) -> &CliqueCover {
        &self.cover
    }

    /// Number of transmitted symbols.
    pub fn length(&self) -> usize {
        self.cover.len()
    }

    pub fn encode(&self, message: &[u64]) -> Vec<u64> {
        self.cover
            .cliques()
            .iter()
            .map(|c| c.iter().map(|&i| message[i]).sum::<u64>() % self.q)
            .collect()
    }

    /// Recovers `x_receiver` from the broadcast and the receiver's side
    /// information, given as the symbols of its neighbors in ascending order.
    pub fn decode(&self, receiver: usize, codeword: &[u64], side_info: &[u64]) -> u64 {
        let nbrs = &self.neighbors[receiver];
        assert_eq!(
            nbrs.len(),
            side_info.len(),
            "side information must cover N({receiver})"
        );
        let clique = &self.cover.cliques()[self.owner[receiver]];
        let known: u64 = clique
            .iter()
            .filter(|&&j| j != receiver)
            .map(|j| side_info[nbrs.binary_search(j).expect("clique members are neighbors")])
            .sum::<u64>()
            % self.q;
        (codeword[self.owner[receiver]] + self.q - known) % self.q
    }
}

pub fn clique_cover_index_code(g: &Graph, q: u64, cover: &CliqueCover) -> Result<IndexCode> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    let owner = cover.validate(g).map_err(Error::InvalidCover)?;
    Ok(IndexCode {
        q,
        cover: cover.clone(),
        owner,
        neighbors: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
    })
}

/// `A[i][j] = 1` iff `i` and `j` share a clique (including `i == j`).
pub fn clique_cover_minrank_matrix(g: &Graph, cover: &CliqueCover, p: u64) -> Result<GfMatrix> {
    let owner = cover.validate(g).map_err(Error::InvalidCover)?;
    let n = g.n();
    let mut a = GfMatrix::zeros(p, n, n)?;
    for i in 0..n {
        for j in 0..n {
            if owner[i] == owner[j] {
                a.set(i, j, 1);
            }
        }
    }
    Ok(a)
}
