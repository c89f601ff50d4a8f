//! The candidate pair built from biadjacency matrices `V` (m×n) and `B` (p×q):
//! `g1` has biadjacency `V⊗B`, `g2` has biadjacency `V⊗Bᵀ`.
//!
//! Canonical bipartitions: a left vertex of `g1` is the pair `(i, k)` with
//! `i < m`, `k < p`, stored at index `i*p + k`; right vertices `(j, l)` at
//! `j*q + l`. For `g2` the roles of `p` and `q` swap.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::block::BlockMatrix2x2;
use crate::error::Result;
use crate::graph::BipartiteGraph;
use crate::matrix::ZMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedPair {
    v: ZMatrix,
    b: ZMatrix,
    g1: BipartiteGraph,
    g2: BipartiteGraph,
}

impl ConstructedPair {
    pub fn v(&self) -> &ZMatrix {
        &self.v
    }

    pub fn b(&self) -> &ZMatrix {
        &self.b
    }

    pub fn g1(&self) -> &BipartiteGraph {
        &self.g1
    }

    pub fn g2(&self) -> &BipartiteGraph {
        &self.g2
    }

    /// `(m, n, p, q)`.
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.v.rows(), self.v.cols(), self.b.rows(), self.b.cols())
    }

    pub fn graph_v(&self) -> BipartiteGraph {
        BipartiteGraph::new(self.v.clone()).expect("validated on construction")
    }

    pub fn graph_b(&self) -> BipartiteGraph {
        BipartiteGraph::new(self.b.clone()).expect("validated on construction")
    }

    /// `g1` and `g2` are literally the same graph (happens when `B = Bᵀ`).
    pub fn is_identical(&self) -> bool {
        self.g1 == self.g2
    }

    /// The matrices `L ⊻⊗ H` and `L ⊻⊗ H#` whose graphs are `g1` and `g2`.
    pub fn block_forms(&self) -> (BlockMatrix2x2<num_bigint::BigInt>, BlockMatrix2x2<num_bigint::BigInt>) {
        let l = BlockMatrix2x2::anti_diagonal(self.v.clone(), self.v.transpose());
        let h = BlockMatrix2x2::anti_diagonal(self.b.clone(), self.b.transpose());
        let h_sharp = BlockMatrix2x2::anti_diagonal(self.b.transpose(), self.b.clone());
        (l.partitioned_tensor(&h), l.partitioned_tensor(&h_sharp))
    }
}

/// Builds the pair. Both inputs must be 0/1 matrices without zero rows or
/// columns.
pub fn construct_pair(v: &ZMatrix, b: &ZMatrix) -> Result<ConstructedPair> {
    let gv = BipartiteGraph::new(v.clone()).map_err(|e| e.in_operand("v"))?;
    let gb = BipartiteGraph::new(b.clone()).map_err(|e| e.in_operand("b"))?;
    gv.check_no_isolated().map_err(|e| e.in_operand("v"))?;
    gb.check_no_isolated().map_err(|e| e.in_operand("b"))?;
    let g1 = BipartiteGraph::new(v.kron(b))?;
    let g2 = BipartiteGraph::new(v.kron(&b.transpose()))?;
    Ok(ConstructedPair {
        v: v.clone(),
        b: b.clone(),
        g1,
        g2,
    })
}

/// Adjacency matrix of the direct (tensor) product `g × h`, i.e.
/// `A(g) ⊗ A(h)`; vertex `(u, w)` sits at index `u * |h| + w`.
pub fn direct_product(g: &BipartiteGraph, h: &BipartiteGraph) -> ZMatrix {
    g.full_adjacency().kron(&h.full_adjacency())
}

/// Connected components of a symmetric adjacency matrix, each sorted, listed
/// by smallest vertex.
pub fn split_components(adj: &ZMatrix) -> Vec<Vec<usize>> {
    let n = adj.rows();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in 0..n {
                if comp[w] == usize::MAX && !adj[(u, w)].is_zero() {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Principal submatrix on `vertices` (in the given order).
pub fn induced(adj: &ZMatrix, vertices: &[usize]) -> ZMatrix {
    ZMatrix::from_fn(vertices.len(), vertices.len(), |i, j| {
        adj[(vertices[i], vertices[j])].clone()
    })
}
