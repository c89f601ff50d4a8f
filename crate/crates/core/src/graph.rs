//! Bipartite graphs given by a 0/1 biadjacency matrix.
//!
//! Left vertices are `0..m`, right vertices `m..m+n` in the full adjacency
//! matrix `[0 B; Bᵀ 0]`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ZMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    biadj: ZMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVector {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl DegreeVector {
    /// Left degrees followed by right degrees, i.e. the diagonal of `D(G)`.
    pub fn concat(&self) -> Vec<usize> {
        self.left.iter().chain(&self.right).copied().collect()
    }
}

/// JSON form: `{"left": m, "right": n, "edges": [[i, j], ...]}` where `i` is
/// a left index and `j` a right index (both zero-based within their side).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<[usize; 2]>,
}

impl BipartiteGraph {
    pub fn new(biadj: ZMatrix) -> Result<Self> {
        biadj.require_binary()?;
        Ok(BipartiteGraph { biadj })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        BipartiteGraph::new(ZMatrix::from_rows(rows)?)
    }

    /// Complete bipartite graph `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> Self {
        BipartiteGraph {
            biadj: ZMatrix::ones(m, n),
        }
    }

    pub fn biadj(&self) -> &ZMatrix {
        &self.biadj
    }

    pub fn into_biadj(self) -> ZMatrix {
        self.biadj
    }

    pub fn left(&self) -> usize {
        self.biadj.rows()
    }

    pub fn right(&self) -> usize {
        self.biadj.cols()
    }

    pub fn order(&self) -> usize {
        self.left() + self.right()
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.count_nonzero()
    }

    pub fn is_empty(&self) -> bool {
        self.biadj.is_zero()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        !self.biadj[(i, j)].is_zero()
    }

    /// Edges as `(left, right)` index pairs in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.left() {
            for j in 0..self.right() {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn full_adjacency(&self) -> ZMatrix {
        let m = self.left();
        let mut a = ZMatrix::zeros(self.order(), self.order());
        for (i, j) in self.edges() {
            a[(i, m + j)] = BigInt::from(1);
            a[(m + j, i)] = BigInt::from(1);
        }
        a
    }

    pub fn degrees(&self) -> DegreeVector {
        let count = |v: Vec<BigInt>| -> Vec<usize> {
            v.iter().map(|x| x.to_usize().unwrap_or(0)).collect()
        };
        DegreeVector {
            left: count(self.biadj.row_sums()),
            right: count(self.biadj.col_sums()),
        }
    }

    /// Neighbour lists over the full vertex range `0..m+n`.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let m = self.left();
        let mut adj = vec![Vec::new(); self.order()];
        for (i, j) in self.edges() {
            adj[i].push(m + j);
            adj[m + j].push(i);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbours();
        if adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; adj.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == adj.len()
    }

    /// `(k, l)` when every left vertex has degree `k` and every right vertex
    /// degree `l`; `None` for non-biregular or edgeless graphs.
    pub fn biregular_degrees(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        let d = self.degrees();
        let k = *d.left.first()?;
        let l = *d.right.first()?;
        (d.left.iter().all(|&x| x == k) && d.right.iter().all(|&x| x == l)).then_some((k, l))
    }

    pub fn is_balanced(&self) -> bool {
        self.left() == self.right()
    }

    pub fn check_no_isolated(&self) -> Result<()> {
        match self.biadj.find_zero_line() {
            None => Ok(()),
            Some((line, index)) => Err(Error::IsolatedVertex { line, index }),
        }
    }

    pub fn transpose(&self) -> Self {
        BipartiteGraph {
            biadj: self.biadj.transpose(),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            left: self.left(),
            right: self.right(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_json(g: &GraphJson) -> Result<Self> {
        let mut biadj = ZMatrix::zeros(g.left, g.right);
        for &[i, j] in &g.edges {
            if i >= g.left || j >= g.right {
                return Err(Error::DimensionMismatch(format!(
                    "edge [{i}, {j}] outside a {}x{} graph",
                    g.left, g.right
                )));
            }
            biadj[(i, j)] = BigInt::from(1);
        }
        Ok(BipartiteGraph { biadj })
    }

    /// Graphviz DOT; left vertices are boxes, right vertices circles.
    /// Node ids follow the full-adjacency numbering.
    pub fn to_dot(&self, name: &str) -> String {
        let m = self.left();
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for i in 0..m {
            let _ = writeln!(out, "  {i} [shape=box, label=\"x{i}\"];");
        }
        for j in 0..self.right() {
            let _ = writeln!(out, "  {} [shape=circle, label=\"y{j}\"];", m + j);
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {};", m + j);
        }
        out.push_str("}\n");
        out
    }
}
