//! Exhaustive graph isomorphism by individualization and colour refinement.
//!
//! Both graphs are coloured together on the disjoint union `0..n` (first
//! graph) and `n..2n` (second graph), so colours are directly comparable.
//! Refinement replaces each colour by the pair (colour, sorted multiset of
//! neighbour colours) until stable; new colours are numbered by sorting the
//! keys, which keeps the numbering independent of vertex order. A branch dies
//! when some colour class has different sizes in the two halves.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::matrix::ZMatrix;

pub(crate) struct IsoSearch {
    n: usize,
    adj: Vec<Vec<usize>>,
    dense: Vec<Vec<bool>>,
}

impl IsoSearch {
    /// `None` when the matrices have different shapes or are not square.
    pub(crate) fn new(a: &ZMatrix, b: &ZMatrix) -> Option<Self> {
        if !a.is_square() || a.shape() != b.shape() {
            return None;
        }
        let n = a.rows();
        let mut adj = vec![Vec::new(); 2 * n];
        let mut dense = vec![vec![false; n]; 2 * n];
        for (offset, m) in [(0, a), (n, b)] {
            for i in 0..n {
                for j in 0..n {
                    if !m[(i, j)].is_zero() {
                        adj[offset + i].push(offset + j);
                        dense[offset + i][j] = true;
                    }
                }
            }
        }
        Some(IsoSearch { n, adj, dense })
    }

    /// A bijection `f` with `a[u][w] = b[f(u)][f(w)]`, if any.
    pub(crate) fn find(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return Some(Vec::new());
        }
        let colours = vec![0u32; 2 * self.n];
        self.search(colours)
    }

    fn search(&self, colours: Vec<u32>) -> Option<Vec<usize>> {
        let (colours, classes) = self.refine(colours);
        let n = self.n;
        let mut counts = vec![(0usize, 0usize); classes];
        for (v, &c) in colours.iter().enumerate() {
            if v < n {
                counts[c as usize].0 += 1;
            } else {
                counts[c as usize].1 += 1;
            }
        }
        if counts.iter().any(|(x, y)| x != y) {
            return None;
        }
        // smallest non-singleton cell, ties to the lowest colour
        let target = counts
            .iter()
            .enumerate()
            .filter(|(_, (x, _))| *x > 1)
            .min_by_key(|(c, (x, _))| (*x, *c))
            .map(|(c, _)| c as u32);
        let Some(cell) = target else {
            let mut by_colour = vec![0usize; classes];
            for v in n..2 * n {
                by_colour[colours[v] as usize] = v - n;
            }
            let f: Vec<usize> = (0..n).map(|u| by_colour[colours[u] as usize]).collect();
            return self.is_isomorphism(&f).then_some(f);
        };
        let u = (0..n).find(|&u| colours[u] == cell).expect("cell is non-empty");
        let fresh = classes as u32;
        for v in n..2 * n {
            if colours[v] != cell {
                continue;
            }
            let mut next = colours.clone();
            next[u] = fresh;
            next[v] = fresh;
            if let Some(f) = self.search(next) {
                return Some(f);
            }
        }
        None
    }

    fn refine(&self, mut colours: Vec<u32>) -> (Vec<u32>, usize) {
        let mut classes = count_classes(&colours);
        loop {
            let keys: Vec<(u32, Vec<u32>)> = (0..colours.len())
                .map(|v| {
                    let mut nb: Vec<u32> = self.adj[v].iter().map(|&w| colours[w]).collect();
                    nb.sort_unstable();
                    (colours[v], nb)
                })
                .collect();
            let mut numbering: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
            for k in &keys {
                numbering.insert(k, 0);
            }
            for (i, slot) in numbering.values_mut().enumerate() {
                *slot = i as u32;
            }
            let next: Vec<u32> = keys.iter().map(|k| numbering[k]).collect();
            let next_classes = numbering.len();
            colours = next;
            if next_classes == classes {
                return (colours, classes);
            }
            classes = next_classes;
        }
    }

    fn is_isomorphism(&self, f: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|u| (0..n).all(|w| self.dense[u][w] == self.dense[n + f[u]][f[w]]))
    }
}

fn count_classes(colours: &[u32]) -> usize {
    let mut seen: Vec<u32> = colours.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Checks a vertex bijection `f` maps edges of `a` exactly onto edges of `b`.
pub fn is_isomorphism(a: &ZMatrix, b: &ZMatrix, f: &[usize]) -> bool {
    let n = a.rows();
    a.shape() == b.shape()
        && crate::iso::perm::is_permutation(f, n)
        && (0..n).all(|u| (0..n).all(|w| a[(u, w)] == b[(f[u], f[w])]))
}
