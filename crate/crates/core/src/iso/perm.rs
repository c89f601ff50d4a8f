//! Permutational equivalence of matrices.
//!
//! `a` and `b` are permutationally equivalent when `P a Q = b` for permutation
//! matrices `P`, `Q`. The search assigns target rows one at a time to unused
//! source rows of the same sorted-content class, while refining a shared
//! column partition by the entries seen so far; a partial assignment is
//! abandoned as soon as some column class has different sizes on the two
//! sides. Once every row is placed, columns are matched within classes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::ZMatrix;

/// `apply(src)[i][j] = src[row_perm[i]][col_perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermWitness {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

impl PermWitness {
    pub fn identity(rows: usize, cols: usize) -> Self {
        PermWitness {
            row_perm: (0..rows).collect(),
            col_perm: (0..cols).collect(),
        }
    }

    pub fn apply(&self, src: &ZMatrix) -> ZMatrix {
        ZMatrix::from_fn(self.row_perm.len(), self.col_perm.len(), |i, j| {
            src[(self.row_perm[i], self.col_perm[j])].clone()
        })
    }

    /// Checks that both maps are permutations of the right sizes and that
    /// applying them to `src` gives `target`.
    pub fn verify(&self, src: &ZMatrix, target: &ZMatrix) -> bool {
        src.shape() == target.shape()
            && is_permutation(&self.row_perm, src.rows())
            && is_permutation(&self.col_perm, src.cols())
            && &self.apply(src) == target
    }

    /// Permutation matrices `(P, Q)` with `P · src · Q = apply(src)`.
    pub fn to_matrices(&self) -> (ZMatrix, ZMatrix) {
        let r = self.row_perm.len();
        let c = self.col_perm.len();
        let one = BigInt::from(1);
        let mut p = ZMatrix::zeros(r, r);
        for (i, &s) in self.row_perm.iter().enumerate() {
            p[(i, s)] = one.clone();
        }
        let mut q = ZMatrix::zeros(c, c);
        for (j, &s) in self.col_perm.iter().enumerate() {
            q[(s, j)] = one.clone();
        }
        (p, q)
    }

    /// For a witness of `B ~ Bᵀ` (B square, n×n), the automorphism of the
    /// bipartite graph of `B` that swaps its sides, as a map on `0..2n`
    /// (left vertices `0..n`, right vertices `n..2n`).
    pub fn interchanging_automorphism(&self) -> Vec<usize> {
        let n = self.row_perm.len();
        self.col_perm.iter().map(|&c| n + c).chain(self.row_perm.iter().copied()).collect()
    }
}

pub fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Row and column permutations taking `a` to `b`, or `None`.
pub fn perm_equivalent(a: &ZMatrix, b: &ZMatrix) -> Option<PermWitness> {
    if a.shape() != b.shape() {
        return None;
    }
    let (rows, cols) = a.shape();
    if rows == 0 || cols == 0 {
        return Some(PermWitness::identity(rows, cols));
    }
    // intern entries so the search runs on small integers
    let mut ids: HashMap<&BigInt, u32> = HashMap::new();
    let mut ea = Vec::with_capacity(rows * cols);
    let mut eb = Vec::with_capacity(rows * cols);
    for (src, out) in [(a, &mut ea), (b, &mut eb)] {
        for x in src.as_slice() {
            let next = ids.len() as u32;
            out.push(*ids.entry(x).or_insert(next));
        }
    }
    EquivSearch::new(rows, cols, ea, eb)?.run()
}

/// PET witness: `a` is square and permutationally equivalent to `aᵀ`.
pub fn pet_witness(a: &ZMatrix) -> Result<Option<PermWitness>> {
    a.require_square()?;
    Ok(perm_equivalent(a, &a.transpose()))
}

/// Whether `a` is a PET matrix; non-square matrices are not.
pub fn is_pet(a: &ZMatrix) -> bool {
    matches!(pet_witness(a), Ok(Some(_)))
}

/// Row-sum or column-sum multisets of `a` and `aᵀ` differ (a cheap
/// certificate that `a` is not PET).
pub fn non_pet_by_sums(a: &ZMatrix) -> bool {
    let mut r = a.row_sums();
    let mut c = a.col_sums();
    r.sort();
    c.sort();
    r != c
}

struct EquivSearch {
    rows: usize,
    cols: usize,
    a: Vec<u32>,
    b: Vec<u32>,
    row_class_a: Vec<usize>,
    row_class_b: Vec<usize>,
}

#[derive(Clone)]
struct ColState {
    class_a: Vec<u32>,
    class_b: Vec<u32>,
}

impl EquivSearch {
    fn new(rows: usize, cols: usize, a: Vec<u32>, b: Vec<u32>) -> Option<Self> {
        let row_key = |m: &[u32], i: usize| {
            let mut r = m[i * cols..(i + 1) * cols].to_vec();
            r.sort_unstable();
            r
        };
        let mut classes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        let mut class_of = |key: Vec<u32>| {
            let next = classes.len();
            *classes.entry(key).or_insert(next)
        };
        let row_class_a: Vec<usize> = (0..rows).map(|i| class_of(row_key(&a, i))).collect();
        let row_class_b: Vec<usize> = (0..rows).map(|i| class_of(row_key(&b, i))).collect();
        let mut ca = row_class_a.clone();
        let mut cb = row_class_b.clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return None;
        }
        Some(EquivSearch {
            rows,
            cols,
            a,
            b,
            row_class_a,
            row_class_b,
        })
    }

    fn a_row(&self, i: usize) -> &[u32] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    fn b_row(&self, i: usize) -> &[u32] {
        &self.b[i * self.cols..(i + 1) * self.cols]
    }

    fn run(self) -> Option<PermWitness> {
        let col_key = |m: &[u32], j: usize| {
            let mut c: Vec<u32> = (0..self.rows).map(|i| m[i * self.cols + j]).collect();
            c.sort_unstable();
            c
        };
        let mut keys: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        let mut class_b = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let next = keys.len() as u32;
            class_b.push(*keys.entry(col_key(&self.b, j)).or_insert(next));
        }
        let mut class_a = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            class_a.push(*keys.get(&col_key(&self.a, j))?);
        }
        let state = ColState { class_a, class_b };
        if !balanced(&state, keys.len()) {
            return None;
        }
        let mut sigma = vec![usize::MAX; self.rows];
        let mut used = vec![false; self.rows];
        let state = self.assign(0, &mut sigma, &mut used, state)?;
        Some(PermWitness {
            row_perm: sigma,
            col_perm: match_columns(&state),
        })
    }

    fn assign(
        &self,
        i: usize,
        sigma: &mut [usize],
        used: &mut [bool],
        state: ColState,
    ) -> Option<ColState> {
        if i == self.rows {
            return Some(state);
        }
        let target = self.b_row(i);
        let mut tried: Vec<usize> = Vec::new();
        for s in 0..self.rows {
            if used[s] || self.row_class_a[s] != self.row_class_b[i] {
                continue;
            }
            let src = self.a_row(s);
            // identical unused source rows are interchangeable
            if tried.iter().any(|&t| self.a_row(t) == src) {
                continue;
            }
            tried.push(s);
            let Some(next) = refine(&state, src, target) else {
                continue;
            };
            sigma[i] = s;
            used[s] = true;
            if let Some(done) = self.assign(i + 1, sigma, used, next) {
                return Some(done);
            }
            used[s] = false;
        }
        sigma[i] = usize::MAX;
        None
    }
}

/// Splits every column class by the entry in the newly placed row.
fn refine(state: &ColState, src: &[u32], target: &[u32]) -> Option<ColState> {
    let mut ids: HashMap<(u32, u32), u32> = HashMap::new();
    let mut class_b = Vec::with_capacity(target.len());
    for (j, &v) in target.iter().enumerate() {
        let next = ids.len() as u32;
        class_b.push(*ids.entry((state.class_b[j], v)).or_insert(next));
    }
    let mut class_a = Vec::with_capacity(src.len());
    for (j, &v) in src.iter().enumerate() {
        class_a.push(*ids.get(&(state.class_a[j], v))?);
    }
    let next = ColState { class_a, class_b };
    balanced(&next, ids.len()).then_some(next)
}

fn balanced(state: &ColState, classes: usize) -> bool {
    let mut count = vec![0i64; classes];
    for &c in &state.class_b {
        count[c as usize] += 1;
    }
    for &c in &state.class_a {
        count[c as usize] -= 1;
    }
    count.iter().all(|&x| x == 0)
}

/// Target column `j` takes the lowest unused source column of its class.
fn match_columns(state: &ColState) -> Vec<usize> {
    let mut pools: HashMap<u32, std::collections::VecDeque<usize>> = HashMap::new();
    for (j, &c) in state.class_a.iter().enumerate() {
        pools.entry(c).or_default().push_back(j);
    }
    state
        .class_b
        .iter()
        .map(|c| pools.get_mut(c).and_then(|q| q.pop_front()).expect("balanced classes"))
        .collect()
}
