#![allow(dead_code)]

use proptest::prelude::*;

use cospectral::{BipartiteGraph, ZMatrix};

pub fn int_matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = ZMatrix> {
    proptest::collection::vec(lo..=hi, rows * cols)
        .prop_map(move |xs| ZMatrix::from_fn(rows, cols, |i, j| xs[i * cols + j].into()))
}

pub fn int_matrix_upto(max: usize, lo: i64, hi: i64) -> impl Strategy<Value = ZMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| int_matrix(r, c, lo, hi))
}

pub fn square_int(max: usize, lo: i64, hi: i64) -> impl Strategy<Value = ZMatrix> {
    (1..=max).prop_flat_map(move |n| int_matrix(n, n, lo, hi))
}

pub fn binary(rows: usize, cols: usize) -> impl Strategy<Value = ZMatrix> {
    int_matrix(rows, cols, 0, 1)
}

pub fn binary_upto(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ZMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| binary(r, c))
}

/// Puts a one into every zero row and column, so the matrix is a valid input
/// for pair construction.
pub fn repair(mut m: ZMatrix) -> ZMatrix {
    let (r, c) = m.shape();
    for i in 0..r {
        if m.row(i).iter().all(|x| x == &0.into()) {
            m[(i, i % c)] = 1.into();
        }
    }
    for j in 0..c {
        if (0..r).all(|i| m[(i, j)] == 0.into()) {
            m[(j % r, j)] = 1.into();
        }
    }
    m
}

pub fn valid(rows: usize, cols: usize) -> impl Strategy<Value = ZMatrix> {
    binary(rows, cols).prop_map(repair)
}

pub fn valid_upto(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ZMatrix> {
    binary_upto(max_rows, max_cols).prop_map(repair)
}

pub fn graph_upto(max_left: usize, max_right: usize) -> impl Strategy<Value = BipartiteGraph> {
    valid_upto(max_left, max_right).prop_map(|m| BipartiteGraph::new(m).unwrap())
}

pub fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// `out[i][j] = m[rows[i]][cols[j]]`.
pub fn permute(m: &ZMatrix, rows: &[usize], cols: &[usize]) -> ZMatrix {
    ZMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(rows[i], cols[j])].clone())
}

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every row/column permutation pair, tried one by one.
pub fn brute_equivalent(a: &ZMatrix, b: &ZMatrix) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let (r, c) = a.shape();
    let cols = all_perms(c);
    all_perms(r)
        .iter()
        .any(|s| cols.iter().any(|t| permute(a, s, t) == *b))
}

pub fn brute_pet(a: &ZMatrix) -> bool {
    a.is_square() && brute_equivalent(a, &a.transpose())
}

/// Every vertex permutation of `adj`, filtered to automorphisms.
pub fn automorphisms(adj: &ZMatrix) -> Vec<Vec<usize>> {
    let n = adj.rows();
    all_perms(n)
        .into_iter()
        .filter(|f| (0..n).all(|u| (0..n).all(|w| adj[(u, w)] == adj[(f[u], f[w])])))
        .collect()
}
