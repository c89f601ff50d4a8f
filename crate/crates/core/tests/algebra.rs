mod common;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;

use cospectral::block::BlockMatrix2x2;
use cospectral::charpoly::{charpoly, gen_charpoly};
use cospectral::ZMatrix;

use common::*;

fn symmetric(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = ZMatrix> {
    int_matrix(n, n, lo, hi).prop_map(|m| m.add(&m.transpose()).unwrap())
}

fn positive_diagonal(n: usize) -> impl Strategy<Value = ZMatrix> {
    proptest::collection::vec(1i64..=5, n).prop_map(|d| {
        let d: Vec<BigInt> = d.into_iter().map(BigInt::from).collect();
        ZMatrix::diagonal(&d)
    })
}

fn block(rows: (usize, usize), cols: (usize, usize)) -> impl Strategy<Value = BlockMatrix2x2<BigInt>> {
    (
        int_matrix(rows.0, cols.0, -3, 3),
        int_matrix(rows.0, cols.1, -3, 3),
        int_matrix(rows.1, cols.0, -3, 3),
        int_matrix(rows.1, cols.1, -3, 3),
    )
        .prop_map(|(u, v, w, x)| BlockMatrix2x2::new(u, v, w, x).unwrap())
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=3, 1usize..=3)
}

type Block = BlockMatrix2x2<BigInt>;

/// `(Q, R, M, H)` with `Q`, `R` both diagonal or both anti-diagonal and
/// shapes conformal for `(Q ⊻⊗ R)(M ⊻⊗ H)`.
fn block_instance() -> impl Strategy<Value = (Block, Block, Block, Block)> {
    let outer = (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3);
    (dims(), dims(), dims(), dims(), outer, any::<bool>()).prop_flat_map(
        |(mr, mc, hr, hc, (qa, qb, ra, rb), anti)| {
            let (q1, q2) = if anti { (mr.1, mr.0) } else { (mr.0, mr.1) };
            let (r1, r2) = if anti { (hr.1, hr.0) } else { (hr.0, hr.1) };
            (
                block(mr, mc),
                block(hr, hc),
                int_matrix(qa, q1, -3, 3),
                int_matrix(qb, q2, -3, 3),
                int_matrix(ra, r1, -3, 3),
                int_matrix(rb, r2, -3, 3),
            )
                .prop_map(move |(m, h, q1, q2, r1, r2)| {
                    let (q, r) = if anti {
                        (BlockMatrix2x2::anti_diagonal(q1, q2), BlockMatrix2x2::anti_diagonal(r1, r2))
                    } else {
                        (BlockMatrix2x2::diagonal(q1, q2), BlockMatrix2x2::diagonal(r1, r2))
                    };
                    (q, r, m, h)
                })
        },
    )
}

proptest! {
    #[test]
    fn kron_is_associative(
        a in int_matrix_upto(3, -2, 2),
        b in int_matrix_upto(3, -2, 2),
        c in int_matrix_upto(2, -2, 2),
    ) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kron_is_bilinear(
        (a1, a2) in (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| (int_matrix(r, c, -3, 3), int_matrix(r, c, -3, 3))),
        b in int_matrix_upto(3, -3, 3),
        s in -3i64..=3,
    ) {
        let sum = a1.add(&a2).unwrap();
        prop_assert_eq!(sum.kron(&b), a1.kron(&b).add(&a2.kron(&b)).unwrap());
        let s = BigInt::from(s);
        prop_assert_eq!(a1.scale(&s).kron(&b), a1.kron(&b).scale(&s));
        prop_assert_eq!(b.kron(&a1.scale(&s)), b.kron(&a1).scale(&s));
    }

    #[test]
    fn charpoly_is_similarity_invariant(
        (a, p) in (1usize..=6).prop_flat_map(|n| (int_matrix(n, n, -4, 4), perm(n))),
    ) {
        let q = permute(&a, &p, &p);
        prop_assert_eq!(charpoly(&a).unwrap(), charpoly(&q).unwrap());
    }

    #[test]
    fn charpoly_matches_trace_and_determinant(a in square_int(5, -4, 4)) {
        let n = a.rows();
        let p = charpoly(&a).unwrap();
        let trace: BigInt = (0..n).map(|i| a[(i, i)].clone()).sum();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.is_monic() && p.has_integer_coeffs());
        prop_assert_eq!(p.coeff(n - 1), -num_rational::BigRational::from_integer(trace));
        // numeric determinant: p(0) = (-1)^n det(a)
        let f = DMatrix::from_fn(n, n, |i, j| a[(i, j)].to_string().parse::<f64>().unwrap());
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let p0: f64 = p.eval_f64(0.0);
        prop_assert!((p0 - sign * f.determinant()).abs() < 1e-6 * (1.0 + p0.abs()));
    }

    #[test]
    fn generalized_with_identity_is_plain(a in square_int(6, -3, 3)) {
        let id = ZMatrix::identity(a.rows());
        prop_assert_eq!(gen_charpoly(&a, &id).unwrap(), charpoly(&a).unwrap());
    }

    #[test]
    fn symmetric_pencil_has_only_real_roots(
        (a, d) in (1usize..=6).prop_flat_map(|n| (symmetric(n, -3, 3), positive_diagonal(n))),
    ) {
        let n = a.rows();
        let p = gen_charpoly(&a, &d).unwrap();
        prop_assert_eq!(p.count_real_roots(), n);

        // numeric: roots of det(xD - A) are eigenvalues of D^{-1/2} A D^{-1/2}
        let f = |m: &ZMatrix, i: usize, j: usize| m[(i, j)].to_string().parse::<f64>().unwrap();
        let s = DMatrix::from_fn(n, n, |i, j| f(&a, i, j) / (f(&d, i, i) * f(&d, j, j)).sqrt());
        let mut numeric: Vec<f64> = s.symmetric_eigen().eigenvalues.iter().copied().collect();
        numeric.sort_by(f64::total_cmp);
        let exact = p.real_roots_f64();
        prop_assert_eq!(exact.len(), n);
        for (x, y) in exact.iter().zip(&numeric) {
            prop_assert!((x - y).abs() < 1e-9, "{} vs {}", x, y);
        }
    }

    #[test]
    fn tensor_product_of_block_products((q, r, m, h) in block_instance()) {
        let (qa, ra) = (q.partition().0 .0, r.partition().0 .0);
        let (mc, hc) = (m.partition().1 .0, h.partition().1 .0);
        let lhs = q.partitioned_tensor(&r).assemble().matmul(&m.partitioned_tensor(&h).assemble()).unwrap();
        let qm = BlockMatrix2x2::split(&q.assemble().matmul(&m.assemble()).unwrap(), qa, mc).unwrap();
        let rh = BlockMatrix2x2::split(&r.assemble().matmul(&h.assemble()).unwrap(), ra, hc).unwrap();
        prop_assert_eq!(&lhs, &qm.partitioned_tensor(&rh).assemble());
        let blockwise = q.partitioned_tensor(&r).matmul(&m.partitioned_tensor(&h)).unwrap();
        prop_assert_eq!(blockwise.assemble(), lhs);
    }
}

#[test]
fn charpoly_of_larger_graph_needs_big_integers() {
    // complete bipartite K_{15,15}: x^30 - 225 x^28
    let k = cospectral::BipartiteGraph::complete(15, 15).full_adjacency();
    let p = charpoly(&k).unwrap();
    assert_eq!(p.degree(), Some(30));
    assert_eq!(p.coeff(28), num_rational::BigRational::from_integer((-225).into()));
    assert!((0..28).all(|i| p.coeff(i) == num_rational::BigRational::from_integer(0.into())));
}
