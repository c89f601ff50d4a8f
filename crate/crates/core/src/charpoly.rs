//! Exact characteristic polynomials.
//!
//! Uses Berkowitz's division-free algorithm, so the integer case never leaves
//! `BigInt` and stays exact for arbitrarily large graphs.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, ZMatrix};
use crate::poly::QPoly;

/// Coefficients of `det(xI - a)` in descending order (leading 1 first).
///
/// The caller guarantees `a` is square.
pub fn berkowitz<T>(a: &Matrix<T>) -> Vec<T>
where
    T: Clone + Zero + One + Neg<Output = T> + Add<Output = T>,
    for<'x> &'x T: Mul<&'x T, Output = T> + Sub<&'x T, Output = T>,
{
    let n = a.rows();
    debug_assert!(a.is_square());
    let mut poly = vec![T::one()];
    for r in 0..n {
        // Leading (r+1)x(r+1) block is [[A_r, S], [R, a_rr]].
        // The Toeplitz column is 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-a[(r, r)].clone());
        let mut v: Vec<T> = (0..r).map(|i| a[(i, r)].clone()).collect();
        for k in 0..r {
            let rv = (0..r).fold(T::zero(), |acc, j| acc + &a[(r, j)] * &v[j]);
            toeplitz.push(-rv);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(T::zero(), |acc, j| acc + &a[(i, j)] * &v[j]))
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = T::zero();
            for (j, pj) in poly.iter().enumerate().take(i.min(r) + 1) {
                acc = acc + &toeplitz[i - j] * pj;
            }
            next.push(acc);
        }
        poly = next;
    }
    poly
}

/// `det(xI - a)` with exact integer coefficients.
pub fn charpoly(a: &ZMatrix) -> Result<QPoly> {
    a.require_square()?;
    let mut desc = berkowitz(a);
    desc.reverse();
    Ok(QPoly::from_integers(&desc))
}

/// `det(x d - a) / det(d)`: the monic characteristic polynomial of `d⁻¹a`.
///
/// `d` must be diagonal with no zero entry. Computed as the integer
/// characteristic polynomial of `L d⁻¹ a` (with `L` the lcm of the diagonal)
/// and rescaled, which keeps the Berkowitz pass in integer arithmetic.
pub fn gen_charpoly(a: &ZMatrix, d: &ZMatrix) -> Result<QPoly> {
    a.require_square()?;
    d.require_square()?;
    if a.rows() != d.rows() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but degree matrix is {}x{}",
            a.rows(),
            a.cols(),
            d.rows(),
            d.cols()
        )));
    }
    let n = a.rows();
    for i in 0..n {
        for j in 0..n {
            if i != j && !d[(i, j)].is_zero() {
                return Err(Error::NotDiagonal { row: i, col: j });
            }
        }
        if d[(i, i)].is_zero() {
            return Err(Error::SingularDegree { index: i });
        }
    }
    let lcm = (0..n).fold(BigInt::one(), |l, i| l.lcm(&d[(i, i)]));
    let scaled = Matrix::from_fn(n, n, |i, j| &a[(i, j)] * &(&lcm / &d[(i, i)]));
    let desc = berkowitz(&scaled);
    // coefficient of x^k in the scaled polynomial is lcm^{n-k} times the target one
    let mut power = BigInt::one();
    let mut asc = Vec::with_capacity(n + 1);
    for c in desc.into_iter() {
        asc.push(BigRational::new(c, power.clone()));
        power *= &lcm;
    }
    asc.reverse();
    Ok(QPoly::new(asc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::QMatrix;

    fn z(rows: &[&[i64]]) -> ZMatrix {
        ZMatrix::from_rows(rows).unwrap()
    }

    fn diag(d: &[i64]) -> ZMatrix {
        ZMatrix::diagonal(&d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    fn path3() -> ZMatrix {
        z(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
    }

    #[test]
    fn single_edge() {
        assert_eq!(charpoly(&z(&[&[0, 1], &[1, 0]])).unwrap(), QPoly::from_integers(&[-1, 0, 1]));
    }

    #[test]
    fn path_on_three_vertices() {
        assert_eq!(charpoly(&path3()).unwrap(), QPoly::from_integers(&[0, -2, 0, 1]));
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(charpoly(&ZMatrix::zeros(3, 3)).unwrap(), QPoly::from_integers(&[0, 0, 0, 1]));
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(charpoly(&ZMatrix::zeros(0, 0)).unwrap(), QPoly::one());
    }

    #[test]
    fn non_square_rejected() {
        assert_eq!(
            charpoly(&ZMatrix::zeros(2, 3)),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn dense_3x3_against_cofactor_expansion() {
        let a = z(&[&[2, -1, 3], &[0, 4, 5], &[1, 1, -2]]);
        // trace 4; principal 2x2 minors: 8, -7, -13 -> -12; det = 2*(-13) + 1*(-5) + 3*(-4) = -43
        assert_eq!(charpoly(&a).unwrap(), QPoly::from_integers(&[43, -12, -4, 1]));
    }

    #[test]
    fn generalized_on_unit_degrees() {
        let a = z(&[&[0, 1], &[1, 0]]);
        assert_eq!(gen_charpoly(&a, &diag(&[1, 1])).unwrap(), QPoly::from_integers(&[-1, 0, 1]));
    }

    #[test]
    fn generalized_path3() {
        assert_eq!(
            gen_charpoly(&path3(), &diag(&[1, 2, 1])).unwrap(),
            QPoly::from_integers(&[0, -1, 0, 1])
        );
    }

    #[test]
    fn generalized_zero_matrix_positive_degrees() {
        assert_eq!(
            gen_charpoly(&ZMatrix::zeros(2, 2), &diag(&[1, 1])).unwrap(),
            QPoly::from_integers(&[0, 0, 1])
        );
    }

    #[test]
    fn generalized_rejects_zero_degree() {
        assert_eq!(
            gen_charpoly(&path3(), &diag(&[1, 0, 1])),
            Err(Error::SingularDegree { index: 1 })
        );
    }

    #[test]
    fn generalized_rejects_off_diagonal() {
        let mut d = diag(&[1, 2, 1]);
        d[(0, 2)] = BigInt::one();
        assert_eq!(gen_charpoly(&path3(), &d), Err(Error::NotDiagonal { row: 0, col: 2 }));
    }

    #[test]
    fn generalized_matches_rational_berkowitz() {
        // independent route: Berkowitz directly over Q on d^{-1} a
        let a = z(&[&[0, 1, 1, 0], &[1, 0, 1, 1], &[1, 1, 0, 0], &[0, 1, 0, 0]]);
        let d = diag(&[2, 3, 2, 1]);
        let dinv_a: QMatrix = Matrix::from_fn(4, 4, |i, j| {
            BigRational::new(a[(i, j)].clone(), d[(i, i)].clone())
        });
        let mut desc = berkowitz(&dinv_a);
        desc.reverse();
        assert_eq!(gen_charpoly(&a, &d).unwrap(), QPoly::new(desc));
    }
}
