//! 2x2 block matrices and the partitioned tensor product.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `[[u, v], [w, x]]` with conforming block shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix2x2<T> {
    u: Matrix<T>,
    v: Matrix<T>,
    w: Matrix<T>,
    x: Matrix<T>,
}

impl<T: Clone + Zero> BlockMatrix2x2<T> {
    pub fn new(u: Matrix<T>, v: Matrix<T>, w: Matrix<T>, x: Matrix<T>) -> Result<Self> {
        if u.rows() != v.rows()
            || w.rows() != x.rows()
            || u.cols() != w.cols()
            || v.cols() != x.cols()
        {
            return Err(Error::DimensionMismatch(format!(
                "blocks {:?} {:?} / {:?} {:?} do not conform",
                u.shape(),
                v.shape(),
                w.shape(),
                x.shape()
            )));
        }
        Ok(BlockMatrix2x2 { u, v, w, x })
    }

    /// `[[u, 0], [0, x]]`.
    pub fn diagonal(u: Matrix<T>, x: Matrix<T>) -> Self {
        let v = Matrix::zeros(u.rows(), x.cols());
        let w = Matrix::zeros(x.rows(), u.cols());
        BlockMatrix2x2 { u, v, w, x }
    }

    /// `[[0, v], [w, 0]]`.
    pub fn anti_diagonal(v: Matrix<T>, w: Matrix<T>) -> Self {
        let u = Matrix::zeros(v.rows(), w.cols());
        let x = Matrix::zeros(w.rows(), v.cols());
        BlockMatrix2x2 { u, v, w, x }
    }

    pub fn blocks(&self) -> [&Matrix<T>; 4] {
        [&self.u, &self.v, &self.w, &self.x]
    }

    pub fn is_diagonal(&self) -> bool {
        self.v.is_zero() && self.w.is_zero()
    }

    pub fn is_anti_diagonal(&self) -> bool {
        self.u.is_zero() && self.x.is_zero()
    }

    /// Row split `(a, d)` and column split `(b, c)`.
    pub fn partition(&self) -> ((usize, usize), (usize, usize)) {
        (
            (self.u.rows(), self.w.rows()),
            (self.u.cols(), self.v.cols()),
        )
    }

    pub fn assemble(&self) -> Matrix<T> {
        let (a, b) = self.u.shape();
        let mut out = Matrix::zeros(a + self.w.rows(), b + self.v.cols());
        out.set_block(0, 0, &self.u);
        out.set_block(0, b, &self.v);
        out.set_block(a, 0, &self.w);
        out.set_block(a, b, &self.x);
        out
    }

    /// Splits `m` after `row_split` rows and `col_split` columns.
    pub fn split(m: &Matrix<T>, row_split: usize, col_split: usize) -> Result<Self> {
        if row_split > m.rows() || col_split > m.cols() {
            return Err(Error::DimensionMismatch(format!(
                "cannot split {}x{} at ({row_split}, {col_split})",
                m.rows(),
                m.cols()
            )));
        }
        let (r2, c2) = (m.rows() - row_split, m.cols() - col_split);
        Ok(BlockMatrix2x2 {
            u: m.submatrix(0, 0, row_split, col_split),
            v: m.submatrix(0, col_split, row_split, c2),
            w: m.submatrix(row_split, 0, r2, col_split),
            x: m.submatrix(row_split, col_split, r2, c2),
        })
    }

    pub fn transpose(&self) -> Self {
        BlockMatrix2x2 {
            u: self.u.transpose(),
            v: self.w.transpose(),
            w: self.v.transpose(),
            x: self.x.transpose(),
        }
    }
}

impl<T> BlockMatrix2x2<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Blockwise Kronecker product `[[u⊗a, v⊗b], [w⊗c, x⊗d]]`.
    pub fn partitioned_tensor(&self, h: &Self) -> Self {
        BlockMatrix2x2 {
            u: self.u.kron(&h.u),
            v: self.v.kron(&h.v),
            w: self.w.kron(&h.w),
            x: self.x.kron(&h.x),
        }
    }
}

impl<T> BlockMatrix2x2<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    /// Block product; the column split of `self` must equal the row split of `rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        let prod = |a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>, d: &Matrix<T>| {
            a.matmul(b)?.add(&c.matmul(d)?)
        };
        Ok(BlockMatrix2x2 {
            u: prod(&self.u, &rhs.u, &self.v, &rhs.w)?,
            v: prod(&self.u, &rhs.v, &self.v, &rhs.x)?,
            w: prod(&self.w, &rhs.u, &self.x, &rhs.w)?,
            x: prod(&self.w, &rhs.v, &self.x, &rhs.x)?,
        })
    }
}

pub fn partitioned_tensor<T>(m: &BlockMatrix2x2<T>, h: &BlockMatrix2x2<T>) -> BlockMatrix2x2<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    m.partitioned_tensor(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ZMatrix;

    fn id(n: usize) -> ZMatrix {
        ZMatrix::identity(n)
    }

    #[test]
    fn identity_blocks() {
        let m = BlockMatrix2x2::diagonal(id(2), id(2));
        let h = BlockMatrix2x2::diagonal(id(3), id(3));
        let r = m.partitioned_tensor(&h);
        assert_eq!(r, BlockMatrix2x2::diagonal(id(6), id(6)));
        assert_eq!(r.assemble(), id(12));
    }

    #[test]
    fn diagonal_operands_give_block_diagonal() {
        let q1 = ZMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        let r1 = ZMatrix::from_rows(&[[0, 1, 1]]).unwrap();
        let m = BlockMatrix2x2::diagonal(q1.clone(), id(1));
        let h = BlockMatrix2x2::diagonal(r1.clone(), id(2));
        let r = m.partitioned_tensor(&h);
        assert!(r.is_diagonal());
        assert_eq!(r.blocks()[0], &q1.kron(&r1));
    }

    #[test]
    fn nonconforming_blocks_rejected() {
        assert!(BlockMatrix2x2::new(id(2), id(3), id(2), id(3)).is_err());
    }

    #[test]
    fn split_assemble_round_trip() {
        let m = ZMatrix::from_fn(5, 4, |i, j| (i * 4 + j).into());
        let b = BlockMatrix2x2::split(&m, 2, 3).unwrap();
        assert_eq!(b.partition(), ((2, 3), (3, 1)));
        assert_eq!(b.assemble(), m);
        assert_eq!(b.transpose().assemble(), m.transpose());
    }

    #[test]
    fn block_product_matches_assembled_product() {
        let m = ZMatrix::from_fn(4, 5, |i, j| ((i * 7 + j * 3) % 5).into());
        let n = ZMatrix::from_fn(5, 3, |i, j| ((i + 2 * j) % 4).into());
        let bm = BlockMatrix2x2::split(&m, 1, 2).unwrap();
        let bn = BlockMatrix2x2::split(&n, 2, 1).unwrap();
        assert_eq!(bm.matmul(&bn).unwrap().assemble(), m.matmul(&n).unwrap());
    }
}
