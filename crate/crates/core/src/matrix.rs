//! Dense rational matrices.
//!
//! Convention used throughout the crate: a linear operator is stored with
//! row `i` holding the image of the `i`-th basis vector, so an element
//! (coefficient row vector) `v` maps to `v * M`. Right-multiplication
//! operators, derivations and basis changes all follow this layout.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{add_scaled, dense_to_sparse, is_zero_vec, zero_vec, Scalar};
use crate::solve::Eliminator;

/// Column count below which elimination runs on the dense textbook path;
/// larger systems go through the sparse fraction-free kernel.
pub const DENSE_COLUMN_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Row-major string form, the wire format for matrices in reports.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| v.to_string()).collect())
            .collect()
    }

    /// Row-major flattening, the coordinate order used for operator spans.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(n: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), n * n);
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            let dst_range = r * other.cols..(r + 1) * other.cols;
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    add_scaled(&mut out.data[dst_range.clone()], a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// `v * M` for a coefficient row vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = zero_vec(self.cols);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, self.row(i));
            }
        }
        Ok(out)
    }

    /// The operator commutator `AB - BA` in the row convention, i.e. the
    /// matrix of `x -> B(A(x)) - A(B(x))` composed left-to-right.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reduced row-echelon form: `(rref, rank, pivot columns)`. The output
    /// keeps the input shape (zero rows trail at the bottom).
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        if self.cols < DENSE_COLUMN_LIMIT {
            self.rref_dense()
        } else {
            self.rref_sparse()
        }
    }

    fn rref_dense(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.at(r, c).clone().recip();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = -m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) + &f * m.at(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots.len(), pivots)
    }

    fn rref_sparse(&self) -> (Matrix, usize, Vec<usize>) {
        let mut el = Eliminator::new();
        for r in 0..self.rows {
            el.insert_rational(&dense_to_sparse(self.row(r)));
        }
        let rows = el.rref_rows();
        let pivots = el.pivot_columns();
        let mut out = Matrix::zero(self.rows, self.cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                out.set(r, *c, v.clone());
            }
        }
        (out, pivots.len(), pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of `{v : M v = 0}` (columns as unknowns), canonicalized.
    pub fn nullspace(&self) -> crate::subspace::Subspace {
        let mut el = Eliminator::new();
        for r in 0..self.rows {
            el.insert_rational(&dense_to_sparse(self.row(r)));
        }
        let rows: Vec<Vec<Scalar>> = el
            .nullspace_rows(self.cols)
            .iter()
            .map(|r| crate::scalar::sparse_to_dense(self.cols, r))
            .collect();
        crate::subspace::Subspace::from_spanning(self.cols, &rows)
    }

    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            let p = m.at(c, c).clone();
            det *= &p;
            for i in c + 1..m.rows {
                if !m.at(i, c).is_zero() {
                    let f = -(m.at(i, c) / &p);
                    for j in c..m.cols {
                        let v = m.at(i, j) + &f * m.at(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, rank, _) = aug.rref_dense();
        if rank < n || (0..n).any(|i| !red.at(i, i).is_one()) {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red.at(r, n + c).clone()))
    }

    /// Nilpotency test: returns the least `t` with `M^t = 0`, if any.
    /// `M^n = 0` already follows from nilpotency, so powers past `n` need
    /// not be examined.
    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Some(1));
        }
        let mut p = self.clone();
        for t in 1..=self.rows {
            if p.is_zero() {
                return Ok(Some(t));
            }
            p = p.mul(self)?;
        }
        Ok(None)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.nilpotency_index()?.is_some())
    }

    /// Jordan block sizes of a nilpotent matrix, non-increasing. Computed
    /// from the rank sequence r_j = rank(M^j): the number of blocks of
    /// size >= j equals r_{j-1} - r_j.
    pub fn jordan_blocks_nilpotent(&self) -> Result<Vec<usize>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut ranks = vec![n];
        let mut p = Matrix::identity(n);
        loop {
            p = p.mul(self)?;
            let r = p.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            if ranks.len() > n + 1 {
                return Err(Error::NotNilpotent);
            }
        }
        let mut blocks = Vec::new();
        // at_least[j] = #blocks of size >= j, for j = 1..=max size
        let at_least: Vec<usize> = (1..ranks.len()).map(|j| ranks[j - 1] - ranks[j]).collect();
        for (j, &count) in at_least.iter().enumerate().rev() {
            let exactly = if j + 1 < at_least.len() {
                count - at_least[j + 1]
            } else {
                count
            };
            for _ in 0..exactly {
                blocks.push(j + 1);
            }
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(blocks.iter().sum::<usize>(), n);
        Ok(blocks)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_and_proportional_rows() {
        let (r, rank, pivots) = Matrix::identity(4).rref();
        assert_eq!(r, Matrix::identity(4));
        assert_eq!(rank, 4);
        assert_eq!(pivots, vec![0, 1, 2, 3]);

        let (r, rank, _) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_scales_leading_entries() {
        let (r, rank, pivots) = m(&[&[0, 3, 6], &[2, 4, 0]]).rref();
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, m(&[&[1, 0, -4], &[0, 1, 2]]));
    }

    #[test]
    fn dense_and_sparse_paths_agree() {
        // 70 columns forces the sparse kernel; embed a small block.
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let mut wide = Matrix::zero(3, 70);
        for r in 0..3 {
            for c in 0..3 {
                wide.set(r, 2 * c + 1, a.at(r, c).clone());
            }
        }
        let (dense, dr, dp) = wide.rref_dense();
        let (sparse, sr, sp) = wide.rref_sparse();
        assert_eq!(dense, sparse);
        assert_eq!(dr, sr);
        assert_eq!(dp, sp);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn det_values() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det().unwrap(), int(6));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
        let half = Matrix::from_rows(vec![vec![frac(1, 2)]]);
        assert_eq!(half.det().unwrap(), frac(1, 2));
    }

    #[test]
    fn nilpotency() {
        let shift = Matrix::from_fn(5, 5, |r, c| if c == r + 1 { int(1) } else { int(0) });
        assert_eq!(shift.nilpotency_index().unwrap(), Some(5));
        assert_eq!(Matrix::identity(2).nilpotency_index().unwrap(), None);
        assert!(m(&[&[0, 1, 0], &[0, 0, 1]]).nilpotency_index().is_err());
    }

    #[test]
    fn jordan_blocks_of_zero_and_full_shift() {
        assert_eq!(
            Matrix::zero(4, 4).jordan_blocks_nilpotent().unwrap(),
            vec![1, 1, 1, 1]
        );
        let shift = Matrix::from_fn(6, 6, |r, c| if c == r + 1 { int(1) } else { int(0) });
        assert_eq!(shift.jordan_blocks_nilpotent().unwrap(), vec![6]);
        assert!(Matrix::identity(3).jordan_blocks_nilpotent().is_err());
    }
}
