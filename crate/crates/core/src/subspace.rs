//! Subspaces of ℚ^n in canonical form.
//!
//! The basis is stored as the reduced row-echelon form of the row span, so
//! two subspaces are equal as sets exactly when their stored bases are
//! equal entrywise. Everything downstream (series, annihilators, spans of
//! operators) leans on that for deterministic comparisons.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{add_scaled, is_zero_vec, zero_vec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (rref, rank, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let mut basis = Matrix::zero(rank, ambient);
        for r in 0..rank {
            for c in 0..ambient {
                basis.set(r, c, rref.at(r, c).clone());
            }
        }
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of coordinate basis vectors with the given indices.
    pub fn coordinate(ambient: usize, coords: &[usize]) -> Self {
        let mut sorted: Vec<usize> = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut basis = Matrix::zero(sorted.len(), ambient);
        for (r, &c) in sorted.iter().enumerate() {
            basis.set(r, c, Scalar::one());
        }
        Self {
            ambient,
            basis,
            pivots: sorted,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates not used as pivots; they index a canonical
    /// complement of the subspace.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Remainder of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                add_scaled(&mut out, &c, self.basis.row(r));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_spanning(self.ambient, &rows))
    }

    /// Intersection via the Zassenhaus trick: row-reduce [S|S; T|0] and
    /// read the intersection off the rows supported on the right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim() + other.dim());
        for r in 0..self.dim() {
            let mut row = zero_vec(2 * n);
            row[..n].clone_from_slice(self.basis.row(r));
            row[n..].clone_from_slice(self.basis.row(r));
            rows.push(row);
        }
        for r in 0..other.dim() {
            let mut row = zero_vec(2 * n);
            row[..n].clone_from_slice(other.basis.row(r));
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let (rref, rank, _) = Matrix::from_rows(rows).rref();
        let mut inter_rows = Vec::new();
        for r in 0..rank {
            if is_zero_vec(&rref.row(r)[..n]) {
                inter_rows.push(rref.row(r)[n..].to_vec());
            }
        }
        Ok(Subspace::from_spanning(n, &inter_rows))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, unit_vec};

    #[test]
    fn sum_with_zero_is_identity() {
        let s = Subspace::from_spanning(3, &[vec![int(1), int(2), int(0)]]);
        assert_eq!(s.sum(&Subspace::zero(3)).unwrap(), s);
    }

    #[test]
    fn coordinate_axes_intersect_trivially() {
        let e1 = Subspace::from_spanning(2, &[unit_vec(2, 0)]);
        let e2 = Subspace::from_spanning(2, &[unit_vec(2, 1)]);
        assert_eq!(e1.intersection(&e2).unwrap(), Subspace::zero(2));
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(2));
    }

    #[test]
    fn membership_and_reduction() {
        let s = Subspace::from_spanning(
            3,
            &[vec![int(1), int(1), int(0)], vec![int(0), int(0), int(1)]],
        );
        assert!(s.contains(&[int(2), int(2), int(-5)]));
        assert!(!s.contains(&[int(1), int(0), int(0)]));
        assert_eq!(s.complement_coords(), vec![1]);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn canonical_equality() {
        let s = Subspace::from_spanning(2, &[vec![int(2), int(4)]]);
        let t = Subspace::from_spanning(2, &[vec![int(1), int(2)], vec![int(3), int(6)]]);
        assert_eq!(s, t);
    }
}
