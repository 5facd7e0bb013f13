//! Subspaces of a coordinate space, stored canonically.

use num::Zero;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

/// A subspace of `Q(i)^n` whose basis rows are in reduced row-echelon form,
/// so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn from_vectors(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        Ok(Subspace::from_matrix_rows(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows).expect("rows of an rref"),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        self.basis.transpose().solve(v).ok()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.iter().all(Zero::is_zero) || self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut vectors = self.vectors();
        vectors.extend(other.vectors());
        Subspace::from_vectors(self.ambient_dim, &vectors)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        // a·U = b·V  <=>  [Uᵀ | -Vᵀ] (a, b) = 0
        let (p, q) = (self.dim(), other.dim());
        let mut stacked = Matrix::zeros(self.ambient_dim, p + q);
        for k in 0..self.ambient_dim {
            for i in 0..p {
                stacked[(k, i)] = self.basis[(i, k)].clone();
            }
            for j in 0..q {
                stacked[(k, p + j)] = -&other.basis[(j, k)];
            }
        }
        let coeffs = stacked.kernel();
        let vectors: Vec<Vector> = coeffs
            .vectors()
            .iter()
            .map(|c| {
                let a = Matrix::from_rows(p, &[c[..p].to_vec()]).unwrap();
                a.mul(&self.basis).row(0)
            })
            .collect();
        Subspace::from_vectors(self.ambient_dim, &vectors)
    }
}
