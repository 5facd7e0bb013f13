//! Witt decomposition of totally isotropic subspaces and hyperbolic bases
//! for non-degenerate symmetric forms.

use num::{One, Zero};

use crate::algebra::LinearMap;
use crate::error::{Error, Result};
use crate::matrix::{add_vec, scale_vec, sub_vec, unit_vector, Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// `V = F ⊕⊥ (U ⊕ W)` with `B(u_i, w_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittDecomposition {
    /// Basis of `U` as rows (the canonical basis of the input subspace).
    pub u: Matrix,
    /// Dual isotropic partner basis as rows, paired with `u` row by row.
    pub w: Matrix,
    /// `(U ⊕ W)^⊥`
    pub f: Subspace,
    /// `B(u_i, w_j)`; always the identity.
    pub pairing: Matrix,
}

impl WittDecomposition {
    pub fn u_subspace(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.u)
    }

    pub fn w_subspace(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.w)
    }
}

fn ensure_nondegenerate(gram: &Matrix) -> Result<()> {
    if !gram.is_symmetric() || gram.determinant().is_zero() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

pub fn witt_extend(gram: &Matrix, u: &Subspace) -> Result<WittDecomposition> {
    ensure_nondegenerate(gram)?;
    if u.ambient_dim() != gram.rows() {
        return Err(Error::DimensionMismatch { expected: gram.rows(), found: u.ambient_dim() });
    }
    let ub = u.basis();
    let ug = ub.mul(gram);
    if !ug.mul(&ub.transpose()).is_zero() {
        return Err(Error::NotIsotropic);
    }
    let k = u.dim();

    // dual basis: B(u_i, w_j) = δ_ij
    let mut w: Vec<Vector> = (0..k)
        .map(|j| ug.solve(&unit_vector(k, j)))
        .collect::<Result<_>>()?;

    // w_i <- w_i - 1/2 Σ_j B(w_i, w_j) u_j
    let half = Scalar::from_ratio(1, 2);
    let wg: Vec<Vector> = w.iter().map(|wi| gram.mul_vec(wi)).collect();
    let corrections: Vec<Vector> = (0..k)
        .map(|i| {
            (0..k).fold(vec![Scalar::zero(); gram.rows()], |acc, j| {
                let b = crate::matrix::dot(&w[j], &wg[i]);
                add_vec(&acc, &scale_vec(&(&half * &b), &ub.row(j)))
            })
        })
        .collect();
    for (wi, c) in w.iter_mut().zip(&corrections) {
        *wi = sub_vec(wi, c);
    }

    let w = Matrix::from_rows(gram.rows(), &w)?;
    let mut stacked = ub.row_vectors();
    stacked.extend(w.row_vectors());
    let f = Matrix::from_rows(gram.rows(), &stacked)?.mul(gram).kernel();
    let pairing = ug.mul(&w.transpose());
    Ok(WittDecomposition { u: ub.clone(), w, f, pairing })
}

/// A nonzero `v` with `B(v, v) = 0`.
///
/// Returns an isotropic basis vector when one exists; otherwise builds an
/// orthogonal basis and combines two of its anisotropic members as
/// `e1 + s·e2` with `s² = -B(e1,e1)/B(e2,e2)`.
pub fn isotropic_vector(gram: &Matrix) -> Result<Vector> {
    ensure_nondegenerate(gram)?;
    let n = gram.rows();
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    if let Some(i) = (0..n).find(|&i| gram[(i, i)].is_zero()) {
        return Ok(unit_vector(n, i));
    }

    let mut orth: Vec<(Vector, Scalar)> = Vec::new();
    for k in 0..n {
        let mut v = unit_vector(n, k);
        for (u, buu) in &orth {
            let c = gram.bilinear(&v, u).checked_div(buu)?;
            v = sub_vec(&v, &scale_vec(&c, u));
        }
        let bvv = gram.bilinear(&v, &v);
        if bvv.is_zero() {
            return Ok(v);
        }
        orth.push((v, bvv));
    }

    let mut first_ratio = None;
    for a in 0..n {
        for b in a + 1..n {
            let ratio = (-&orth[a].1).checked_div(&orth[b].1)?;
            if let Some(s) = ratio.sqrt() {
                return Ok(add_vec(&orth[a].0, &scale_vec(&s, &orth[b].0)));
            }
            first_ratio.get_or_insert(ratio);
        }
    }
    Err(Error::NoSquareRoot(first_ratio.map(|r| r.to_string()).unwrap_or_default()))
}

/// The block form `H ⊕ … ⊕ H (⊕ [1])`, `H = [[0,1],[1,0]]`.
pub fn canonical_form(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for p in 0..n / 2 {
        m[(2 * p, 2 * p + 1)] = Scalar::one();
        m[(2 * p + 1, 2 * p)] = Scalar::one();
    }
    if n % 2 == 1 {
        m[(n - 1, n - 1)] = Scalar::one();
    }
    m
}

/// Columns form a basis in which the form is [`canonical_form`].
pub fn canonical_gram_basis(gram: &Matrix) -> Result<LinearMap> {
    ensure_nondegenerate(gram)?;
    let n = gram.rows();
    let mut remaining = Matrix::identity(n);
    let mut columns: Vec<Vector> = Vec::with_capacity(n);
    while remaining.rows() >= 2 {
        let restricted = remaining.mul(gram).mul(&remaining.transpose());
        let v = isotropic_vector(&restricted)?;
        let line = Subspace::from_vectors(restricted.rows(), &[v])?;
        let witt = witt_extend(&restricted, &line)?;
        columns.push(witt.u.mul(&remaining).row(0));
        columns.push(witt.w.mul(&remaining).row(0));
        remaining = witt.f.basis().mul(&remaining);
    }
    if remaining.rows() == 1 {
        let x = remaining.row(0);
        let norm = gram.bilinear(&x, &x);
        let root = norm.sqrt().ok_or_else(|| Error::NoSquareRoot(norm.to_string()))?;
        columns.push(scale_vec(&Scalar::one().checked_div(&root)?, &x));
    }
    LinearMap::from_images(n, &columns)
}
