#![allow(dead_code)]

use std::path::PathBuf;

use num::{One, Zero};
use qlie::algebra::LinearMap;
use qlie::fuzz::{cayley_transform, Fuzzer};
use qlie::matrix::{unit_vector, Matrix, Vector};
use qlie::witt::canonical_form;
use qlie::Scalar;

pub fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// General skew derivation of the diamond in the basis X, P, Q, Z; equals
/// `ad(aX - yP + zQ)`.
pub fn diamond_derivation(a: &Scalar, y: &Scalar, z: &Scalar) -> Matrix {
    let zero = Scalar::zero;
    Matrix::from_rows(
        4,
        &[
            vec![zero(), zero(), zero(), zero()],
            vec![y.clone(), a.clone(), zero(), zero()],
            vec![z.clone(), zero(), -a, zero()],
            vec![zero(), -z, -y, zero()],
        ],
    )
    .unwrap()
}

/// Unit upper-triangular matrix with small random entries above the diagonal.
pub fn random_unipotent(fz: &mut Fuzzer, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for r in 0..n {
        for c in r + 1..n {
            m[(r, c)] = fz.small_rational();
        }
    }
    m
}

/// Random non-degenerate Gram matrix `PᵀHP` with `H` the canonical form.
pub fn random_gram(fz: &mut Fuzzer, n: usize) -> (Matrix, Matrix) {
    let p = random_unipotent(fz, n);
    (p.transpose().mul(&canonical_form(n)).mul(&p), p)
}

/// A random Gram matrix with a random totally isotropic subspace of
/// dimension `k`, obtained by carrying a coordinate isotropic subspace of
/// the canonical form through a Cayley isometry and a change of basis.
pub fn random_isotropic_pair(fz: &mut Fuzzer, n: usize, k: usize) -> (Matrix, Vec<Vector>) {
    let h = canonical_form(n);
    let iso = fz.isometry(&h).unwrap();
    let (gram, p) = random_gram(fz, n);
    let p_inv = p.inverse().unwrap();
    let vectors = (0..k).map(|i| p_inv.mul_vec(&iso.mul_vec(&unit_vector(n, 2 * i)))).collect();
    (gram, vectors)
}

/// `w xᵀ - x wᵀ` for an isotropic `w` and an anisotropic `x ⊥ w` in the
/// identity form on ℂ³, moved by a random isometry: nilpotent of rank 2.
pub fn nilpotent_skew3(fz: &mut Fuzzer) -> Matrix {
    let a = fz.isometry(&Matrix::identity(3)).unwrap();
    let w = a.mul_vec(&[Scalar::one(), Scalar::i(), Scalar::zero()]);
    let x = a.mul_vec(&unit_vector(3, 2));
    let scale = fz.nonzero_rational();
    let mut m = Matrix::zeros(3, 3);
    for r in 0..3 {
        for c in 0..3 {
            m[(r, c)] = &scale * &(&(&w[r] * &x[c]) - &(&x[r] * &w[c]));
        }
    }
    m
}

/// Nonzero antisymmetric matrix with rational entries.
pub fn real_skew(fz: &mut Fuzzer, n: usize) -> Matrix {
    loop {
        let k = fz.antisymmetric(n);
        if !k.is_zero() {
            return k;
        }
    }
}

pub fn cayley(s: &Matrix) -> LinearMap {
    LinearMap::new(cayley_transform(s).unwrap())
}
