//! Seeded random isometries via the Cayley transform.
//!
//! Randomness comes from SplitMix64 (see the README for its constants), so a
//! seed produces the same matrices on every platform and implementation.
//!
//! For a Gram matrix `G`, a map `S` is `G`-skew when `SᵀG + GS = 0`, i.e.
//! `GS` is antisymmetric. Then `A = (I - S)⁻¹(I + S)` satisfies `AᵀGA = G`.

use num::Zero;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{LinearMap, QuadraticLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub const MAX_ATTEMPTS: usize = 16;

/// Draws small exact scalars from a SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct Fuzzer {
    rng: SplitMix64,
}

impl Fuzzer {
    pub fn new(seed: u64) -> Self {
        Fuzzer { rng: SplitMix64::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `0..bound`, by remainder.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// `p/q` with `p ∈ [-3, 3]`, `q ∈ {1, 2}`: two draws.
    pub fn small_rational(&mut self) -> Scalar {
        let p = self.int_in(-3, 3);
        let q = self.int_in(1, 2);
        Scalar::from_ratio(p, q)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let s = self.small_rational();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Antisymmetric `n×n` matrix; the strict upper triangle is drawn row by row.
    pub fn antisymmetric(&mut self, n: usize) -> Matrix {
        let mut k = Matrix::zeros(n, n);
        for r in 0..n {
            for c in r + 1..n {
                let v = self.small_rational();
                k[(c, r)] = -&v;
                k[(r, c)] = v;
            }
        }
        k
    }

    /// `S = G⁻¹K` with `K` antisymmetric.
    pub fn gram_skew(&mut self, gram: &Matrix) -> Result<Matrix> {
        let inv = gram.inverse().map_err(|_| Error::DegenerateForm)?;
        Ok(inv.mul(&self.antisymmetric(gram.rows())))
    }

    /// Cayley isometry of `gram`, resampling `S` while `I - S` is singular.
    pub fn isometry(&mut self, gram: &Matrix) -> Result<Matrix> {
        for _ in 0..MAX_ATTEMPTS {
            let s = self.gram_skew(gram)?;
            match cayley_transform(&s) {
                Ok(a) => return Ok(a),
                Err(Error::SingularMap) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::ResampleExhausted(MAX_ATTEMPTS))
    }
}

/// `(I - S)⁻¹(I + S)`; [`Error::SingularMap`] if `I - S` is singular.
pub fn cayley_transform(s: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(s.rows());
    Ok(id.sub(s).inverse()?.mul(&id.add(s)))
}

/// Deterministic in `seed`; the result `A` satisfies `AᵀGA = G` exactly.
pub fn random_isometry(g: &QuadraticLieAlgebra, seed: u64) -> Result<LinearMap> {
    Ok(LinearMap::new(Fuzzer::new(seed).isometry(g.gram())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_i_isomorphism;
    use crate::catalog;

    #[test]
    fn splitmix_reference_output() {
        let mut f = Fuzzer::new(0);
        assert_eq!(f.next_u64(), 0xe220_a839_7b1d_cdaf);
        assert_eq!(f.next_u64(), 0x6e78_9e6a_a1b9_65f4);
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        assert_eq!(cayley_transform(&Matrix::zeros(3, 3)).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn cayley_of_diagonal_skew() {
        let gram = catalog::hyperbolic_gram(1);
        let s = Matrix::diagonal(&[Scalar::from_ratio(1, 2), Scalar::from_ratio(-1, 2)]);
        assert!(s.transpose().mul(&gram).add(&gram.mul(&s)).is_zero());
        let a = cayley_transform(&s).unwrap();
        assert_eq!(a, Matrix::diagonal(&[Scalar::from_int(3), Scalar::from_ratio(1, 3)]));
        assert_eq!(a.transpose().mul(&gram).mul(&a), gram);
        assert_eq!(cayley_transform(&Matrix::identity(2)), Err(Error::SingularMap));
    }

    #[test]
    fn isometries_are_reproducible_and_exact() {
        for name in catalog::standard_names() {
            let g = catalog::make(&name).unwrap();
            for seed in 0..3 {
                let a = random_isometry(&g, seed).unwrap();
                assert_eq!(a, random_isometry(&g, seed).unwrap());
                assert_eq!(a.matrix().transpose().mul(g.gram()).mul(a.matrix()), *g.gram());
                assert!(check_i_isomorphism(&a, &g, &g.transport(&a).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn degenerate_gram_rejected() {
        let g = QuadraticLieAlgebra::abelian(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(random_isometry(&g, 1), Err(Error::DegenerateForm));
    }
}
