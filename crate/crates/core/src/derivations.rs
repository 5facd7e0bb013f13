//! Skew-symmetric derivations `D` of a quadratic Lie algebra:
//! `D[x,y] = [Dx,y] + [x,Dy]` and `B(Dx,y) = -B(x,Dy)`.

use num::Zero;

use crate::algebra::{LinearMap, QuadraticLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewDerivation {
    map: LinearMap,
}

impl SkewDerivation {
    /// Checks both defining equations on all basis pairs.
    pub fn new(g: &QuadraticLieAlgebra, matrix: Matrix) -> Result<Self> {
        if let Some(reason) = skew_derivation_defect(g, &matrix) {
            return Err(Error::NotSkewDerivation(reason));
        }
        Ok(SkewDerivation { map: LinearMap::new(matrix) })
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn matrix(&self) -> &Matrix {
        self.map.matrix()
    }

    pub fn algebra_dim(&self) -> usize {
        self.map.source_dim()
    }
}

/// Describes the first violated equation, or `None` if `m` is a
/// skew-symmetric derivation of `g`.
pub fn skew_derivation_defect(g: &QuadraticLieAlgebra, m: &Matrix) -> Option<String> {
    let n = g.dim();
    if m.rows() != n || m.cols() != n {
        return Some(format!("expected a {n}x{n} matrix, got {}x{}", m.rows(), m.cols()));
    }
    let images = m.column_vectors();
    for i in 0..n {
        for j in 0..n {
            let lhs = m.mul_vec(g.lie().basis_bracket(i, j));
            let a = g.bracket(&images[i], &unit_vector(n, j)).unwrap();
            let b = g.bracket(&unit_vector(n, i), &images[j]).unwrap();
            if (0..n).any(|k| lhs[k] != &a[k] + &b[k]) {
                return Some(format!("derivation equation fails on basis pair ({i}, {j})"));
            }
            let skew = g.form(&images[i], &unit_vector(n, j)) + g.form(&unit_vector(n, i), &images[j]);
            if !skew.is_zero() {
                return Some(format!("skew-symmetry fails on basis pair ({i}, {j})"));
            }
        }
    }
    None
}

/// Row-major flattening; entry `(r, c)` sits at `r·n + c`.
fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn unflatten(n: usize, v: Vector) -> Matrix {
    Matrix::from_entries(n, n, v).expect("n² entries")
}

/// The skew-derivation equations as a linear system on the `n²` entries
/// of `D`, all ordered basis pairs included.
fn derivation_system(g: &QuadraticLieAlgebra) -> Matrix {
    let n = g.dim();
    let c = |i, j, k| g.lie().constant(i, j, k);
    let unknown = |r: usize, col: usize| r * n + col;
    let mut sys = Matrix::zeros(n * n * n + n * n, n * n);

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for m in 0..n {
                    // (D[b_i,b_j])_k - ([D b_i, b_j])_k - ([b_i, D b_j])_k
                    sys[(row, unknown(k, m))] += c(i, j, m);
                    sys[(row, unknown(m, i))] -= c(m, j, k);
                    sys[(row, unknown(m, j))] -= c(i, m, k);
                }
            }
        }
    }
    let gram = g.gram();
    for i in 0..n {
        for j in 0..n {
            let row = n * n * n + i * n + j;
            for m in 0..n {
                // B(D b_i, b_j) + B(b_i, D b_j)
                sys[(row, unknown(m, i))] += &gram[(m, j)];
                sys[(row, unknown(m, j))] += &gram[(i, m)];
            }
        }
    }
    sys
}

/// `Der_a(g)` as a subspace of the flattened `n²`-dimensional matrix space.
pub fn skew_derivation_space(g: &QuadraticLieAlgebra) -> Result<Subspace> {
    g.ensure_valid()?;
    Ok(derivation_system(g).kernel())
}

/// Echelon basis of the skew-symmetric derivations.
pub fn skew_derivation_basis(g: &QuadraticLieAlgebra) -> Result<Vec<SkewDerivation>> {
    let n = g.dim();
    Ok(skew_derivation_space(g)?
        .vectors()
        .into_iter()
        .map(|v| SkewDerivation { map: LinearMap::new(unflatten(n, v)) })
        .collect())
}

/// `{ ad(v) }` as a subspace of the flattened matrix space.
pub fn inner_derivation_space(g: &QuadraticLieAlgebra) -> Result<Subspace> {
    g.ensure_valid()?;
    let n = g.dim();
    let ads: Vec<Vector> = (0..n)
        .map(|i| g.ad(&unit_vector(n, i)).map(|m| flatten(&m)))
        .collect::<Result<_>>()?;
    Subspace::from_vectors(n * n, &ads)
}

pub fn inner_derivation_basis(g: &QuadraticLieAlgebra) -> Result<Vec<SkewDerivation>> {
    let n = g.dim();
    Ok(inner_derivation_space(g)?
        .vectors()
        .into_iter()
        .map(|v| SkewDerivation { map: LinearMap::new(unflatten(n, v)) })
        .collect())
}

/// Some `v` with `ad(v) = d`; unique modulo the center. Free coordinates of
/// the echelon solve are set to zero.
pub fn inner_witness(g: &QuadraticLieAlgebra, d: &SkewDerivation) -> Result<Vector> {
    let n = g.dim();
    if d.algebra_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.algebra_dim() });
    }
    let columns: Vec<Vector> = (0..n)
        .map(|i| g.ad(&unit_vector(n, i)).map(|m| flatten(&m)))
        .collect::<Result<_>>()?;
    let system = Matrix::from_columns(n * n, &columns)?;
    system.solve(&flatten(d.matrix())).map_err(|e| match e {
        Error::Inconsistent => Error::NotInner,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Scalar;

    /// The general skew derivation of the diamond algebra, basis X, P, Q, Z.
    fn diamond_derivation(a: i64, y: i64, z: i64) -> Matrix {
        Matrix::from_ints(4, 4, &[0, 0, 0, 0, y, a, 0, 0, z, 0, -a, 0, 0, -z, -y, 0])
    }

    #[test]
    fn diamond_derivations_are_inner() {
        let g = catalog::diamond().unwrap();
        let skew = skew_derivation_basis(&g).unwrap();
        assert_eq!(skew.len(), 3);
        for d in &skew {
            let m = d.matrix();
            assert!(m[(0, 0)].is_zero() && m[(3, 3)].is_zero());
            assert!(skew_derivation_defect(&g, m).is_none());
        }
        assert_eq!(inner_derivation_basis(&g).unwrap().len(), 3);
        assert_eq!(skew_derivation_space(&g).unwrap(), inner_derivation_space(&g).unwrap());
    }

    #[test]
    fn diamond_witness() {
        let g = catalog::diamond().unwrap();
        let d = SkewDerivation::new(&g, diamond_derivation(2, 3, -5)).unwrap();
        // aX - yP + zQ
        let v = inner_witness(&g, &d).unwrap();
        assert_eq!(v, [2, -3, -5, 0].map(Scalar::from_int).to_vec());
        assert_eq!(g.ad(&v).unwrap(), *d.matrix());
    }

    #[test]
    fn abelian_cases() {
        let g = catalog::make(&catalog::CatalogName::Abelian(4)).unwrap();
        assert_eq!(skew_derivation_basis(&g).unwrap().len(), 6);
        assert!(inner_derivation_basis(&g).unwrap().is_empty());

        let zero = SkewDerivation::new(&g, Matrix::zeros(4, 4)).unwrap();
        assert_eq!(inner_witness(&g, &zero).unwrap(), vec![Scalar::zero(); 4]);

        let q = QuadraticLieAlgebra::abelian(catalog::hyperbolic_gram(1)).unwrap();
        let c = SkewDerivation::new(&q, Matrix::from_ints(2, 2, &[1, 0, 0, -1])).unwrap();
        assert_eq!(inner_witness(&q, &c), Err(Error::NotInner));
    }

    #[test]
    fn rejects_non_derivations() {
        let g = catalog::diamond().unwrap();
        assert!(matches!(
            SkewDerivation::new(&g, Matrix::identity(4)),
            Err(Error::NotSkewDerivation(_))
        ));
    }
}
