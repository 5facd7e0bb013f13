//! Building quadratic Lie algebras: one-dimensional double extension,
//! orthogonal direct sum, cotangent extension `g ⊕ g*`, and the split of an
//! algebra into a non-degenerate central part and a reduced part.

use num::{One, Zero};

use crate::algebra::{LinearMap, QuadraticLieAlgebra, StructureConstants};
use crate::catalog::pairing_gram;
use crate::derivations::skew_derivation_defect;
use crate::error::{Error, Result};
use crate::matrix::{add_vec, dot, scale_vec, sub_vec, Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

fn padded(v: &[Scalar], extra: usize) -> Vector {
    let mut out = v.to_vec();
    out.extend(std::iter::repeat_n(Scalar::zero(), extra));
    out
}

/// Double extension of `g` by the skew-symmetric derivation `c`, on the basis
/// `[g…, e, f]`:
/// `[x,y] ↦ [x,y]_g + B(Cx,y) f`, `[e,x] = Cx`, `f` central, `B(e,f) = 1`.
pub fn double_extension(g: &QuadraticLieAlgebra, c: &LinearMap) -> Result<QuadraticLieAlgebra> {
    if let Some(reason) = skew_derivation_defect(g, c.matrix()) {
        return Err(Error::NotSkewDerivation(reason));
    }
    let n = g.dim();
    let (e, f) = (n, n + 1);
    let images = c.matrix().column_vectors();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = padded(g.lie().basis_bracket(i, j), 2);
            v[f] = g.form(&images[i], &g.basis_vector(j));
            brackets.push((i, j, v));
        }
        // [b_i, e] = -C b_i
        brackets.push((i, e, padded(&scale_vec(&-Scalar::one(), &images[i]), 2)));
    }
    let mut gram = Matrix::zeros(n + 2, n + 2);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = g.gram()[(i, j)].clone();
        }
    }
    gram[(e, f)] = Scalar::one();
    gram[(f, e)] = Scalar::one();
    let out = QuadraticLieAlgebra::from_brackets(n + 2, gram, brackets)?;
    match g.labels() {
        Some(l) => {
            let mut labels = l.to_vec();
            labels.extend(["e".to_string(), "f".to_string()]);
            out.with_labels(labels)
        }
        None => Ok(out),
    }
}

/// `g ⊕⊥ h` with block-diagonal bracket and form.
pub fn orthogonal_sum(g: &QuadraticLieAlgebra, h: &QuadraticLieAlgebra) -> Result<QuadraticLieAlgebra> {
    g.ensure_valid()?;
    h.ensure_valid()?;
    let (n, m) = (g.dim(), h.dim());
    let mut brackets = Vec::new();
    for (i, j, v) in g.lie().nonzero_brackets() {
        brackets.push((i, j, padded(&v, m)));
    }
    for (i, j, v) in h.lie().nonzero_brackets() {
        let mut w = vec![Scalar::zero(); n];
        w.extend(v);
        brackets.push((n + i, n + j, w));
    }
    let mut gram = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = g.gram()[(i, j)].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            gram[(n + i, n + j)] = h.gram()[(i, j)].clone();
        }
    }
    QuadraticLieAlgebra::from_brackets(n + m, gram, brackets)
}

/// `g ⊕ g*` with `[x+φ, y+ψ] = [x,y] + ad*(x)ψ - ad*(y)φ` and the pairing
/// form `B(x+φ, y+ψ) = φ(y) + ψ(x)`. Basis `[b_1…b_n, b_1*…b_n*]`.
pub fn cotangent_extension(lie: &StructureConstants) -> Result<QuadraticLieAlgebra> {
    if let Some([i, j, k]) = lie.jacobi_failure() {
        return Err(Error::NotLieAlgebra(format!("Jacobi identity fails at ({i}, {j}, {k})")));
    }
    let n = lie.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            brackets.push((i, j, padded(lie.basis_bracket(i, j), n)));
        }
        for j in 0..n {
            // ad*(b_i)(b_j*) = -b_j* ∘ ad(b_i) = Σ_k -c[i][k][j] b_k*
            let mut v = vec![Scalar::zero(); n];
            v.extend((0..n).map(|k| -lie.constant(i, k, j)));
            brackets.push((i, n + j, v));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    QuadraticLieAlgebra::from_brackets(2 * n, pairing_gram(2 * n, &pairs), brackets)
}

/// `g = z ⊕⊥ l` with `z` central and non-degenerate, `l` reduced (or zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Abelian, with a diagonal Gram matrix.
    pub central_part: QuadraticLieAlgebra,
    pub reduced_part: QuadraticLieAlgebra,
    /// Columns: basis of `z` then basis of `l`, in coordinates of `g`. It is
    /// an i-isomorphism from `central_part ⊕⊥ reduced_part` onto `g`.
    pub embedding: LinearMap,
}

/// Orthogonal basis of a maximal non-degenerate subspace of `span(vectors)`,
/// by symmetric elimination.
pub(crate) fn nondegenerate_part(gram: &Matrix, vectors: Vec<Vector>) -> Vec<Vector> {
    let mut work = vectors;
    let mut pivots = Vec::new();
    loop {
        let pivot = if let Some(idx) = work.iter().position(|x| !gram.bilinear(x, x).is_zero()) {
            work.remove(idx)
        } else {
            let pair = (0..work.len())
                .flat_map(|a| (a + 1..work.len()).map(move |b| (a, b)))
                .find(|&(a, b)| !gram.bilinear(&work[a], &work[b]).is_zero());
            match pair {
                // B(x+y, x+y) = 2B(x,y) when x, y are isotropic
                Some((a, b)) => {
                    let sum = add_vec(&work[a], &work[b]);
                    work.remove(a);
                    sum
                }
                None => break,
            }
        };
        let norm = gram.bilinear(&pivot, &pivot);
        let gp = gram.mul_vec(&pivot);
        for y in work.iter_mut() {
            let c = dot(y, &gp).checked_div(&norm).expect("pivot is anisotropic");
            *y = sub_vec(y, &scale_vec(&c, &pivot));
        }
        pivots.push(pivot);
    }
    pivots
}

pub fn reduce(g: &QuadraticLieAlgebra) -> Result<Reduction> {
    g.ensure_valid()?;
    reduce_valid(g)
}

/// [`reduce`] for an algebra already known to be valid.
pub(crate) fn reduce_valid(g: &QuadraticLieAlgebra) -> Result<Reduction> {
    let n = g.dim();
    let central = nondegenerate_part(g.gram(), g.center().vectors());
    let central_rows = Matrix::from_rows(n, &central)?;
    let central_part = QuadraticLieAlgebra::abelian(g.restricted_gram(&central_rows))?;

    let complement = g.orthogonal_complement(&Subspace::from_vectors(n, &central)?)?;
    let reduced_part = g.restrict(complement.basis())?;

    let mut columns = central;
    columns.extend(complement.vectors());
    let embedding = LinearMap::from_images(n, &columns)?;
    Ok(Reduction { central_part, reduced_part, embedding })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_i_isomorphism;
    use crate::catalog::{self, hyperbolic_gram, CatalogName};
    use crate::matrix::unit_vector;

    #[test]
    fn diamond_from_hyperbolic_plane() {
        let q = QuadraticLieAlgebra::abelian(hyperbolic_gram(1)).unwrap();
        let c = LinearMap::new(Matrix::from_ints(2, 2, &[1, 0, 0, -1]));
        let g = double_extension(&q, &c).unwrap();
        assert!(g.validate().passed());
        // P, Q, e, f  ->  X, P, Q, Z
        let a = LinearMap::from_images(4, &[unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 0), unit_vector(4, 3)])
            .unwrap();
        assert!(check_i_isomorphism(&a, &g, &catalog::diamond().unwrap()).unwrap());
    }

    #[test]
    fn zero_extension_is_abelian() {
        let q = catalog::make(&CatalogName::Abelian(3)).unwrap();
        let g = double_extension(&q, &LinearMap::new(Matrix::zeros(3, 3))).unwrap();
        assert_eq!(g.dim(), 5);
        assert!(g.is_abelian());
        assert!(g.validate().passed());
    }

    #[test]
    fn rejects_non_skew() {
        let q = catalog::make(&CatalogName::Abelian(2)).unwrap();
        let c = LinearMap::new(Matrix::identity(2));
        assert!(matches!(double_extension(&q, &c), Err(Error::NotSkewDerivation(_))));
    }

    #[test]
    fn sum_with_line() {
        let g = orthogonal_sum(&catalog::diamond().unwrap(), &catalog::make(&CatalogName::Abelian(1)).unwrap()).unwrap();
        assert_eq!(g.dim(), 5);
        assert!(g.validate().passed());
        assert!(!g.is_reduced().unwrap());
        let mut expected = Matrix::zeros(5, 5);
        for (i, j) in [(0, 3), (3, 0), (1, 2), (2, 1), (4, 4)] {
            expected[(i, j)] = Scalar::one();
        }
        assert_eq!(*g.gram(), expected);
    }

    #[test]
    fn cotangent_of_diamond() {
        let g = cotangent_extension(catalog::diamond().unwrap().lie()).unwrap();
        assert_eq!(g.dim(), 8);
        assert!(g.validate().passed());
        assert!(g.is_solvable());
        // [P, P*] = X*
        assert_eq!(g.bracket(&unit_vector(8, 1), &unit_vector(8, 5)).unwrap(), unit_vector(8, 4));
        let dual = Subspace::from_vectors(8, &(4..8).map(|i| unit_vector(8, i)).collect::<Vec<_>>()).unwrap();
        assert!(g.is_totally_isotropic(&dual));
    }

    #[test]
    fn cotangent_of_abelian() {
        let g = cotangent_extension(&StructureConstants::abelian(3)).unwrap();
        assert!(g.is_abelian());
        assert_eq!(*g.gram(), hyperbolic_gram(3));
    }

    #[test]
    fn cotangent_rejects_non_lie() {
        // [b0,b1] = b2, [b1,b2] = b1, [b0,b2] = 0 violates Jacobi
        let e = |i| unit_vector(3, i);
        let lie = StructureConstants::new(3, [(0, 1, e(2)), (1, 2, e(1))]).unwrap();
        assert!(matches!(cotangent_extension(&lie), Err(Error::NotLieAlgebra(_))));
    }

    #[test]
    fn reductions() {
        let diamond = catalog::diamond().unwrap();
        let line = catalog::make(&CatalogName::Abelian(1)).unwrap();
        let g = orthogonal_sum(&diamond, &line).unwrap();
        let r = reduce(&g).unwrap();
        assert_eq!(r.central_part.dim(), 1);
        assert_eq!(r.reduced_part.dim(), 4);
        assert!(r.reduced_part.is_reduced().unwrap());
        let sum = orthogonal_sum(&r.central_part, &r.reduced_part).unwrap();
        assert!(check_i_isomorphism(&r.embedding, &sum, &g).unwrap());

        let g5 = catalog::g5().unwrap();
        let r = reduce(&g5).unwrap();
        assert_eq!(r.central_part.dim(), 0);
        assert_eq!(r.reduced_part.without_labels(), g5.clone().without_labels());

        let ab = catalog::make(&CatalogName::Abelian(3)).unwrap();
        let r = reduce(&ab).unwrap();
        assert_eq!(r.central_part.dim(), 3);
        assert_eq!(r.reduced_part.dim(), 0);
    }

    #[test]
    fn reduction_of_hyperbolic_center() {
        // abelian plane with hyperbolic form: center is nondegenerate although
        // every basis vector is isotropic
        let g = QuadraticLieAlgebra::abelian(hyperbolic_gram(1)).unwrap();
        let r = reduce(&g).unwrap();
        assert_eq!(r.central_part.dim(), 2);
        assert_eq!(r.reduced_part.dim(), 0);
    }
}
