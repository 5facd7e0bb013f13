//! Lie brackets, quadratic Lie algebras, and the structural computations on
//! them: axiom validation, center, derived series, orthogonal complements,
//! change of basis and isometry checks.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{dot, unit_vector, Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Structure constants `c[i][j][k]` of an antisymmetric bracket,
/// `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
///
/// Only entries with `i < j` are supplied; the rest follow by antisymmetry,
/// so a `StructureConstants` is antisymmetric by construction. It is not
/// necessarily a Lie algebra: see [`StructureConstants::jacobi_failure`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureConstants {
    dim: usize,
    tensor: Vec<Scalar>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Self {
        StructureConstants { dim, tensor: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Builds from `(i, j, [b_i, b_j])` entries with `i < j`. Pairs not listed
    /// bracket to zero.
    pub fn new(dim: usize, brackets: impl IntoIterator<Item = (usize, usize, Vector)>) -> Result<Self> {
        let mut out = StructureConstants::abelian(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in brackets {
            if i >= j {
                return Err(Error::Index(format!("bracket entry ({i}, {j}) needs i < j")));
            }
            if j >= dim {
                return Err(Error::Index(format!("bracket entry ({i}, {j}) out of range for dimension {dim}")));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(Error::Index(format!("duplicate bracket entry ({i}, {j})")));
            }
            for (k, value) in v.into_iter().enumerate() {
                out.tensor[(j * dim + i) * dim + k] = -&value;
                out.tensor[(i * dim + j) * dim + k] = value;
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    /// `[b_i, b_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.tensor[start..start + self.dim]
    }

    /// Nonzero brackets `(i, j, [b_i, b_j])` with `i < j`, sorted by `(i, j)`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.basis_bracket(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.tensor.iter().all(Zero::is_zero)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&coeff * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)`; column `j` is `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(self.dim, j)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// Every entry satisfies `c[i][j][k] = -c[j][i][k]`; returns the first
    /// violating triple otherwise.
    pub fn antisymmetry_failure(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *self.constant(i, j, k) != -self.constant(j, i, k) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// First basis triple `i < j < k` whose Jacobi sum is nonzero.
    pub fn jacobi_failure(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        let e = |i| unit_vector(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&e(i), self.basis_bracket(j, k)).unwrap();
                    let b = self.bracket(&e(j), self.basis_bracket(k, i)).unwrap();
                    let c = self.bracket(&e(k), self.basis_bracket(i, j)).unwrap();
                    if (0..n).any(|t| !(&(&a[t] + &b[t]) + &c[t]).is_zero()) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Span of `[u, v]` over basis vectors of `a` and `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let (av, bv) = (a.vectors(), b.vectors());
        let same = a == b;
        let mut vectors = Vec::new();
        for (i, u) in av.iter().enumerate() {
            // [a, a] only needs i < j
            let start = if same { i + 1 } else { 0 };
            for v in &bv[start..] {
                vectors.push(self.bracket(u, v).expect("subspaces share the ambient dimension"));
            }
        }
        Subspace::from_vectors(self.dim, &vectors).expect("bracket output has ambient length")
    }

    pub fn center(&self) -> Subspace {
        // rows (j, k): Σ_i z_i c[i][j][k] = 0
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[(j * n + k, i)] = self.constant(i, j, k).clone();
                }
            }
        }
        m.kernel()
    }

    pub fn derived_ideal(&self) -> Subspace {
        let brackets: Vec<Vector> = self.nonzero_brackets().into_iter().map(|(_, _, v)| v).collect();
        Subspace::from_vectors(self.dim, &brackets).expect("bracket output has ambient length")
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![Subspace::full(self.dim)];
        for _ in 0..=self.dim {
            let last = terms.last().unwrap();
            let next = self.bracket_span(last, last);
            if next == *last {
                break;
            }
            terms.push(next);
        }
        let solvable = terms.last().is_some_and(Subspace::is_zero);
        DerivedSeries { terms, solvable }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().solvable
    }
}

/// `g = D⁰ ⊃ D¹ ⊃ …` up to stabilization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subspace>,
    pub solvable: bool,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

/// A linear map between coordinate spaces, `target = matrix · source`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    /// Map whose `j`-th column is `images[j]`.
    pub fn from_images(target_dim: usize, images: &[Vector]) -> Result<Self> {
        Ok(LinearMap::new(Matrix::from_columns(target_dim, images)?))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.source_dim() {
            return Err(Error::DimensionMismatch { expected: self.source_dim(), found: v.len() });
        }
        Ok(self.matrix.mul_vec(v))
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.target_dim() != self.source_dim() {
            return Err(Error::DimensionMismatch { expected: self.source_dim(), found: other.target_dim() });
        }
        Ok(LinearMap::new(self.matrix.mul(&other.matrix)))
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap::new(self.matrix.inverse()?))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }
}

/// Outcome of one axiom check, with the first failing basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AxiomCheck {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        AxiomCheck { holds: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub antisymmetry: AxiomCheck,
    pub jacobi: AxiomCheck,
    pub symmetry: AxiomCheck,
    pub nondegeneracy: AxiomCheck,
    pub invariance: AxiomCheck,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.holds)
    }

    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 5] {
        [
            ("antisymmetry", &self.antisymmetry),
            ("jacobi", &self.jacobi),
            ("symmetry", &self.symmetry),
            ("nondegeneracy", &self.nondegeneracy),
            ("invariance", &self.invariance),
        ]
    }

    pub fn first_failure(&self) -> Option<(&'static str, &AxiomCheck)> {
        self.checks().into_iter().find(|(_, c)| !c.holds)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, check) in self.checks() {
            match (&check.witness, check.holds) {
                (_, true) => writeln!(f, "{name}: ok")?,
                (Some(w), false) => writeln!(f, "{name}: FAILED at {w:?}")?,
                (None, false) => writeln!(f, "{name}: FAILED")?,
            }
        }
        Ok(())
    }
}

/// A Lie algebra with a bilinear form given by its Gram matrix.
///
/// Construction only checks shapes; whether the bracket satisfies Jacobi
/// and the form is symmetric, non-degenerate and invariant is reported by
/// [`QuadraticLieAlgebra::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticLieAlgebra {
    lie: StructureConstants,
    gram: Matrix,
    labels: Option<Vec<String>>,
}

impl QuadraticLieAlgebra {
    pub fn new(lie: StructureConstants, gram: Matrix) -> Result<Self> {
        let n = lie.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: gram.rows().max(gram.cols()) });
        }
        Ok(QuadraticLieAlgebra { lie, gram, labels: None })
    }

    pub fn from_brackets(
        dim: usize,
        gram: Matrix,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        QuadraticLieAlgebra::new(StructureConstants::new(dim, brackets)?, gram)
    }

    /// Abelian algebra with the given form.
    pub fn abelian(gram: Matrix) -> Result<Self> {
        QuadraticLieAlgebra::new(StructureConstants::abelian(gram.rows()), gram)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn lie(&self) -> &StructureConstants {
        &self.lie
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// `B(x, y)`
    pub fn form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.gram.bilinear(x, y)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.lie.bracket(x, y)
    }

    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.lie.ad(x)
    }

    pub fn is_abelian(&self) -> bool {
        self.lie.is_abelian()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let symmetry = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.gram[(i, j)] != self.gram[(j, i)])
            .map(|(i, j)| vec![i, j]);
        let nondegenerate = self.gram.determinant() != Scalar::zero();

        let mut invariance = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs_vec = self.lie.basis_bracket(i, j);
                for k in 0..n {
                    let lhs = dot(lhs_vec, &self.gram.column(k));
                    let rhs = dot(&self.gram.row(i), self.lie.basis_bracket(j, k));
                    if lhs != rhs {
                        invariance = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }

        ValidationReport {
            antisymmetry: AxiomCheck::from_witness(self.lie.antisymmetry_failure().map(Vec::from)),
            jacobi: AxiomCheck::from_witness(self.lie.jacobi_failure().map(Vec::from)),
            symmetry: AxiomCheck::from_witness(symmetry),
            nondegeneracy: AxiomCheck { holds: nondegenerate, witness: None },
            invariance: AxiomCheck::from_witness(invariance),
        }
    }

    /// Errors with [`Error::InvalidAlgebra`] naming the first failed axiom.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().first_failure() {
            None => Ok(()),
            Some((name, check)) => Err(Error::InvalidAlgebra(match &check.witness {
                Some(w) => format!("{name} fails at {w:?}"),
                None => format!("{name} fails"),
            })),
        }
    }

    pub fn center(&self) -> Subspace {
        self.lie.center()
    }

    pub fn derived_ideal(&self) -> Subspace {
        self.lie.derived_ideal()
    }

    pub fn derived_series(&self) -> DerivedSeries {
        self.lie.derived_series()
    }

    pub fn is_solvable(&self) -> bool {
        self.lie.is_solvable()
    }

    /// `{ x : B(x, s) = 0 }`
    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        Ok(s.basis().mul(&self.gram).kernel())
    }

    /// Gram matrix of the form restricted to the rows of `basis`.
    pub fn restricted_gram(&self, basis: &Matrix) -> Matrix {
        basis.mul(&self.gram).mul(&basis.transpose())
    }

    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        self.restricted_gram(s.basis()).is_zero()
    }

    /// True iff the center is totally isotropic.
    pub fn is_reduced(&self) -> Result<bool> {
        self.ensure_valid()?;
        Ok(self.is_totally_isotropic(&self.center()))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.lie.bracket_span(&Subspace::full(self.dim()), s).is_subspace_of(s)
    }

    /// The algebra on a subalgebra, in coordinates of the given basis rows.
    pub fn restrict(&self, basis: &Matrix) -> Result<QuadraticLieAlgebra> {
        let k = basis.rows();
        let span = Subspace::from_matrix_rows(basis);
        if span.dim() != k {
            return Err(Error::SingularMap);
        }
        let basis_t = basis.transpose();
        let mut brackets = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let v = self.bracket(&basis.row(i), &basis.row(j))?;
                let coords = basis_t.solve(&v).map_err(|_| Error::NotClosed)?;
                brackets.push((i, j, coords));
            }
        }
        QuadraticLieAlgebra::from_brackets(k, self.restricted_gram(basis), brackets)
    }

    /// The algebra carried through the change of basis `a`, so that `a` is an
    /// i-isomorphism from `self` onto the result.
    pub fn transport(&self, a: &LinearMap) -> Result<QuadraticLieAlgebra> {
        let n = self.dim();
        if a.source_dim() != n || a.target_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.source_dim() });
        }
        let inv = a.matrix().inverse()?;
        let preimages = inv.column_vectors();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket(&preimages[i], &preimages[j])?;
                brackets.push((i, j, a.matrix().mul_vec(&v)));
            }
        }
        let gram = inv.transpose().mul(&self.gram).mul(&inv);
        QuadraticLieAlgebra::from_brackets(n, gram, brackets)
    }
}

/// True iff `a` is invertible, preserves brackets and carries `B_h` back to
/// `B_g`.
pub fn check_i_isomorphism(a: &LinearMap, g: &QuadraticLieAlgebra, h: &QuadraticLieAlgebra) -> Result<bool> {
    let n = g.dim();
    if h.dim() != n || a.source_dim() != n || a.target_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: h.dim().max(a.source_dim()).max(a.target_dim()) });
    }
    if a.matrix().determinant().is_zero() {
        return Ok(false);
    }
    let m = a.matrix();
    if m.transpose().mul(h.gram()).mul(m) != *g.gram() {
        return Ok(false);
    }
    let images = m.column_vectors();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.mul_vec(g.lie().basis_bracket(i, j));
            let rhs = h.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis-vector helper: `Σ coeffs[k] · b_k` from `(index, coefficient)` pairs.
pub fn combination(dim: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

/// `Σ b_k` for the listed indices.
pub fn sum_of(dim: usize, indices: &[usize]) -> Vector {
    combination(dim, &indices.iter().map(|&i| (i, Scalar::one())).collect::<Vec<_>>())
}
