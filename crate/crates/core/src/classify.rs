//! Classification of solvable quadratic Lie algebras of dimension at most 6.
//!
//! An algebra is split into non-degenerate central lines plus a reduced
//! remainder. A reduced remainder of dimension 4 or 5 is unique up to
//! i-isomorphism. In dimension 6 the remainder is a double extension of a
//! four-dimensional quadratic vector space `q` by a skew map `C`, and its
//! class is the orbit of the line `ℂC` under `O(q)`. That orbit is
//! identified by three invariants of `C`: nilpotency, diagonalizability,
//! and `kappa = a²/b` where `t⁴ + a t² + b` is the characteristic polynomial.

use std::fmt;

use num::{One, Zero};

use crate::algebra::{LinearMap, QuadraticLieAlgebra};
use crate::constructions::reduce_valid;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::witt::witt_extend;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A1,
    Diamond,
    G5,
    G6Nilpotent,
    G6Diagonalizable,
    G6Jordan,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::Diamond => "Diamond",
            Family::G5 => "G5",
            Family::G6Nilpotent => "G6Nilpotent",
            Family::G6Diagonalizable => "G6Diagonalizable",
            Family::G6Jordan => "G6Jordan",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Family of one indecomposable component.
///
/// `kappa = (1+λ²)²/λ²` is present exactly for [`Family::G6Diagonalizable`];
/// `lambda` is a representative of the parameter when one lies in Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub family: Family,
    pub kappa: Option<Scalar>,
    pub lambda: Option<Scalar>,
}

impl ClassLabel {
    pub fn plain(family: Family) -> Self {
        ClassLabel { family, kappa: None, lambda: None }
    }

    pub fn diagonalizable(kappa: Scalar) -> Self {
        let lambda = recover_lambda(&kappa);
        ClassLabel { family: Family::G6Diagonalizable, kappa: Some(kappa), lambda }
    }

    /// Label of `g6_2(λ)`.
    pub fn for_lambda(lambda: &Scalar) -> Result<Self> {
        Ok(ClassLabel::diagonalizable(kappa_of_lambda(lambda)?))
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(k) = &self.kappa {
            write!(f, "(kappa={k}")?;
            if let Some(l) = &self.lambda {
                write!(f, ", lambda={l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// `(1+λ²)²/λ²`
pub fn kappa_of_lambda(lambda: &Scalar) -> Result<Scalar> {
    let sq = lambda * lambda;
    let s = &Scalar::one() + &sq;
    (&s * &s).checked_div(&sq)
}

/// Solves `x² + (2-κ)x + 1 = 0` for `x = λ²`, takes the root of larger norm
/// (ties: the smaller in lexicographic order) and returns its principal
/// square root, when all of this happens inside Q(i).
pub fn recover_lambda(kappa: &Scalar) -> Option<Scalar> {
    let four = Scalar::from_int(4);
    let disc = &(kappa * kappa) - &(&four * kappa);
    let root = disc.sqrt()?;
    let half = Scalar::from_ratio(1, 2);
    let base = kappa - &Scalar::from_int(2);
    let x1 = &(&base + &root) * &half;
    let x2 = &(&base - &root) * &half;
    let x = match x1.norm().cmp(&x2.norm()) {
        std::cmp::Ordering::Greater => x1,
        std::cmp::Ordering::Less => x2,
        std::cmp::Ordering::Equal => x1.min(x2),
    };
    x.sqrt()
}

/// Equal families, and equal `kappa` for the diagonalizable family.
pub fn same_class(a: &ClassLabel, b: &ClassLabel) -> bool {
    a.family == b.family && a.kappa == b.kappa
}

fn ensure_solvable(g: &QuadraticLieAlgebra) -> Result<()> {
    g.ensure_valid()?;
    if !g.is_solvable() {
        return Err(Error::NotSolvable);
    }
    Ok(())
}

/// Splits off non-degenerate central lines (as one-dimensional algebras) and
/// returns them followed by the reduced remainder, if nonzero.
pub fn decompose(g: &QuadraticLieAlgebra) -> Result<Vec<QuadraticLieAlgebra>> {
    ensure_solvable(g)?;
    decompose_valid(g)
}

fn decompose_valid(g: &QuadraticLieAlgebra) -> Result<Vec<QuadraticLieAlgebra>> {
    let r = reduce_valid(g)?;
    let mut parts = Vec::new();
    for i in 0..r.central_part.dim() {
        let gram = Matrix::diagonal(&[r.central_part.gram()[(i, i)].clone()]);
        parts.push(QuadraticLieAlgebra::abelian(gram)?);
    }
    let d = r.reduced_part.dim();
    if d > 6 {
        return Err(Error::UnsupportedDimension(d));
    }
    if d > 0 {
        parts.push(r.reduced_part);
    }
    Ok(parts)
}

/// `g = (ℂe ⊕ ℂf) ⊕⊥ q` with `f` central, `B(e,f) = 1`, `[q,q] ⊆ ℂf` and
/// `C = ad(e)|_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFrame {
    pub f: Vector,
    pub e: Vector,
    pub q_basis: Subspace,
    /// In coordinates of the `q_basis` rows.
    pub c: LinearMap,
    pub q_gram: Matrix,
}

pub fn extract_frame(g: &QuadraticLieAlgebra) -> Result<ExtensionFrame> {
    ensure_solvable(g)?;
    if !g.is_totally_isotropic(&g.center()) {
        return Err(Error::NotReduced);
    }
    frame_of_reduced(g)
}

/// [`extract_frame`] for a valid, solvable, reduced algebra.
fn frame_of_reduced(g: &QuadraticLieAlgebra) -> Result<ExtensionFrame> {
    if !(4..=6).contains(&g.dim()) {
        return Err(Error::UnsupportedDimension(g.dim()));
    }
    if g.is_abelian() {
        return Err(Error::NoFrame);
    }
    let n = g.dim();
    'candidates: for candidate in g.center().vectors() {
        let line = Subspace::from_vectors(n, &[candidate])?;
        let witt = witt_extend(g.gram(), &line)?;
        let f = witt.u.row(0);
        let e = witt.w.row(0);
        let f_line = Subspace::from_vectors(n, &[f.clone()])?;
        let q = witt.f;
        let q_vectors = q.vectors();
        for (i, x) in q_vectors.iter().enumerate() {
            for y in &q_vectors[i + 1..] {
                if !f_line.contains(&g.bracket(x, y)?) {
                    continue 'candidates;
                }
            }
        }
        let mut images = Vec::with_capacity(q.dim());
        for x in &q_vectors {
            match q.coordinates(&g.bracket(&e, x)?) {
                Some(coords) => images.push(coords),
                None => continue 'candidates,
            }
        }
        let c = LinearMap::from_images(q.dim(), &images)?;
        let q_gram = g.restricted_gram(q.basis());
        return Ok(ExtensionFrame { f, e, q_basis: q, c, q_gram });
    }
    Err(Error::NoFrame)
}

/// Orbit type of a skew map on a four-dimensional quadratic space, up to
/// isometric conjugation and nonzero scaling.
pub fn classify_skew_orbit(c: &LinearMap, q_gram: &Matrix) -> Result<ClassLabel> {
    let m = c.matrix();
    if m.rows() != 4 || m.cols() != 4 || q_gram.rows() != 4 || q_gram.cols() != 4 {
        return Err(Error::UnsupportedDimension(m.rows()));
    }
    if !m.transpose().mul(q_gram).add(&q_gram.mul(m)).is_zero() {
        return Err(Error::NotSkew);
    }
    if !m.kernel().is_subspace_of(&m.image()) {
        return Err(Error::KernelNotInImage);
    }
    let p = m.char_poly();
    if !p.coeff(1).is_zero() || !p.coeff(3).is_zero() {
        return Err(Error::UnexpectedOrbit(format!("characteristic polynomial {p} has odd terms")));
    }
    if p == Polynomial::monomial(4) {
        return Ok(ClassLabel::plain(Family::G6Nilpotent));
    }
    let (a, b) = (p.coeff(2), p.coeff(0));
    if b.is_zero() {
        return Err(Error::UnexpectedOrbit(format!("singular non-nilpotent map, characteristic polynomial {p}")));
    }
    // diagonalizable iff the squarefree part of p annihilates C
    if p.squarefree_part().eval_matrix(m).is_zero() {
        return Ok(ClassLabel::diagonalizable((&a * &a).checked_div(&b)?));
    }
    if &a * &a == &Scalar::from_int(4) * &b {
        return Ok(ClassLabel::plain(Family::G6Jordan));
    }
    Err(Error::UnexpectedOrbit(format!("non-diagonalizable map with characteristic polynomial {p}")))
}

fn label_component(part: &QuadraticLieAlgebra) -> Result<ClassLabel> {
    match part.dim() {
        1 => Ok(ClassLabel::plain(Family::A1)),
        4 => Ok(ClassLabel::plain(Family::Diamond)),
        5 => Ok(ClassLabel::plain(Family::G5)),
        6 => {
            let frame = frame_of_reduced(part)?;
            classify_skew_orbit(&frame.c, &frame.q_gram)
        }
        d => Err(Error::UnexpectedOrbit(format!("reduced component of dimension {d}"))),
    }
}

/// Labels of the indecomposable components, sorted by family then `kappa`.
pub fn classify(g: &QuadraticLieAlgebra) -> Result<Vec<ClassLabel>> {
    ensure_solvable(g)?;
    let mut labels = decompose_valid(g)?
        .iter()
        .map(label_component)
        .collect::<Result<Vec<_>>>()?;
    labels.sort_by(|x, y| x.family.cmp(&y.family).then_with(|| x.kappa.cmp(&y.kappa)));
    Ok(labels)
}
