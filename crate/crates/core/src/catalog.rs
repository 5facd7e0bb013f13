//! Named solvable quadratic Lie algebras in their standard bases.
//!
//! Basis orders: diamond `X, P, Q, Z`; five-dimensional `Z1, Z2, T, X1, X2`;
//! six-dimensional families `Z1, Z2, Z3, X1, X2, X3`.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::algebra::{combination, QuadraticLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{unit_vector, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    /// `n`-dimensional abelian with identity Gram matrix.
    Abelian(usize),
    Diamond,
    G5,
    G6Nilpotent,
    G6Diagonalizable(Scalar),
    G6Jordan,
}

impl CatalogName {
    /// Short tag used on the command line and in fixture names.
    pub fn tag(&self) -> String {
        match self {
            CatalogName::Abelian(n) => format!("abelian{n}"),
            CatalogName::Diamond => "diamond".into(),
            CatalogName::G5 => "g5".into(),
            CatalogName::G6Nilpotent => "g6_1".into(),
            CatalogName::G6Diagonalizable(_) => "g6_2".into(),
            CatalogName::G6Jordan => "g6_3".into(),
        }
    }

    /// Parses a tag; `lambda` is required for `g6_2` and rejected otherwise.
    pub fn parse(tag: &str, lambda: Option<Scalar>) -> Result<Self> {
        let name = match tag {
            "diamond" => CatalogName::Diamond,
            "g5" => CatalogName::G5,
            "g6_1" => CatalogName::G6Nilpotent,
            "g6_3" => CatalogName::G6Jordan,
            "g6_2" => {
                let l = lambda.ok_or_else(|| Error::BadParameter("g6_2 needs a lambda".into()))?;
                return Ok(CatalogName::G6Diagonalizable(l));
            }
            t => match t.strip_prefix("abelian").map(str::parse::<usize>) {
                Some(Ok(n)) if n > 0 => CatalogName::Abelian(n),
                _ => return Err(Error::BadParameter(format!("unknown catalog name {tag:?}"))),
            },
        };
        if lambda.is_some() {
            return Err(Error::BadParameter(format!("{tag} takes no lambda")));
        }
        Ok(name)
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::G6Diagonalizable(l) => write!(f, "g6_2({l})"),
            other => f.write_str(&other.tag()),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CatalogName::parse(s, None)
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Gram matrix with `B(e_a, e_b) = 1` for each listed pair (both orders).
pub fn pairing_gram(n: usize, pairs: &[(usize, usize)]) -> Matrix {
    let mut g = Matrix::zeros(n, n);
    for &(a, b) in pairs {
        g[(a, b)] = Scalar::one();
        g[(b, a)] = Scalar::one();
    }
    g
}

/// `2k`-dimensional form with `B(Z_i, X_j) = δ_ij` in the basis
/// `Z_1..Z_k, X_1..X_k`.
pub fn hyperbolic_gram(k: usize) -> Matrix {
    pairing_gram(2 * k, &(0..k).map(|i| (i, k + i)).collect::<Vec<_>>())
}

fn vec_of(n: usize, terms: &[(usize, i64)]) -> Vector {
    combination(n, &terms.iter().map(|&(i, c)| (i, Scalar::from_int(c))).collect::<Vec<_>>())
}

pub fn make(name: &CatalogName) -> Result<QuadraticLieAlgebra> {
    match name {
        CatalogName::Abelian(n) => QuadraticLieAlgebra::abelian(Matrix::identity(*n)),
        CatalogName::Diamond => diamond(),
        CatalogName::G5 => g5(),
        CatalogName::G6Nilpotent => g6_1(),
        CatalogName::G6Diagonalizable(l) => g6_2(l),
        CatalogName::G6Jordan => g6_3(),
    }
}

pub fn diamond() -> Result<QuadraticLieAlgebra> {
    const X: usize = 0;
    const P: usize = 1;
    const Q: usize = 2;
    const Z: usize = 3;
    let e = |i| unit_vector(4, i);
    QuadraticLieAlgebra::from_brackets(
        4,
        pairing_gram(4, &[(X, Z), (P, Q)]),
        [(X, P, e(P)), (X, Q, vec_of(4, &[(Q, -1)])), (P, Q, e(Z))],
    )?
    .with_labels(labels(&["X", "P", "Q", "Z"]))
}

pub fn g5() -> Result<QuadraticLieAlgebra> {
    const Z1: usize = 0;
    const Z2: usize = 1;
    const T: usize = 2;
    const X1: usize = 3;
    const X2: usize = 4;
    let mut gram = pairing_gram(5, &[(X1, Z1), (X2, Z2)]);
    gram[(T, T)] = Scalar::one();
    // [X1,X2] = T, [X1,T] = -Z2, [X2,T] = Z1
    QuadraticLieAlgebra::from_brackets(
        5,
        gram,
        [
            (T, X1, vec_of(5, &[(Z2, 1)])),
            (T, X2, vec_of(5, &[(Z1, -1)])),
            (X1, X2, vec_of(5, &[(T, 1)])),
        ],
    )?
    .with_labels(labels(&["Z1", "Z2", "T", "X1", "X2"]))
}

const Z1: usize = 0;
const Z2: usize = 1;
const Z3: usize = 2;
const X1: usize = 3;
const X2: usize = 4;
const X3: usize = 5;

fn g6(brackets: Vec<(usize, usize, Vector)>) -> Result<QuadraticLieAlgebra> {
    QuadraticLieAlgebra::from_brackets(6, hyperbolic_gram(3), brackets)?
        .with_labels(labels(&["Z1", "Z2", "Z3", "X1", "X2", "X3"]))
}

pub fn g6_1() -> Result<QuadraticLieAlgebra> {
    // [X3,Z2] = Z1, [X3,X1] = -X2, [Z2,X1] = Z3
    g6(vec![
        (Z2, X1, vec_of(6, &[(Z3, 1)])),
        (Z2, X3, vec_of(6, &[(Z1, -1)])),
        (X1, X3, vec_of(6, &[(X2, 1)])),
    ])
}

pub fn g6_2(lambda: &Scalar) -> Result<QuadraticLieAlgebra> {
    if lambda.is_zero() {
        return Err(Error::BadParameter("g6_2 needs lambda != 0".into()));
    }
    let scaled = |i: usize, c: Scalar| {
        let mut v = vec![Scalar::zero(); 6];
        v[i] = c;
        v
    };
    let l = lambda.clone();
    // [X3,Z1] = Z1, [X3,Z2] = λZ2, [X3,X1] = -X1, [X3,X2] = -λX2,
    // [Z1,X1] = Z3, [Z2,X2] = λZ3
    g6(vec![
        (Z1, X1, scaled(Z3, Scalar::one())),
        (Z1, X3, scaled(Z1, -Scalar::one())),
        (Z2, X2, scaled(Z3, l.clone())),
        (Z2, X3, scaled(Z2, -&l)),
        (X1, X3, scaled(X1, Scalar::one())),
        (X2, X3, scaled(X2, l)),
    ])
}

pub fn g6_3() -> Result<QuadraticLieAlgebra> {
    // [X3,Z1] = Z1, [X3,Z2] = Z1+Z2, [X3,X1] = -X1-X2, [X3,X2] = -X2,
    // [Z1,X1] = [Z2,X1] = [Z2,X2] = Z3
    g6(vec![
        (Z1, X1, vec_of(6, &[(Z3, 1)])),
        (Z1, X3, vec_of(6, &[(Z1, -1)])),
        (Z2, X1, vec_of(6, &[(Z3, 1)])),
        (Z2, X2, vec_of(6, &[(Z3, 1)])),
        (Z2, X3, vec_of(6, &[(Z1, -1), (Z2, -1)])),
        (X1, X3, vec_of(6, &[(X1, 1), (X2, 1)])),
        (X2, X3, vec_of(6, &[(X2, 1)])),
    ])
}

/// The nilpotent skew map on `q = span{Z1, Z2, X1, X2}` (hyperbolic form).
pub fn nilpotent_case_matrix() -> Matrix {
    Matrix::from_ints(4, 4, &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0])
}

/// `diag(1, λ, -1, -λ)`
pub fn diagonalizable_case_matrix(lambda: &Scalar) -> Matrix {
    Matrix::diagonal(&[Scalar::one(), lambda.clone(), -Scalar::one(), -lambda])
}

pub fn invertible_case_matrix() -> Matrix {
    Matrix::from_ints(4, 4, &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, -1, -1])
}

/// Every catalog entry exercised by the test corpus.
pub fn standard_names() -> Vec<CatalogName> {
    let mut names: Vec<CatalogName> = (1..=4).map(CatalogName::Abelian).collect();
    names.extend([CatalogName::Diamond, CatalogName::G5, CatalogName::G6Nilpotent]);
    for l in ["2", "1/2", "-2", "3", "i"] {
        names.push(CatalogName::G6Diagonalizable(l.parse().unwrap()));
    }
    names.push(CatalogName::G6Jordan);
    names
}
