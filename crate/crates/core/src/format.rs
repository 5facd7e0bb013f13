//! JSON container for algebras and matrices.
//!
//! Scalars are always strings in the canonical grammar, never JSON numbers.
//! Emission is canonical: two-space indent, keys `dim, basis, gram,
//! brackets`, only nonzero brackets, sorted by `(i, j)`, trailing newline.

use serde::{Deserialize, Serialize};

use crate::algebra::QuadraticLieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub gram: Vec<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub v: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { position: format!("line {} column {}", e.line(), e.column()), message: e.to_string() }
}

fn scalar_at(text: &str, place: impl FnOnce() -> String) -> Result<Scalar> {
    parse_scalar(text).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse { position: format!("{}, {position}", place()), message },
        other => other,
    })
}

fn parse_row(row: &[String], len: usize, place: &str) -> Result<Vector> {
    if row.len() != len {
        return Err(Error::Parse {
            position: place.to_string(),
            message: format!("expected {len} entries, found {}", row.len()),
        });
    }
    row.iter()
        .enumerate()
        .map(|(k, s)| scalar_at(s, || format!("{place}[{k}]")))
        .collect()
}

fn parse_grid(grid: &[Vec<String>], n: usize, name: &str) -> Result<Matrix> {
    if grid.len() != n {
        return Err(Error::Parse {
            position: name.to_string(),
            message: format!("expected {n} rows, found {}", grid.len()),
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for (r, row) in grid.iter().enumerate() {
        entries.extend(parse_row(row, n, &format!("{name}[{r}]"))?);
    }
    Matrix::from_entries(n, n, entries)
}

fn emit_grid(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

impl AlgebraFile {
    pub fn from_algebra(g: &QuadraticLieAlgebra) -> Self {
        AlgebraFile {
            dim: g.dim(),
            basis: g.labels().map(<[String]>::to_vec),
            gram: emit_grid(g.gram()),
            brackets: g
                .lie()
                .nonzero_brackets()
                .into_iter()
                .map(|(i, j, v)| BracketEntry { i, j, v: v.iter().map(Scalar::to_string).collect() })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<QuadraticLieAlgebra> {
        let n = self.dim;
        let gram = parse_grid(&self.gram, n, "gram")?;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (idx, b) in self.brackets.iter().enumerate() {
            if b.i >= b.j || b.j >= n {
                return Err(Error::Index(format!(
                    "brackets[{idx}]: entry ({}, {}) needs i < j < {n}",
                    b.i, b.j
                )));
            }
            brackets.push((b.i, b.j, parse_row(&b.v, n, &format!("brackets[{idx}].v"))?));
        }
        let g = QuadraticLieAlgebra::from_brackets(n, gram, brackets)?;
        match &self.basis {
            Some(names) if names.len() != n => Err(Error::Parse {
                position: "basis".into(),
                message: format!("expected {n} names, found {}", names.len()),
            }),
            Some(names) => g.with_labels(names.clone()),
            None => Ok(g),
        }
    }
}

/// Parses an algebra file. The axioms are not checked here; see
/// [`QuadraticLieAlgebra::validate`].
pub fn parse_file(bytes: &[u8]) -> Result<QuadraticLieAlgebra> {
    let file: AlgebraFile = serde_json::from_slice(bytes).map_err(json_error)?;
    file.to_algebra()
}

fn pretty<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("plain data serializes");
    out.push(b'\n');
    out
}

pub fn write_file(g: &QuadraticLieAlgebra) -> Vec<u8> {
    pretty(&AlgebraFile::from_algebra(g))
}

pub fn parse_matrix_file(bytes: &[u8]) -> Result<Matrix> {
    let file: MatrixFile = serde_json::from_slice(bytes).map_err(json_error)?;
    parse_grid(&file.entries, file.dim, "entries")
}

pub fn write_matrix_file(m: &Matrix) -> Vec<u8> {
    pretty(&MatrixFile { dim: m.rows(), entries: emit_grid(m) })
}
