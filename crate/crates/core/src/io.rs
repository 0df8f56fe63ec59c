//! JSON files for matrices and coefficient tensors.
//!
//! ```text
//! matrix: { "n_qubits": N, "entries": [[[re, im], ...], ...] }   row-major
//! coeffs: { "n_qubits": N, "coeffs": [c_0..0, c_0..1, ...] }       lexicographic
//! ```

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::pauli::{PauliCoefficients, MAX_QUBITS};

/// Conjugate-pair tolerance for matrices read from disk.
pub const FILE_HERMITIAN_TOL: f64 = 1e-9;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    n_qubits: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffFile {
    n_qubits: usize,
    coeffs: Vec<f64>,
}

fn parse_err(path: &Path, e: serde_json::Error) -> Error {
    Error::Parse(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column()))
}

pub fn matrix_to_json(m: &HermitianMatrix) -> String {
    let entries = m.as_matrix().rows().map(|row| row.iter().map(|z| [z.re, z.im]).collect()).collect();
    let file = MatrixFile { n_qubits: m.n_qubits(), entries };
    serde_json::to_string_pretty(&file).expect("matrix serializes")
}

pub fn matrix_from_json(text: &str, origin: &Path) -> Result<HermitianMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| parse_err(origin, e))?;
    if !(1..=MAX_QUBITS).contains(&file.n_qubits) {
        return Err(Error::SchemaViolation(format!("n_qubits = {} outside 1..=5", file.n_qubits)));
    }
    let dim = 1usize << file.n_qubits;
    if file.entries.len() != dim {
        return Err(Error::SchemaViolation(format!(
            "entries: expected {dim} rows for {} qubits, found {}",
            file.n_qubits,
            file.entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(dim);
    for (r, row) in file.entries.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::SchemaViolation(format!("entries[{r}]: expected {dim} columns, found {}", row.len())));
        }
        rows.push(row.iter().map(|&[re, im]| Complex64::new(re, im)).collect());
    }
    let m = CMatrix::from_rows(&rows)?;
    HermitianMatrix::with_tolerance(m, FILE_HERMITIAN_TOL).map_err(|e| match e {
        Error::NotHermitian { row, col, deviation } => Error::SchemaViolation(format!(
            "entries[{row}][{col}] is not the conjugate of entries[{col}][{row}] (deviation {deviation:e})"
        )),
        other => Error::SchemaViolation(other.to_string()),
    })
}

pub fn coeffs_to_json(c: &PauliCoefficients) -> String {
    let file = CoeffFile { n_qubits: c.n_qubits(), coeffs: c.as_slice().to_vec() };
    serde_json::to_string_pretty(&file).expect("coefficients serialize")
}

pub fn coeffs_from_json(text: &str, origin: &Path) -> Result<PauliCoefficients> {
    let file: CoeffFile = serde_json::from_str(text).map_err(|e| parse_err(origin, e))?;
    PauliCoefficients::new(file.n_qubits, file.coeffs).map_err(|e| Error::SchemaViolation(e.to_string()))
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: String) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<HermitianMatrix> {
    let path = path.as_ref();
    matrix_from_json(&read_text(path)?, path)
}

pub fn write_matrix(m: &HermitianMatrix, path: impl AsRef<Path>) -> Result<()> {
    write_text(path.as_ref(), matrix_to_json(m) + "\n")
}

pub fn read_coeffs(path: impl AsRef<Path>) -> Result<PauliCoefficients> {
    let path = path.as_ref();
    coeffs_from_json(&read_text(path)?, path)
}

pub fn write_coeffs(c: &PauliCoefficients, path: impl AsRef<Path>) -> Result<()> {
    write_text(path.as_ref(), coeffs_to_json(c) + "\n")
}
