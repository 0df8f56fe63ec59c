//! Dense square complex matrices and the Hermitian newtype used for states.
//!
//! Storage is row-major `Complex64`. Qubit 1 is the leftmost Kronecker factor
//! and therefore the most significant bit of a row or column index.

use std::ops::{Add, Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported dimension (five qubits).
pub const MAX_DIM: usize = 32;

/// Entrywise tolerance for accepting a matrix as Hermitian at construction.
pub const HERMITIAN_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// General square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major data. Panics if `data.len() != dim * dim`.
    pub fn from_row_major(dim: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), dim * dim, "row-major data has wrong length");
        CMatrix { dim, data }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(CMatrix { dim, data })
    }

    /// Builds a matrix from `(re, im)` pairs, row by row.
    pub fn from_pairs(rows: &[&[(f64, f64)]]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> =
            rows.iter().map(|r| r.iter().map(|&(re, im)| Complex64::new(re, im)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.dim)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        CMatrix { dim: self.dim, data: self.data.iter().map(|z| z * factor).collect() }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Kronecker product: `out[i*m + k][j*m + l] = self[i][j] * other[k][l]`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut out = Self::zeros(dim);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                if a == ZERO {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest `|m[j][k] - conj(m[k][j])|` together with its position.
    pub fn hermitian_deviation(&self) -> (f64, usize, usize) {
        let mut worst = (0.0, 0, 0);
        for j in 0..self.dim {
            for k in j..self.dim {
                let dev = (self[(j, k)] - self[(k, j)].conj()).norm();
                if dev > worst.0 {
                    worst = (dev, j, k);
                }
            }
        }
        worst
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;

    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

/// Hermitian matrix of dimension `2^N`, `N` in `1..=5`.
///
/// Construction checks the conjugate-pair symmetry and then replaces each pair
/// by its average, so the stored entries are exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        Self::with_tolerance(m, HERMITIAN_TOL)
    }

    pub fn with_tolerance(mut m: CMatrix, tol: f64) -> Result<Self> {
        let dim = m.dim();
        if !dim.is_power_of_two() || !(2..=MAX_DIM).contains(&dim) {
            return Err(Error::InvalidDimension(dim));
        }
        if let Some(pos) = m.data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NotHermitian { row: pos / dim, col: pos % dim, deviation: f64::NAN });
        }
        let (dev, row, col) = m.hermitian_deviation();
        if dev > tol {
            return Err(Error::NotHermitian { row, col, deviation: dev });
        }
        for j in 0..dim {
            m[(j, j)] = Complex64::new(m[(j, j)].re, 0.0);
            for k in (j + 1)..dim {
                let avg = (m[(j, k)] + m[(k, j)].conj()) * 0.5;
                m[(j, k)] = avg;
                m[(k, j)] = avg.conj();
            }
        }
        Ok(HermitianMatrix(m))
    }

    /// `I / d`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(CMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Real part of the trace; the imaginary part is identically zero.
    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

impl Index<(usize, usize)> for HermitianMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

/// Transposes qubit `qubit` (0-based, 0 = leftmost factor) of an `n_qubits`
/// register. Implemented as a pure index permutation, so Hermiticity and the
/// trace are preserved exactly and the map is an involution.
pub fn partial_transpose(rho: &HermitianMatrix, qubit: usize) -> Result<HermitianMatrix> {
    let n = rho.n_qubits();
    if qubit >= n {
        return Err(Error::WrongQubitCount { expected: qubit + 1, found: n });
    }
    let bit = 1usize << (n - 1 - qubit);
    let dim = rho.dim();
    let mut out = CMatrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            // Swap the transposed qubit's bit between row and column.
            let (rb, cb) = (r & bit, c & bit);
            let r2 = (r & !bit) | cb;
            let c2 = (c & !bit) | rb;
            out[(r2, c2)] = rho[(r, c)];
        }
    }
    Ok(HermitianMatrix(out))
}

/// Two-qubit partial transpose on the second qubit:
/// `out[(i,l)][(k,j)] = in[(i,j)][(k,l)]`.
pub fn partial_transpose_second(rho: &HermitianMatrix) -> Result<HermitianMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    partial_transpose(rho, 1)
}
