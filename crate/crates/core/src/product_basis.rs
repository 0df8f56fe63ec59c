//! Expansion of a two-qubit Hermitian matrix over the sixteen products
//! `ρ_a ⊗ ρ_b` of four fixed single-qubit states:
//!
//! ```text
//! ρ_1 = I/2   ρ_2 = (I + σ_y)/2   ρ_3 = (I + σ_x)/2   ρ_4 = |0⟩⟨0|
//! ```
//!
//! A decomposition with nonnegative weights is an explicit separable
//! decomposition of the state.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::pauli::pauli_traces;

/// Weights at or above this count as nonnegative for the certificate.
pub const CERTIFICATE_TOL: f64 = 1e-9;

const PIVOT_TOL: f64 = 1e-13;

/// The four single-qubit basis states, in order.
pub fn single_qubit_basis() -> [CMatrix; 4] {
    let h = |re: f64, im: f64| Complex64::new(re, im);
    [
        CMatrix::from_row_major(2, vec![h(0.5, 0.0), h(0.0, 0.0), h(0.0, 0.0), h(0.5, 0.0)]),
        CMatrix::from_row_major(2, vec![h(0.5, 0.0), h(0.0, -0.5), h(0.0, 0.5), h(0.5, 0.0)]),
        CMatrix::from_row_major(2, vec![h(0.5, 0.0), h(0.5, 0.0), h(0.5, 0.0), h(0.5, 0.0)]),
        CMatrix::from_row_major(2, vec![h(1.0, 0.0), h(0.0, 0.0), h(0.0, 0.0), h(0.0, 0.0)]),
    ]
}

/// `ρ_a ⊗ ρ_b` in order `4·(a−1) + (b−1)`.
pub fn product_basis() -> Vec<CMatrix> {
    let single = single_qubit_basis();
    let mut out = Vec::with_capacity(16);
    for a in &single {
        for b in &single {
            out.push(a.kron(b));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductDecomposition {
    /// Weight of `ρ_a ⊗ ρ_b` at index `4·(a−1) + (b−1)`.
    pub coefficients: Vec<f64>,
    /// Largest entrywise error of the reconstruction.
    pub residual: f64,
    /// All weights nonnegative: the expansion is a convex combination of
    /// product states (given unit trace).
    pub is_certificate: bool,
}

impl ProductDecomposition {
    /// Weight of `ρ_a ⊗ ρ_b`, 1-based.
    pub fn weight(&self, a: usize, b: usize) -> f64 {
        self.coefficients[4 * (a - 1) + (b - 1)]
    }

    pub fn rebuild(&self) -> CMatrix {
        product_basis().iter().zip(&self.coefficients).fold(CMatrix::zeros(4), |acc, (m, &x)| &acc + &m.scale_real(x))
    }
}

pub fn product_basis_decompose(rho: &HermitianMatrix) -> Result<ProductDecomposition> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let basis = product_basis();
    // Row α of the system is tr(σ_α ·): real for Hermitian arguments.
    let columns: Vec<Vec<f64>> =
        basis.iter().map(|m| pauli_traces(m).map(|t| t.iter().map(|z| z.re).collect())).collect::<Result<_>>()?;
    let system: Vec<Vec<f64>> = (0..16).map(|row| columns.iter().map(|col| col[row]).collect()).collect();
    let rhs: Vec<f64> = pauli_traces(rho.as_matrix())?.iter().map(|z| z.re).collect();

    let coefficients = solve_linear(system, rhs)?;
    let mut out = ProductDecomposition { coefficients, residual: 0.0, is_certificate: false };
    out.residual = out.rebuild().max_abs_diff(rho.as_matrix());
    out.is_certificate = out.coefficients.iter().all(|&x| x >= -CERTIFICATE_TOL);
    Ok(out)
}

/// Gaussian elimination with partial pivoting.
pub fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|r| r.len() == n), "system must be square");
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).expect("non-empty range");
        if a[pivot][col].abs() < PIVOT_TOL {
            return Err(Error::SingularSystem(col));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let (done, rest) = a.split_at_mut(col + 1);
        let pivot_row = &done[col];
        for (offset, row) in rest.iter_mut().enumerate() {
            let f = row[col] / pivot_row[col];
            if f == 0.0 {
                continue;
            }
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            b[col + 1 + offset] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = ((row + 1)..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_states_are_unit_trace_and_positive() {
        for m in single_qubit_basis() {
            assert_eq!(m.trace().re, 1.0);
            HermitianMatrix::new(m).unwrap();
        }
    }

    #[test]
    fn maximally_mixed_reconstructs() {
        let d = product_basis_decompose(&HermitianMatrix::maximally_mixed(4).unwrap()).unwrap();
        assert!(d.residual <= 1e-10);
        assert!((d.weight(1, 1) - 1.0).abs() < 1e-12);
        assert!(d.is_certificate);
    }

    #[test]
    fn basis_element_recovers_indicator() {
        let single = single_qubit_basis();
        let rho = HermitianMatrix::new(single[0].kron(&single[3])).unwrap();
        let d = product_basis_decompose(&rho).unwrap();
        for (k, &x) in d.coefficients.iter().enumerate() {
            let want = if k == 3 { 1.0 } else { 0.0 };
            assert!((x - want).abs() < 1e-12, "index {k}: {x}");
        }
    }

    #[test]
    fn solver_detects_singular() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert_eq!(solve_linear(a, vec![1.0, 2.0]), Err(Error::SingularSystem(1)));
    }

    #[test]
    fn solver_small_system() {
        let a = vec![vec![0.0, 2.0, 1.0], vec![1.0, 1.0, 0.0], vec![3.0, 0.0, 1.0]];
        let x = solve_linear(a, vec![7.0, 3.0, 6.0]).unwrap();
        for (got, want) in x.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_three_qubits() {
        let rho = HermitianMatrix::maximally_mixed(8).unwrap();
        assert!(matches!(product_basis_decompose(&rho), Err(Error::DimensionMismatch { .. })));
    }
}
