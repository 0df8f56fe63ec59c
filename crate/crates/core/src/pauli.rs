//! Pauli-basis expansion `ρ = 2^-N Σ_α c_α σ_α1 ⊗ … ⊗ σ_αN`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};

pub const MAX_QUBITS: usize = 5;

/// Tolerance on `tr ρ = 1` and on imaginary parts of extracted coefficients.
pub const COEFF_TOL: f64 = 1e-9;

/// Single-qubit Pauli matrix: 0 = I, 1 = X, 2 = Y, 3 = Z.
pub fn sigma(alpha: usize) -> Result<CMatrix> {
    let (o, z, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
    let data = match alpha {
        0 => vec![o, z, z, o],
        1 => vec![z, o, o, z],
        2 => vec![z, -i, i, z],
        3 => vec![o, z, z, -o],
        other => return Err(Error::IndexOutOfRange(other)),
    };
    Ok(CMatrix::from_row_major(2, data))
}

/// `σ_α1 ⊗ … ⊗ σ_αN`, qubit 1 leftmost.
pub fn pauli_string(indices: &[usize]) -> Result<CMatrix> {
    if indices.is_empty() || indices.len() > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange(indices.len()));
    }
    let mut out = sigma(indices[0])?;
    for &a in &indices[1..] {
        out = out.kron(&sigma(a)?);
    }
    Ok(out)
}

/// Flat lexicographic index into a coefficient tensor; qubit 1 is the most
/// significant base-4 digit.
pub fn flat_index(indices: &[usize]) -> usize {
    indices.iter().fold(0, |acc, &a| acc * 4 + a)
}

/// Inverse of [`flat_index`].
pub fn multi_index(flat: usize, n_qubits: usize) -> Vec<usize> {
    let mut out = vec![0; n_qubits];
    let mut rest = flat;
    for slot in out.iter_mut().rev() {
        *slot = rest % 4;
        rest /= 4;
    }
    out
}

/// Real coefficient tensor with `c_{0…0} = 1`. Magnitudes are not restricted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCoefficients", into = "RawCoefficients")]
pub struct PauliCoefficients {
    n_qubits: usize,
    coeffs: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawCoefficients {
    n_qubits: usize,
    coeffs: Vec<f64>,
}

impl TryFrom<RawCoefficients> for PauliCoefficients {
    type Error = Error;

    fn try_from(raw: RawCoefficients) -> Result<Self> {
        PauliCoefficients::new(raw.n_qubits, raw.coeffs)
    }
}

impl From<PauliCoefficients> for RawCoefficients {
    fn from(c: PauliCoefficients) -> Self {
        RawCoefficients { n_qubits: c.n_qubits, coeffs: c.coeffs }
    }
}

impl PauliCoefficients {
    /// Validates length `4^N`, finiteness and `coeffs[0] == 1`.
    pub fn new(n_qubits: usize, coeffs: Vec<f64>) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&n_qubits) {
            return Err(Error::QubitCountOutOfRange(n_qubits));
        }
        let len = 1usize << (2 * n_qubits);
        if coeffs.len() != len {
            return Err(Error::InvalidCoefficients(format!(
                "expected {len} coefficients for {n_qubits} qubits, got {}",
                coeffs.len()
            )));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidCoefficients(format!("coefficient {i} is not finite")));
        }
        if coeffs[0] != 1.0 {
            return Err(Error::InvalidCoefficients(format!("normalization requires c_0..0 = 1, got {}", coeffs[0])));
        }
        Ok(PauliCoefficients { n_qubits, coeffs })
    }

    /// All coefficients except `c_{0…0}` equal to `c`.
    pub fn uniform(n_qubits: usize, c: f64) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&n_qubits) {
            return Err(Error::QubitCountOutOfRange(n_qubits));
        }
        let mut coeffs = vec![c; 1 << (2 * n_qubits)];
        coeffs[0] = 1.0;
        Self::new(n_qubits, coeffs)
    }

    /// Maximally mixed state: every non-identity coefficient zero.
    pub fn identity(n_qubits: usize) -> Result<Self> {
        Self::uniform(n_qubits, 0.0)
    }

    /// Two-qubit tensor from the 15 non-identity coefficients in the order
    /// `c01, c02, c03, c10, c11, …, c33`.
    pub fn two_qubit(non_identity: [f64; 15]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(16);
        coeffs.push(1.0);
        coeffs.extend_from_slice(&non_identity);
        Self::new(2, coeffs)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn get(&self, indices: &[usize]) -> f64 {
        assert_eq!(indices.len(), self.n_qubits, "wrong number of indices");
        self.coeffs[flat_index(indices)]
    }

    /// Largest absolute difference between corresponding coefficients.
    pub fn max_abs_diff(&self, other: &PauliCoefficients) -> f64 {
        assert_eq!(self.n_qubits, other.n_qubits, "qubit count mismatch");
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Returns `Some(c)` if every non-identity coefficient equals `c`.
    pub fn uniform_value(&self) -> Option<f64> {
        let first = self.coeffs[1];
        self.coeffs[1..].iter().all(|&c| c == first).then_some(first)
    }

    /// Copy with every non-identity coefficient multiplied by `factor`.
    pub(crate) fn scaled(&self, factor: f64) -> Self {
        let mut coeffs: Vec<f64> = self.coeffs.iter().map(|c| c * factor).collect();
        coeffs[0] = 1.0;
        PauliCoefficients { n_qubits: self.n_qubits, coeffs }
    }
}

/// Builds `ρ = 2^-N Σ_α c_α σ_α`. Trace is one and the result is Hermitian;
/// positivity is not implied.
pub fn from_coefficients(c: &PauliCoefficients) -> HermitianMatrix {
    let n = c.n_qubits();
    let dim = 1usize << n;
    let mut acc = CMatrix::zeros(dim);
    for (flat, &coef) in c.as_slice().iter().enumerate() {
        if coef == 0.0 {
            continue;
        }
        let p = pauli_string(&multi_index(flat, n)).expect("valid qubit count");
        acc = &acc + &p.scale_real(coef);
    }
    HermitianMatrix::new(acc.scale_real(1.0 / dim as f64)).expect("Pauli sums are Hermitian")
}

/// Inverts [`from_coefficients`] through `c_α = tr(ρ σ_α)`.
pub fn to_coefficients(rho: &HermitianMatrix) -> Result<PauliCoefficients> {
    let trace = rho.trace();
    if (trace - 1.0).abs() > COEFF_TOL {
        return Err(Error::NotUnitTrace { trace });
    }
    let mut coeffs = Vec::with_capacity(1 << (2 * rho.n_qubits()));
    for (flat, t) in pauli_traces(rho.as_matrix())?.into_iter().enumerate() {
        if t.im.abs() > COEFF_TOL {
            return Err(Error::NonHermitianResidual { index: flat, imag: t.im });
        }
        coeffs.push(t.re);
    }
    coeffs[0] = 1.0;
    PauliCoefficients::new(rho.n_qubits(), coeffs)
}

/// `tr(m σ_α)` for every Pauli string, in flat index order. No normalization
/// is assumed.
pub fn pauli_traces(m: &CMatrix) -> Result<Vec<Complex64>> {
    let dim = m.dim();
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::InvalidDimension(dim));
    }
    let n = dim.trailing_zeros() as usize;
    (0..1usize << (2 * n))
        .map(|flat| {
            let p = pauli_string(&multi_index(flat, n))?;
            let mut t = Complex64::new(0.0, 0.0);
            for r in 0..dim {
                for col in 0..dim {
                    t += m[(r, col)] * p[(col, r)];
                }
            }
            Ok(t)
        })
        .collect()
}

/// Two-qubit matrix built entry by entry from closed-form expressions in the
/// sixteen coefficients. Serves as an independent check on
/// [`from_coefficients`].
pub fn two_qubit_elements(c: &PauliCoefficients) -> Result<HermitianMatrix> {
    if c.n_qubits() != 2 {
        return Err(Error::WrongQubitCount { expected: 2, found: c.n_qubits() });
    }
    let k = |a: usize, b: usize| c.get(&[a, b]);
    let z = |re: f64, im: f64| Complex64::new(re / 4.0, im / 4.0);
    let rows = [
        [
            z(1.0 + k(0, 3) + k(3, 0) + k(3, 3), 0.0),
            z(k(0, 1) + k(3, 1), -k(0, 2) - k(3, 2)),
            z(k(1, 0) + k(1, 3), -k(2, 0) - k(2, 3)),
            z(k(1, 1) - k(2, 2), -k(1, 2) - k(2, 1)),
        ],
        [
            z(k(0, 1) + k(3, 1), k(0, 2) + k(3, 2)),
            z(1.0 - k(0, 3) + k(3, 0) - k(3, 3), 0.0),
            z(k(1, 1) + k(2, 2), k(1, 2) - k(2, 1)),
            z(k(1, 0) - k(1, 3), -k(2, 0) + k(2, 3)),
        ],
        [
            z(k(1, 0) + k(1, 3), k(2, 0) + k(2, 3)),
            z(k(1, 1) + k(2, 2), -k(1, 2) + k(2, 1)),
            z(1.0 + k(0, 3) - k(3, 0) - k(3, 3), 0.0),
            z(k(0, 1) - k(3, 1), -k(0, 2) + k(3, 2)),
        ],
        [
            z(k(1, 1) - k(2, 2), k(1, 2) + k(2, 1)),
            z(k(1, 0) - k(1, 3), k(2, 0) - k(2, 3)),
            z(k(0, 1) - k(3, 1), k(0, 2) - k(3, 2)),
            z(1.0 - k(0, 3) - k(3, 0) + k(3, 3), 0.0),
        ],
    ];
    let rows: Vec<Vec<Complex64>> = rows.iter().map(|r| r.to_vec()).collect();
    HermitianMatrix::new(CMatrix::from_rows(&rows)?)
}
