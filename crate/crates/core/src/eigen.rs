//! Hermitian eigenvalues via cyclic Jacobi on the real symmetric embedding.
//!
//! `H = A + iB` is mapped to `[[A, -B], [B, A]]`, whose spectrum is the
//! spectrum of `H` with every eigenvalue doubled.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Sweep limit before reporting [`Error::NonConvergence`].
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm target, relative to `max(1, ‖M‖_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// `λ_min ≥ -PSD_TOL` counts as nonnegative.
pub const PSD_TOL: f64 = 1e-9;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymmetric {
    n: usize,
    data: Vec<f64>,
}

impl RealSymmetric {
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        RealSymmetric { n, data }
    }

    /// The `2d × 2d` real embedding of a Hermitian matrix.
    pub fn embed(h: &HermitianMatrix) -> Self {
        let d = h.dim();
        let n = 2 * d;
        let mut data = vec![0.0; n * n];
        for j in 0..d {
            for k in 0..d {
                let z = h[(j, k)];
                data[j * n + k] = z.re;
                data[(j + d) * n + (k + d)] = z.re;
                data[j * n + (k + d)] = -z.im;
                data[(j + d) * n + k] = z.im;
            }
        }
        RealSymmetric { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for r in 0..self.n {
            for c in 0..self.n {
                if r != c {
                    s += self.data[r * self.n + c].powi(2);
                }
            }
        }
        s.sqrt()
    }

    fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Eigenpairs of a real symmetric matrix. `vectors[k]` belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

impl SymmetricEigen {
    /// Cyclic Jacobi rotations until the off-diagonal norm falls below
    /// `OFF_DIAGONAL_TOL * max(1, ‖M‖_F)`. Results are sorted ascending.
    pub fn jacobi(m: &RealSymmetric) -> Result<Self> {
        let n = m.n;
        if m.data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonConvergence { sweeps: 0, off_norm: f64::NAN });
        }
        let mut a = m.data.clone();
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        let target = OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

        let mut sweeps = 0;
        loop {
            let off = RealSymmetric { n, data: a.clone() }.off_diagonal_norm();
            if off < target {
                break;
            }
            if sweeps == MAX_SWEEPS {
                return Err(Error::NonConvergence { sweeps, off_norm: off });
            }
            sweeps += 1;
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;

                    for k in 0..n {
                        let akp = a[k * n + p];
                        let akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[k * n + q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p * n + k];
                        let aqk = a[q * n + k];
                        a[p * n + k] = c * apk - s * aqk;
                        a[q * n + k] = s * apk + c * aqk;
                    }
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;

                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
        let values = order.iter().map(|&i| a[i * n + i]).collect();
        let vectors = order.iter().map(|&col| (0..n).map(|r| v[r * n + col]).collect()).collect();
        Ok(SymmetricEigen { values, vectors, sweeps })
    }

    /// Largest `‖M v − λ v‖₂` over all pairs.
    pub fn max_residual(&self, m: &RealSymmetric) -> f64 {
        let n = m.n;
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, vec)| {
                (0..n)
                    .map(|r| {
                        let mv: f64 = (0..n).map(|c| m.get(r, c) * vec[c]).sum();
                        (mv - lambda * vec[r]).powi(2)
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub trace: f64,
    pub min_eigenvalue: f64,
    pub is_psd: bool,
    pub tolerance_used: f64,
}

/// Sorted eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>> {
    let eig = SymmetricEigen::jacobi(&RealSymmetric::embed(h))?;
    // Each eigenvalue of H shows up twice; average the adjacent pair.
    Ok(eig.values.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect())
}

/// Full spectral report with the PSD verdict taken at `tol`.
pub fn eigenvalues(h: &HermitianMatrix, tol: f64) -> Result<SpectralReport> {
    if !(tol > 0.0 && tol < 1e-6) {
        return Err(Error::InvalidTolerance(tol));
    }
    let eigenvalues = hermitian_eigenvalues(h)?;
    let min_eigenvalue = eigenvalues[0];
    Ok(SpectralReport {
        trace: h.trace(),
        min_eigenvalue,
        is_psd: min_eigenvalue >= -tol,
        tolerance_used: tol,
        eigenvalues,
    })
}
