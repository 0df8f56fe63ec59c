//! Physicality interval of the uniform family `c_α = c` for all `α ≠ 0`.
//!
//! The uniform state is `(I + c S)/2^N` with `S` the sum of all non-identity
//! Pauli strings, so it is PSD exactly for `−1/s_max ≤ c ≤ 1/|s_min|`.

use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::pauli::{from_coefficients, multi_index, pauli_string, PauliCoefficients, MAX_QUBITS};
use crate::separability::{ball_bound, physicality_check};

/// PSD tolerance used as the bisection predicate.
pub const BISECTION_PSD_TOL: f64 = 1e-12;
pub const BISECTION_ITERATIONS: usize = 60;
const INITIAL_STEP: f64 = 0.01;
const MAX_BRACKET: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalMethod {
    Spectral,
    Bisection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformInterval {
    pub n_qubits: usize,
    pub c_min: f64,
    pub c_max: f64,
    /// `−1/c_min`
    pub a_n: f64,
    /// `1/c_max`
    pub b_n: f64,
    pub method: IntervalMethod,
}

impl UniformInterval {
    fn from_endpoints(n_qubits: usize, c_min: f64, c_max: f64, method: IntervalMethod) -> Self {
        UniformInterval { n_qubits, c_min, c_max, a_n: -1.0 / c_min, b_n: 1.0 / c_max, method }
    }

    pub fn contains(&self, c: f64) -> bool {
        (self.c_min..=self.c_max).contains(&c)
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCountOutOfRange(n))
    }
}

/// `Σ_{α≠0} σ_α`.
pub fn non_identity_sum(n_qubits: usize) -> Result<HermitianMatrix> {
    check_qubits(n_qubits)?;
    let dim = 1usize << n_qubits;
    let mut s = CMatrix::zeros(dim);
    for flat in 1..(1usize << (2 * n_qubits)) {
        s = &s + &pauli_string(&multi_index(flat, n_qubits))?;
    }
    HermitianMatrix::new(s)
}

pub fn uniform_interval_spectral(n_qubits: usize) -> Result<UniformInterval> {
    let ev = hermitian_eigenvalues(&non_identity_sum(n_qubits)?)?;
    let (s_min, s_max) = (ev[0], ev[ev.len() - 1]);
    Ok(UniformInterval::from_endpoints(n_qubits, -1.0 / s_max, 1.0 / s_min.abs(), IntervalMethod::Spectral))
}

fn is_physical(n_qubits: usize, c: f64) -> Result<bool> {
    let rho = from_coefficients(&PauliCoefficients::uniform(n_qubits, c)?);
    Ok(physicality_check(&rho, BISECTION_PSD_TOL)?.physical)
}

/// Boundary along `direction` (±1): doubles the probe until the state stops
/// being PSD, then bisects. Returns the last PSD point.
fn bisect_direction(n_qubits: usize, direction: f64, tol: f64) -> Result<f64> {
    let mut inside = 0.0;
    let mut probe = INITIAL_STEP;
    while is_physical(n_qubits, direction * probe)? {
        inside = probe;
        probe *= 2.0;
        if probe > MAX_BRACKET {
            return Err(Error::NonConvergence { sweeps: 0, off_norm: probe });
        }
    }
    let mut outside = probe;
    for _ in 0..BISECTION_ITERATIONS {
        if outside - inside <= tol {
            break;
        }
        let mid = 0.5 * (inside + outside);
        if is_physical(n_qubits, direction * mid)? {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    if outside - inside > tol {
        return Err(Error::NonConvergence { sweeps: BISECTION_ITERATIONS, off_norm: outside - inside });
    }
    Ok(direction * inside)
}

/// Same interval found by bisection with the physicality check as predicate.
pub fn uniform_interval_bisection(n_qubits: usize, tol: f64) -> Result<UniformInterval> {
    check_qubits(n_qubits)?;
    if tol.is_nan() || tol < 1e-10 {
        return Err(Error::InvalidTolerance(tol));
    }
    let c_min = bisect_direction(n_qubits, -1.0, tol)?;
    let c_max = bisect_direction(n_qubits, 1.0, tol)?;
    Ok(UniformInterval::from_endpoints(n_qubits, c_min, c_max, IntervalMethod::Bisection))
}

/// Rounded `(A_N, B_N)` figures quoted in the literature for N = 2, 3.
pub fn published_an_bn(n_qubits: usize) -> Option<(f64, f64)> {
    match n_qubits {
        2 => Some((6.67, 3.03)),
        3 => Some((20.00, 6.67)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnBnRow {
    pub n_qubits: usize,
    pub c_min: f64,
    pub c_max: f64,
    pub a_n: f64,
    pub b_n: f64,
    pub published_a_n: Option<f64>,
    pub published_b_n: Option<f64>,
    /// `A_N / (4^N − 1)`
    pub ball_bound: f64,
    /// `A_N / 4^N`, the alternative reading of the denominator.
    pub ball_bound_pow4: f64,
}

pub const AN_BN_CSV_HEADER: &str =
    "n_qubits,c_min,c_max,a_n,b_n,published_a_n,published_b_n,ball_bound,ball_bound_pow4";

impl AnBnRow {
    pub fn csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n_qubits,
            self.c_min,
            self.c_max,
            self.a_n,
            self.b_n,
            opt(self.published_a_n),
            opt(self.published_b_n),
            self.ball_bound,
            self.ball_bound_pow4
        )
    }
}

pub fn an_bn_table(max_n: usize) -> Result<Vec<AnBnRow>> {
    check_qubits(max_n)?;
    (1..=max_n)
        .map(|n| {
            let iv = uniform_interval_spectral(n)?;
            let published = published_an_bn(n);
            Ok(AnBnRow {
                n_qubits: n,
                c_min: iv.c_min,
                c_max: iv.c_max,
                a_n: iv.a_n,
                b_n: iv.b_n,
                published_a_n: published.map(|p| p.0),
                published_b_n: published.map(|p| p.1),
                ball_bound: ball_bound(n, iv.a_n)?,
                ball_bound_pow4: (iv.a_n / (1u64 << (2 * n)) as f64).min(1.0),
            })
        })
        .collect()
}
