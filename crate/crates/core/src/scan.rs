//! `(c, ε)` plane scan over uniform two-qubit states.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::PSD_TOL;
use crate::error::{Error, Result};
use crate::mixture::{mix, scale_coefficients, MixtureSpec};
use crate::pauli::{from_coefficients, PauliCoefficients};
use crate::separability::{physicality_check, ppt_verdict, witness_terms, WitnessInput};

pub const MAX_GRID_POINTS: usize = 1_000_000;

pub const CSV_HEADER: &str = "c,epsilon,physical,min_eigenvalue,ppt_min_eigenvalue,witness_min_term";

/// Inclusive arithmetic grid written `start:stop:step`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl RangeSpec {
    pub fn single(x: f64) -> Self {
        RangeSpec { start: x, stop: x, step: 1.0 }
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Values `start + k·step`; computed from `k` to avoid accumulated drift.
    pub fn values(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.start + k as f64 * self.step).collect()
    }
}

impl FromStr for RangeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let parts: Vec<f64> =
            s.split(':').map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_>>()?;
        let spec = match parts[..] {
            [x] => RangeSpec::single(x),
            [start, stop, step] => RangeSpec { start, stop, step },
            _ => return Err(bad()),
        };
        let finite = spec.start.is_finite() && spec.stop.is_finite() && spec.step.is_finite();
        if !finite || spec.step <= 0.0 || spec.stop < spec.start {
            return Err(bad());
        }
        // Guard the usize conversion in len().
        if (spec.stop - spec.start) / spec.step > 1e12 {
            return Err(Error::GridTooLarge { points: usize::MAX, limit: MAX_GRID_POINTS });
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub c: f64,
    pub epsilon: f64,
    pub physical: bool,
    pub min_eigenvalue: f64,
    /// Present only for physical states.
    pub ppt_min_eigenvalue: Option<f64>,
    pub witness_min_term: Option<f64>,
}

impl ScanPoint {
    pub fn csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.c,
            self.epsilon,
            self.physical,
            self.min_eigenvalue,
            opt(self.ppt_min_eigenvalue),
            opt(self.witness_min_term)
        )
    }
}

/// Classifies one grid point: uniform `ρ₁` with coefficient `c`, mixed at `ε`.
pub fn scan_point(c: f64, epsilon: f64) -> Result<ScanPoint> {
    let coeffs = PauliCoefficients::uniform(2, c)?;
    let rho = mix(&MixtureSpec::new(from_coefficients(&coeffs), epsilon)?);
    let phys = physicality_check(&rho, PSD_TOL)?;
    let ppt_min_eigenvalue = if phys.physical { ppt_verdict(&rho, PSD_TOL)?.verdict.min_pt_eigenvalue } else { None };
    let d = scale_coefficients(&coeffs, epsilon)?;
    let witness = witness_terms(&WitnessInput::with_default_weights(d)?);
    Ok(ScanPoint {
        c,
        epsilon,
        physical: phys.physical,
        min_eigenvalue: phys.spectrum.min_eigenvalue,
        ppt_min_eigenvalue,
        witness_min_term: Some(witness.min_term),
    })
}

/// Row-major over `c` then `ε`. Points are evaluated in parallel; the output
/// order does not depend on scheduling.
pub fn scan_plane(n_qubits: usize, c_grid: &[f64], eps_grid: &[f64]) -> Result<Vec<ScanPoint>> {
    if n_qubits != 2 {
        return Err(Error::WrongQubitCount { expected: 2, found: n_qubits });
    }
    let points = c_grid.len().saturating_mul(eps_grid.len());
    if points > MAX_GRID_POINTS {
        return Err(Error::GridTooLarge { points, limit: MAX_GRID_POINTS });
    }
    (0..points).into_par_iter().map(|k| scan_point(c_grid[k / eps_grid.len()], eps_grid[k % eps_grid.len()])).collect()
}

pub fn to_csv(points: &[ScanPoint]) -> String {
    let mut out = String::with_capacity(64 * (points.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for p in points {
        writeln!(out, "{}", p.csv_line()).expect("writing to String");
    }
    out
}
