//! Physicality, partial-transpose and witness verdicts, plus the closed-form
//! ε bounds.
//!
//! PPT-based and witness-based conclusions are kept in separate verdicts and
//! never merged into a single "entangled" flag.

use serde::{Deserialize, Serialize};

use crate::eigen::{eigenvalues, hermitian_eigenvalues, SpectralReport};
use crate::error::{Error, Result};
use crate::matrix::{partial_transpose, partial_transpose_second, HermitianMatrix};
use crate::mixture::{max_physical_epsilon, BoundFormula, EpsilonBounds};
use crate::pauli::{from_coefficients, PauliCoefficients, COEFF_TOL};

/// Default witness weights `w_i = 1/3`.
pub const DEFAULT_WEIGHTS: [f64; 3] = [1.0 / 3.0; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    NonPhysical,
    /// Only emitted for two qubits, where PPT is sufficient.
    PPTSeparable,
    NPTEntangled,
    /// PPT for every single-qubit cut of a register with three or more qubits.
    PPTInconclusive,
    WitnessSatisfied,
    WitnessViolated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityVerdict {
    pub kind: VerdictKind,
    pub min_pt_eigenvalue: Option<f64>,
    pub min_witness_term: Option<f64>,
    pub detail: String,
}

/// Spectrum of a state plus whether it is a valid density matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Physicality {
    pub spectrum: SpectralReport,
    pub physical: bool,
}

impl Physicality {
    /// `Some(NonPhysical)` when the state has a negative eigenvalue.
    pub fn verdict(&self) -> Option<SeparabilityVerdict> {
        (!self.physical).then(|| SeparabilityVerdict {
            kind: VerdictKind::NonPhysical,
            min_pt_eigenvalue: None,
            min_witness_term: None,
            detail: format!(
                "minimum eigenvalue {:.6e} below -{:e}",
                self.spectrum.min_eigenvalue, self.spectrum.tolerance_used
            ),
        })
    }
}

pub fn physicality_check(rho: &HermitianMatrix, tol: f64) -> Result<Physicality> {
    let trace = rho.trace();
    if (trace - 1.0).abs() > COEFF_TOL {
        return Err(Error::NotUnitTrace { trace });
    }
    let spectrum = eigenvalues(rho, tol)?;
    let physical = spectrum.min_eigenvalue >= -tol;
    Ok(Physicality { spectrum, physical })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PptOutcome {
    pub verdict: SeparabilityVerdict,
    /// Ascending spectrum of the partial transpose on qubit 2 (two qubits) or
    /// of the most negative single-qubit cut (three or more).
    pub pt_eigenvalues: Vec<f64>,
}

/// Partial-transpose test for a two-qubit state.
pub fn ppt_verdict(rho: &HermitianMatrix, tol: f64) -> Result<PptOutcome> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    require_physical(rho, tol)?;
    let pt = hermitian_eigenvalues(&partial_transpose_second(rho)?)?;
    let min = pt[0];
    let verdict = if min < -tol {
        SeparabilityVerdict {
            kind: VerdictKind::NPTEntangled,
            min_pt_eigenvalue: Some(min),
            min_witness_term: None,
            detail: format!("partial transpose has eigenvalue {min:.6e}"),
        }
    } else {
        SeparabilityVerdict {
            kind: VerdictKind::PPTSeparable,
            min_pt_eigenvalue: Some(min),
            min_witness_term: None,
            detail: "partial transpose is positive semidefinite; separable for two qubits".into(),
        }
    };
    Ok(PptOutcome { verdict, pt_eigenvalues: pt })
}

/// Partial-transpose test over every single-qubit cut. For three or more qubits a
/// positive result is only necessary for separability.
pub fn ppt_verdict_any(rho: &HermitianMatrix, tol: f64) -> Result<PptOutcome> {
    if rho.n_qubits() == 2 {
        return ppt_verdict(rho, tol);
    }
    if rho.n_qubits() < 2 {
        return Err(Error::WrongQubitCount { expected: 2, found: rho.n_qubits() });
    }
    require_physical(rho, tol)?;
    let mut worst: Option<(usize, Vec<f64>)> = None;
    for q in 0..rho.n_qubits() {
        let ev = hermitian_eigenvalues(&partial_transpose(rho, q)?)?;
        if worst.as_ref().is_none_or(|(_, w)| ev[0] < w[0]) {
            worst = Some((q, ev));
        }
    }
    let (qubit, ev) = worst.expect("at least two qubits");
    let min = ev[0];
    let (kind, detail) = if min < -tol {
        (VerdictKind::NPTEntangled, format!("transpose of qubit {} has eigenvalue {min:.6e}", qubit + 1))
    } else {
        (VerdictKind::PPTInconclusive, "every single-qubit partial transpose is positive".to_string())
    };
    Ok(PptOutcome {
        verdict: SeparabilityVerdict { kind, min_pt_eigenvalue: Some(min), min_witness_term: None, detail },
        pt_eigenvalues: ev,
    })
}

fn require_physical(rho: &HermitianMatrix, tol: f64) -> Result<()> {
    let p = physicality_check(rho, tol)?;
    if p.physical {
        Ok(())
    } else {
        Err(Error::NonPhysicalInput { min_eigenvalue: p.spectrum.min_eigenvalue })
    }
}

/// Pauli coefficients of a two-qubit state together with witness weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessInput {
    d_coeffs: PauliCoefficients,
    weights: [f64; 3],
}

impl WitnessInput {
    pub fn new(d_coeffs: PauliCoefficients, weights: [f64; 3]) -> Result<Self> {
        if d_coeffs.n_qubits() != 2 {
            return Err(Error::WrongQubitCount { expected: 2, found: d_coeffs.n_qubits() });
        }
        check_weights(&weights)?;
        Ok(WitnessInput { d_coeffs, weights })
    }

    pub fn with_default_weights(d_coeffs: PauliCoefficients) -> Result<Self> {
        Self::new(d_coeffs, DEFAULT_WEIGHTS)
    }
}

fn check_weights(weights: &[f64; 3]) -> Result<()> {
    match weights.iter().find(|&&w| !(w > 0.0 && w <= 1.0)) {
        Some(&w) => Err(Error::InvalidWeight(w)),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `terms[i-1][j-1] = w_i w_j + d_{i0} w_j + w_i d_{0j} + d_{ij}`.
    pub terms: [[f64; 3]; 3],
    pub min_term: f64,
    /// 1-based `(i, j)` of the smallest term.
    pub argmin: (usize, usize),
    pub satisfied: bool,
}

impl WitnessReport {
    pub fn term(&self, i: usize, j: usize) -> f64 {
        self.terms[i - 1][j - 1]
    }

    pub fn verdict(&self) -> SeparabilityVerdict {
        let (i, j) = self.argmin;
        SeparabilityVerdict {
            kind: if self.satisfied { VerdictKind::WitnessSatisfied } else { VerdictKind::WitnessViolated },
            min_pt_eigenvalue: None,
            min_witness_term: Some(self.min_term),
            detail: format!("smallest witness term ({i},{j}) = {:.6e}", self.min_term),
        }
    }
}

pub fn witness_terms(input: &WitnessInput) -> WitnessReport {
    let d = &input.d_coeffs;
    let w = &input.weights;
    let mut terms = [[0.0; 3]; 3];
    let mut min_term = f64::INFINITY;
    let mut argmin = (1, 1);
    for i in 1..=3 {
        for j in 1..=3 {
            let t = w[i - 1] * w[j - 1] + d.get(&[i, 0]) * w[j - 1] + w[i - 1] * d.get(&[0, j]) + d.get(&[i, j]);
            terms[i - 1][j - 1] = t;
            if t < min_term {
                min_term = t;
                argmin = (i, j);
            }
        }
    }
    WitnessReport { terms, min_term, argmin, satisfied: min_term > 0.0 }
}

/// ε below which every witness term of `(1 − ε) M_4 + ε ρ₁` stays positive.
///
/// Each term is affine in ε with intercept `w_i w_j`; only terms with a
/// negative slope constrain ε.
pub fn witness_epsilon_threshold(c: &PauliCoefficients, weights: [f64; 3]) -> Result<EpsilonBounds> {
    if c.n_qubits() != 2 {
        return Err(Error::WrongQubitCount { expected: 2, found: c.n_qubits() });
    }
    check_weights(&weights)?;
    let w = &weights;
    let mut threshold = 1.0_f64;
    for i in 1..=3 {
        for j in 1..=3 {
            let slope = c.get(&[i, 0]) * w[j - 1] + w[i - 1] * c.get(&[0, j]) + c.get(&[i, j]);
            if slope < 0.0 {
                threshold = threshold.min(w[i - 1] * w[j - 1] / -slope);
            }
        }
    }
    let lambda_min = hermitian_eigenvalues(&from_coefficients(c))?[0];
    let tag = if c.uniform_value().is_some() { BoundFormula::WitnessUniform } else { BoundFormula::WitnessGeneral };
    Ok(EpsilonBounds::new(max_physical_epsilon(lambda_min, 2), threshold, tag))
}

/// `A / (4^N − 1)`, clamped to 1.
pub fn ball_bound(n_qubits: usize, a_n: f64) -> Result<f64> {
    if a_n.is_nan() || a_n <= 0.0 {
        return Err(Error::InvalidBallParameter(a_n));
    }
    let denom = ((1u64 << (2 * n_qubits)) - 1) as f64;
    Ok((a_n / denom).min(1.0))
}

/// `a / (a + 2^(2N−1))` for `a > 1`.
pub fn continuous_basis_bound(n_qubits: usize, a: f64) -> Result<f64> {
    if a.is_nan() || a <= 1.0 {
        return Err(Error::AOutOfRange(a));
    }
    let k = (1u64 << (2 * n_qubits - 1)) as f64;
    Ok(a / (a + k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::PSD_TOL;
    use crate::matrix::CMatrix;

    fn pure_projector(amps: &[(f64, f64)]) -> HermitianMatrix {
        let v: Vec<num_complex::Complex64> = amps.iter().map(|&(r, i)| num_complex::Complex64::new(r, i)).collect();
        let n = v.len();
        let mut m = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = v[r] * v[c].conj();
            }
        }
        HermitianMatrix::new(m).unwrap()
    }

    #[test]
    fn maximally_mixed_is_physical() {
        let p = physicality_check(&HermitianMatrix::maximally_mixed(4).unwrap(), PSD_TOL).unwrap();
        assert!(p.physical);
        assert!(p.verdict().is_none());
    }

    #[test]
    fn uniform_minus_one_is_nonphysical() {
        let rho = from_coefficients(&PauliCoefficients::uniform(2, -1.0).unwrap());
        let p = physicality_check(&rho, PSD_TOL).unwrap();
        assert!(!p.physical);
        assert!((p.spectrum.min_eigenvalue - (-2.0 - 2.0 * 3f64.sqrt()) / 4.0).abs() < 1e-12);
        assert_eq!(p.verdict().unwrap().kind, VerdictKind::NonPhysical);
    }

    #[test]
    fn physicality_rejects_trace() {
        let h = HermitianMatrix::new(CMatrix::identity(2)).unwrap();
        assert!(matches!(physicality_check(&h, PSD_TOL), Err(Error::NotUnitTrace { .. })));
    }

    #[test]
    fn product_state_is_ppt() {
        let rho = pure_projector(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let out = ppt_verdict(&rho, PSD_TOL).unwrap();
        assert_eq!(out.verdict.kind, VerdictKind::PPTSeparable);
    }

    #[test]
    fn singlet_is_npt() {
        let s = 0.5f64.sqrt();
        let rho = pure_projector(&[(0.0, 0.0), (s, 0.0), (-s, 0.0), (0.0, 0.0)]);
        let out = ppt_verdict(&rho, PSD_TOL).unwrap();
        assert_eq!(out.verdict.kind, VerdictKind::NPTEntangled);
        assert!((out.verdict.min_pt_eigenvalue.unwrap() + 0.5).abs() < 1e-12);
    }

    #[test]
    fn ppt_rejects_nonphysical_and_wrong_dim() {
        let rho = from_coefficients(&PauliCoefficients::uniform(2, -1.0).unwrap());
        assert!(matches!(ppt_verdict(&rho, PSD_TOL), Err(Error::NonPhysicalInput { .. })));
        let rho = HermitianMatrix::maximally_mixed(8).unwrap();
        assert!(matches!(ppt_verdict(&rho, PSD_TOL), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn three_qubit_ppt_is_inconclusive() {
        let rho = HermitianMatrix::maximally_mixed(8).unwrap();
        let out = ppt_verdict_any(&rho, PSD_TOL).unwrap();
        assert_eq!(out.verdict.kind, VerdictKind::PPTInconclusive);
        // GHZ is NPT on every cut.
        let s = 0.5f64.sqrt();
        let mut amps = vec![(0.0, 0.0); 8];
        amps[0] = (s, 0.0);
        amps[7] = (s, 0.0);
        let out = ppt_verdict_any(&pure_projector(&amps), PSD_TOL).unwrap();
        assert_eq!(out.verdict.kind, VerdictKind::NPTEntangled);
        assert!((out.pt_eigenvalues[0] + 0.5).abs() < 1e-12);
    }

    #[test]
    fn witness_on_maximally_mixed() {
        let input = WitnessInput::with_default_weights(PauliCoefficients::identity(2).unwrap()).unwrap();
        let r = witness_terms(&input);
        for row in r.terms {
            for t in row {
                assert!((t - 1.0 / 9.0).abs() < 1e-15);
            }
        }
        assert!(r.satisfied);
        assert_eq!(r.verdict().kind, VerdictKind::WitnessSatisfied);
    }

    #[test]
    fn witness_uniform_formula() {
        for eps in [0.1, 0.4, 0.45, 0.9] {
            let d = PauliCoefficients::uniform(2, -0.15 * eps).unwrap();
            let r = witness_terms(&WitnessInput::with_default_weights(d).unwrap());
            let expected = 1.0 / 9.0 - 0.05 * eps - 0.05 * eps - 0.15 * eps;
            for row in r.terms {
                for t in row {
                    assert!((t - expected).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn witness_rejects_bad_weights() {
        let d = PauliCoefficients::identity(2).unwrap();
        assert_eq!(WitnessInput::new(d.clone(), [0.0, 0.5, 0.5]), Err(Error::InvalidWeight(0.0)));
        assert_eq!(WitnessInput::new(d, [0.5, 1.5, 0.5]), Err(Error::InvalidWeight(1.5)));
        assert!(matches!(
            WitnessInput::with_default_weights(PauliCoefficients::identity(1).unwrap()),
            Err(Error::WrongQubitCount { .. })
        ));
    }

    #[test]
    fn thresholds() {
        let b = witness_epsilon_threshold(&PauliCoefficients::identity(2).unwrap(), DEFAULT_WEIGHTS).unwrap();
        assert_eq!(b.separability_threshold, 1.0);
        let b = witness_epsilon_threshold(&PauliCoefficients::uniform(2, -0.15).unwrap(), DEFAULT_WEIGHTS).unwrap();
        assert!((b.separability_threshold - 4.0 / 9.0).abs() < 1e-12);
        assert_eq!(b.formula_tag, BoundFormula::WitnessUniform);
        assert_eq!(b.physicality_max, 1.0);
        let b = witness_epsilon_threshold(&PauliCoefficients::uniform(2, -1.0).unwrap(), DEFAULT_WEIGHTS).unwrap();
        assert!((b.separability_threshold - 1.0 / 15.0).abs() < 1e-12);
        assert!(b.physicality_max < 1.0);
    }

    #[test]
    fn ball_and_continuous() {
        assert!((ball_bound(2, 1.0).unwrap() - 1.0 / 15.0).abs() < 1e-15);
        assert!((ball_bound(3, 20.0).unwrap() - 0.317).abs() < 1e-3);
        assert_eq!(ball_bound(1, 100.0).unwrap(), 1.0);
        assert_eq!(ball_bound(2, 0.0), Err(Error::InvalidBallParameter(0.0)));
        assert!((continuous_basis_bound(2, 6.0).unwrap() - 3.0 / 7.0).abs() < 1e-15);
        assert!((continuous_basis_bound(3, 6.0).unwrap() - 6.0 / 38.0).abs() < 1e-15);
        assert!(continuous_basis_bound(2, 1e9).unwrap() > 1.0 - 1e-8);
        assert_eq!(continuous_basis_bound(2, 1.0), Err(Error::AOutOfRange(1.0)));
    }
}
