//! Noisy mixtures `ρ_ε = (1 − ε) I/d + ε ρ₁`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::pauli::{PauliCoefficients, COEFF_TOL};

/// A mixture of the maximally mixed state with `rho1`.
///
/// `rho1` must have unit trace but need not be positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureSpec {
    rho1: HermitianMatrix,
    epsilon: f64,
}

impl MixtureSpec {
    pub fn new(rho1: HermitianMatrix, epsilon: f64) -> Result<Self> {
        check_epsilon(epsilon)?;
        let trace = rho1.trace();
        if (trace - 1.0).abs() > COEFF_TOL {
            return Err(Error::NotUnitTrace { trace });
        }
        Ok(MixtureSpec { rho1, epsilon })
    }

    pub fn rho1(&self) -> &HermitianMatrix {
        &self.rho1
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if (0.0..=1.0).contains(&epsilon) {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(epsilon))
    }
}

/// Which formula produced the separability threshold in an [`EpsilonBounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundFormula {
    WitnessUniform,
    WitnessGeneral,
    BallBound,
    ContinuousBasis,
    SpectralShift,
}

/// Admissible ε range for a given `ρ₁`.
///
/// `physicality_max` always comes from the spectral shift law;
/// `formula_tag` records where `separability_threshold` came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EpsilonBounds {
    pub physicality_max: f64,
    pub separability_threshold: f64,
    pub formula_tag: BoundFormula,
}

impl EpsilonBounds {
    pub fn new(physicality_max: f64, separability_threshold: f64, formula_tag: BoundFormula) -> Self {
        EpsilonBounds {
            physicality_max: physicality_max.clamp(0.0, 1.0),
            separability_threshold: separability_threshold.clamp(0.0, 1.0),
            formula_tag,
        }
    }
}

/// `(1 − ε)/2^N` added to the diagonal of `ε ρ₁`.
pub fn mix(spec: &MixtureSpec) -> HermitianMatrix {
    let eps = spec.epsilon;
    let dim = spec.rho1.dim();
    let mut m = spec.rho1.as_matrix().scale_real(eps);
    let shift = (1.0 - eps) / dim as f64;
    for i in 0..dim {
        m[(i, i)] += Complex64::new(shift, 0.0);
    }
    HermitianMatrix::new(m).expect("mixture of Hermitian matrices is Hermitian")
}

/// Pauli coefficients of the mixture: `d_α = ε c_α` for `α ≠ 0`, `d_0 = 1`.
pub fn scale_coefficients(c: &PauliCoefficients, epsilon: f64) -> Result<PauliCoefficients> {
    check_epsilon(epsilon)?;
    Ok(c.scaled(epsilon))
}

/// Eigenvalues of the mixture from those of `ρ₁`: `(1 − ε)/2^N + ε λ`.
/// Exact because the identity commutes with `ρ₁`.
pub fn eigenvalue_shift(ev_rho1: &[f64], epsilon: f64, n_qubits: usize) -> Vec<f64> {
    let base = (1.0 - epsilon) / (1u64 << n_qubits) as f64;
    ev_rho1.iter().map(|l| base + epsilon * l).collect()
}

/// Largest ε keeping the mixture PSD given `λ_min(ρ₁)`.
pub fn max_physical_epsilon(ev_rho1_min: f64, n_qubits: usize) -> f64 {
    if ev_rho1_min >= 0.0 {
        1.0
    } else {
        let d = (1u64 << n_qubits) as f64;
        1.0 / (1.0 + d * ev_rho1_min.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::from_coefficients;

    #[test]
    fn epsilon_zero_is_maximally_mixed() {
        let rho1 = from_coefficients(&PauliCoefficients::uniform(2, -0.15).unwrap());
        let m = mix(&MixtureSpec::new(rho1, 0.0).unwrap());
        assert_eq!(m, HermitianMatrix::maximally_mixed(4).unwrap());
    }

    #[test]
    fn epsilon_one_is_rho1() {
        let rho1 = from_coefficients(&PauliCoefficients::uniform(2, 0.2).unwrap());
        let m = mix(&MixtureSpec::new(rho1.clone(), 1.0).unwrap());
        assert!(m.max_abs_diff(&rho1) < 1e-16);
    }

    #[test]
    fn mixture_corner_entries() {
        let rho1 = from_coefficients(&PauliCoefficients::uniform(2, -0.15).unwrap());
        let m = mix(&MixtureSpec::new(rho1, 0.40).unwrap());
        assert!((m[(0, 0)].re - 0.2050).abs() < 1e-12);
        assert!((m[(0, 1)] - Complex64::new(-0.03, 0.03)).norm() < 1e-12);

        let rho1 = from_coefficients(&PauliCoefficients::uniform(2, -666.66).unwrap());
        let m = mix(&MixtureSpec::new(rho1, 0.0002).unwrap());
        // 0.24995 - 0.0002 * 499.745 = 0.150001, printed as 0.15.
        assert!((m[(0, 0)].re - 0.150001).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        let rho1 = HermitianMatrix::maximally_mixed(4).unwrap();
        assert_eq!(MixtureSpec::new(rho1.clone(), 1.5), Err(Error::EpsilonOutOfRange(1.5)));
        assert_eq!(MixtureSpec::new(rho1, -0.1), Err(Error::EpsilonOutOfRange(-0.1)));
        let not_unit = HermitianMatrix::maximally_mixed(4).unwrap().into_matrix().scale_real(2.0);
        let not_unit = HermitianMatrix::new(not_unit).unwrap();
        assert!(matches!(MixtureSpec::new(not_unit, 0.5), Err(Error::NotUnitTrace { .. })));
    }

    #[test]
    fn scale_examples() {
        let c = PauliCoefficients::uniform(2, -0.15).unwrap();
        assert_eq!(scale_coefficients(&c, 1.0).unwrap(), c);
        let d = scale_coefficients(&c, 0.40).unwrap();
        assert!((d.uniform_value().unwrap() + 0.06).abs() < 1e-15);
        let d = scale_coefficients(&PauliCoefficients::uniform(2, -666.66).unwrap(), 0.0002).unwrap();
        assert!((d.uniform_value().unwrap() + 0.133332).abs() < 1e-12);
        assert_eq!(d.as_slice()[0], 1.0);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(eigenvalue_shift(&[-3.0, 7.0], 0.0, 2), vec![0.25, 0.25]);
        let shifted = eigenvalue_shift(&[-1077.089496], 0.0002, 2);
        assert!((shifted[0] - 0.034532).abs() < 1e-6);
    }

    #[test]
    fn max_epsilon_examples() {
        assert_eq!(max_physical_epsilon(0.0, 2), 1.0);
        assert_eq!(max_physical_epsilon(0.3, 3), 1.0);
        let e = max_physical_epsilon(-1077.089496, 2);
        assert!((e - 1.0 / (1.0 + 4.0 * 1077.089496)).abs() < 1e-15);
        assert!((e - 0.000232).abs() < 1e-6);
        assert!(0.0002 < e);
        let e1 = max_physical_epsilon((1.0 - 3f64.sqrt()) / 2.0, 1);
        assert!((e1 - 0.5774).abs() < 1e-4);
    }

    #[test]
    fn bounds_clamp() {
        let b = EpsilonBounds::new(1.7, -0.2, BoundFormula::BallBound);
        assert_eq!((b.physicality_max, b.separability_threshold), (1.0, 0.0));
    }
}
