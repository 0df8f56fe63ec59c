//! Physicality and separability analysis of noisy N-qubit states
//! `ρ_ε = (1 − ε) I/2^N + ε ρ₁` expressed in the Pauli basis.
//!
//! - [`matrix`]: dense complex matrices, Kronecker products, partial transpose
//! - [`eigen`]: Hermitian eigenvalues by Jacobi rotations on the real embedding
//! - [`pauli`]: Pauli-basis coefficients to matrices and back
//! - [`mixture`]: the noisy mixture, its spectrum and admissible ε
//! - [`separability`]: physicality, partial-transpose and witness verdicts, ε bounds
//! - [`product_basis`]: expansion over a fixed product-state basis
//! - [`interval`]: physicality interval of the uniform-coefficient family
//! - [`scenario`], [`scan`], [`io`]: reference scenarios, plane scans, files

pub mod eigen;
pub mod error;
pub mod interval;
pub mod io;
pub mod matrix;
pub mod mixture;
pub mod pauli;
pub mod product_basis;
pub mod scan;
pub mod scenario;
pub mod separability;

pub use eigen::{eigenvalues, SpectralReport, PSD_TOL};
pub use error::{Error, Result};
pub use matrix::{partial_transpose, partial_transpose_second, CMatrix, HermitianMatrix};
pub use mixture::{
    eigenvalue_shift, max_physical_epsilon, mix, scale_coefficients, BoundFormula, EpsilonBounds, MixtureSpec,
};
pub use pauli::{from_coefficients, pauli_string, to_coefficients, two_qubit_elements, PauliCoefficients};
pub use separability::{
    ball_bound, continuous_basis_bound, physicality_check, ppt_verdict, witness_epsilon_threshold, witness_terms,
    SeparabilityVerdict, VerdictKind, WitnessInput,
};
