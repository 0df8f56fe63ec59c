//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use noisy_sep::{CMatrix, HermitianMatrix, PauliCoefficients};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Entries uniform in the unit square, Hermitian by construction.
pub fn random_hermitian(rng: &mut StdRng, dim: usize) -> HermitianMatrix {
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        m[(r, r)] = c(rng.gen_range(-1.0..1.0), 0.0);
        for k in (r + 1)..dim {
            let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(r, k)] = z;
            m[(k, r)] = z.conj();
        }
    }
    HermitianMatrix::new(m).unwrap()
}

/// Hermitian with trace exactly 1 (not necessarily PSD).
pub fn random_unit_trace(rng: &mut StdRng, dim: usize) -> HermitianMatrix {
    let mut m = random_hermitian(rng, dim).into_matrix();
    let shift = (1.0 - m.trace().re) / dim as f64;
    for r in 0..dim {
        m[(r, r)] += c(shift, 0.0);
    }
    HermitianMatrix::new(m).unwrap()
}

pub fn random_coefficients(rng: &mut StdRng, n: usize, scale: f64) -> PauliCoefficients {
    let mut v: Vec<f64> = (0..1usize << (2 * n)).map(|_| rng.gen_range(-scale..scale)).collect();
    v[0] = 1.0;
    PauliCoefficients::new(n, v).unwrap()
}

/// Random density matrix `G G† / tr(G G†)`.
pub fn random_state(rng: &mut StdRng, dim: usize) -> HermitianMatrix {
    let mut g = CMatrix::zeros(dim);
    for r in 0..dim {
        for k in 0..dim {
            g[(r, k)] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    let p = g.matmul(&g.adjoint()).unwrap();
    let t = p.trace().re;
    HermitianMatrix::new(p.scale_real(1.0 / t)).unwrap()
}

/// One entry of a single-qubit Pauli matrix, written out by hand.
fn sigma_entry(alpha: usize, r: usize, k: usize) -> Complex64 {
    match (alpha, r, k) {
        (0, 0, 0) | (0, 1, 1) => c(1.0, 0.0),
        (1, 0, 1) | (1, 1, 0) => c(1.0, 0.0),
        (2, 0, 1) => c(0.0, -1.0),
        (2, 1, 0) => c(0.0, 1.0),
        (3, 0, 0) => c(1.0, 0.0),
        (3, 1, 1) => c(-1.0, 0.0),
        _ => c(0.0, 0.0),
    }
}

/// `2^{-N} Σ_α c_α σ_α` entry by entry. Qubit 1 is the most significant bit
/// of the row and column index; `α` runs over base-4 digits in the same order.
pub fn naive_from_coefficients(coeffs: &[f64], n: usize) -> CMatrix {
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim);
    for (flat, &w) in coeffs.iter().enumerate() {
        for r in 0..dim {
            for k in 0..dim {
                let mut z = c(w, 0.0);
                for q in 0..n {
                    let alpha = (flat >> (2 * (n - 1 - q))) & 3;
                    let shift = n - 1 - q;
                    z *= sigma_entry(alpha, (r >> shift) & 1, (k >> shift) & 1);
                }
                m[(r, k)] += z;
            }
        }
    }
    m.scale_real(1.0 / dim as f64)
}

/// `ρ^{T_B}` of a two-qubit matrix, straight from `⟨i j|ρ|k l⟩ → ⟨i l|ρ|k j⟩`.
pub fn naive_pt_second(m: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = m[(2 * i + l, 2 * k + j)];
                }
            }
        }
    }
    out
}

pub fn permutation_conjugate(m: &HermitianMatrix, perm: &[usize]) -> HermitianMatrix {
    let dim = m.dim();
    let mut out = CMatrix::zeros(dim);
    for r in 0..dim {
        for k in 0..dim {
            out[(perm[r], perm[k])] = m[(r, k)];
        }
    }
    HermitianMatrix::new(out).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
