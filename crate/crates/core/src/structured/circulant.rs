use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NormError, Result};
use crate::matrix::CMatrix;

use super::Densify;

const LA_TOL: f64 = 1e-9;

/// `exp(2 pi i k / n)`, reducing `k` mod `n` first so powers stay exact in angle.
pub fn root_of_unity(n: usize, k: usize) -> Complex64 {
    let k = k % n;
    Complex64::from_polar(1.0, TAU * k as f64 / n as f64)
}

/// `C(a_0, ..., a_{n-1}) = sum a_i S^i` with `S` the cyclic shift; row `r`
/// is row `r - 1` shifted one place to the right.
#[derive(Debug, Clone, PartialEq)]
pub struct Circulant {
    coeffs: Vec<Complex64>,
}

impl Circulant {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(NormError::Empty);
        }
        Ok(Circulant { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum |a_i|`, which is both `||C||_{1,1}` and `||C||_{inf,inf}`.
    pub fn abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).sum()
    }

    /// `sum a_i w^i` for `w = exp(2 pi i k / n)`.
    pub fn eigenvalue(&self, k: usize) -> Complex64 {
        let n = self.len();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * root_of_unity(n, k * i))
            .sum()
    }

    /// Eigenvalue `k` belongs to the eigenvector `(w^0, w^1, ..., w^{n-1})`.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        let n = self.len();
        (0..n).map(|j| root_of_unity(n, k * j)).collect()
    }

    pub fn spectrum(&self) -> Vec<Complex64> {
        (0..self.len()).map(|k| self.eigenvalue(k)).collect()
    }

    /// Reads a circulant back from a dense matrix, entries compared to
    /// `1e-12` relative to the largest modulus.
    pub fn recognize(a: &CMatrix) -> Option<Self> {
        if !a.is_square() {
            return None;
        }
        let n = a.rows();
        let tol = 1e-12 * a.max_abs();
        let first = a.row(0).to_vec();
        for r in 1..n {
            for c in 0..n {
                if (a.get(r, c) - first[(c + n - r) % n]).norm() > tol {
                    return None;
                }
            }
        }
        Some(Circulant { coeffs: first })
    }
}

impl Densify for Circulant {
    fn densify(&self) -> CMatrix {
        let n = self.len();
        let mut m = CMatrix::zeros(n, n).expect("n >= 1");
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, self.coeffs[(c + n - r) % n]);
            }
        }
        m
    }
}

/// `||C||_{2,2} = max_k |sum a_i w_k^i|`: circulants are normal, so the
/// spectral radius is the top singular value.
pub fn circulant_two_norm(c: &Circulant) -> f64 {
    spectral_radius(c).0
}

/// Spectral radius and the smallest root index attaining it.
pub fn spectral_radius(c: &Circulant) -> (f64, usize) {
    let mut best = (f64::NEG_INFINITY, 0);
    for k in 0..c.len() {
        let v = c.eigenvalue(k).norm();
        if v > best.0 {
            best = (v, k);
        }
    }
    best
}

/// Outcome of the logarithmic-affine test for a circulant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaWitness {
    pub is_la: bool,
    /// Unit phase with `a_i w^i = beta |a_i|`.
    pub beta: Option<Complex64>,
    pub omega: Option<Complex64>,
    /// `omega = exp(2 pi i k / n)`.
    pub omega_index: Option<usize>,
    /// `sum |a_i|`, the norm at every `p`, when LA.
    pub norm: Option<f64>,
    /// All coefficients zero.
    pub degenerate: bool,
}

/// Tries every `n`-th root of unity `w` for a phase `beta` with
/// `a_i w^i = beta |a_i|` for all `i`.
pub fn classify_circulant_la(c: &Circulant) -> LaWitness {
    let n = c.len();
    let coeffs = c.coeffs();
    let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let Some(i0) = coeffs.iter().position(|z| z.norm() > 0.0) else {
        return LaWitness {
            is_la: true,
            beta: Some(Complex64::new(1.0, 0.0)),
            omega: Some(Complex64::new(1.0, 0.0)),
            omega_index: Some(0),
            norm: Some(0.0),
            degenerate: true,
        };
    };
    for k in 0..n {
        let beta = coeffs[i0] * root_of_unity(n, k * i0) / coeffs[i0].norm();
        let ok = coeffs.iter().enumerate().all(|(i, a)| {
            (a * root_of_unity(n, k * i) - beta * a.norm()).norm() <= LA_TOL * scale
        });
        if ok {
            return LaWitness {
                is_la: true,
                beta: Some(beta),
                omega: Some(root_of_unity(n, k)),
                omega_index: Some(k),
                norm: Some(c.abs_sum()),
                degenerate: false,
            };
        }
    }
    LaWitness {
        is_la: false,
        beta: None,
        omega: None,
        omega_index: None,
        norm: None,
        degenerate: false,
    }
}
