use num_complex::Complex64;

use crate::error::{NormError, Result};
use crate::matrix::CMatrix;

use super::{Circulant, Densify, UnitaryPermutation};

/// `H(a_0, ..., a_{n-1})` with `b_ij = a_k`, `k = (i + j) mod n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelMod {
    coeffs: Vec<Complex64>,
}

impl HankelMod {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(NormError::Empty);
        }
        Ok(HankelMod { coeffs })
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

    pub fn recognize(a: &CMatrix) -> Option<Self> {
        if !a.is_square() {
            return None;
        }
        let n = a.rows();
        let tol = 1e-12 * a.max_abs();
        let first = a.row(0).to_vec();
        for i in 1..n {
            for j in 0..n {
                if (a.get(i, j) - first[(i + j) % n]).norm() > tol {
                    return None;
                }
            }
        }
        Some(HankelMod { coeffs: first })
    }
}

impl Densify for HankelMod {
    fn densify(&self) -> CMatrix {
        let n = self.len();
        let mut m = CMatrix::zeros(n, n).expect("n >= 1");
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.coeffs[(i + j) % n]);
            }
        }
        m
    }
}

/// `H(a) = H(1, 0, ..., 0) C(a)`.
///
/// The permutation factor sends row `i` to column `(n - i) mod n`; for
/// `n = 3, 4` this is the reversal fixing index 0.
pub fn hankel_factor(h: &HankelMod) -> (UnitaryPermutation, Circulant) {
    let n = h.len();
    let sigma = (0..n).map(|i| (n - i) % n).collect();
    let perm = UnitaryPermutation::permutation(sigma).expect("reversal is a bijection");
    let circ = Circulant::new(h.coeffs.clone()).expect("nonempty");
    (perm, circ)
}
