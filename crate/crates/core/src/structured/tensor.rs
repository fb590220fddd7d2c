//! The rank-one block construction `B = (a_i conj(b_j) A)`.

use num_complex::Complex64;

use crate::error::{NormError, Result};
use crate::exponent::Exponent;
use crate::interval::Interval;
use crate::matrix::CMatrix;
use crate::vector::{vec_norm, CVector};

use super::blocks::scalar_multiple_of;
use super::embed::embed_is_la;
use super::Densify;

/// Block matrix whose `(i, j)` block is `alpha_i conj(beta_j) core`.
///
/// `alpha` and `beta` share a length `n`; the core is any `m x m` matrix, so
/// the dense form is `nm x nm`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorRankOne {
    pub alpha: CVector,
    pub beta: CVector,
    pub core: CMatrix,
}

impl TensorRankOne {
    pub fn new(alpha: CVector, beta: CVector, core: CMatrix) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(NormError::Dimension(format!(
                "alpha has length {}, beta has length {}",
                alpha.len(),
                beta.len()
            )));
        }
        core.require_square()?;
        Ok(TensorRankOne { alpha, beta, core })
    }

    /// Recovers a factorization from a dense matrix, trying block counts
    /// `n >= 2` in increasing order. Blocks must be multiples of a common
    /// core to `1e-10` relative, and the multipliers must form a rank-one grid.
    pub fn recognize(b: &CMatrix) -> Option<Self> {
        if !b.is_square() || b.is_zero() {
            return None;
        }
        let size = b.rows();
        (2..=size)
            .filter(|n| size.is_multiple_of(*n))
            .find_map(|n| Self::recognize_with(b, n, size / n))
    }

    fn recognize_with(b: &CMatrix, n: usize, m: usize) -> Option<Self> {
        let blocks: Vec<Vec<CMatrix>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| b.block(i * m, j * m, m, m).expect("in range"))
                    .collect()
            })
            .collect();
        let core = blocks
            .iter()
            .flatten()
            .max_by(|x, y| frob(x).total_cmp(&frob(y)))?
            .clone();
        let mut coef = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for j in 0..n {
                coef[i][j] = scalar_multiple_of(&blocks[i][j], &core)?;
            }
        }
        let (mut i0, mut j0) = (0, 0);
        for i in 0..n {
            for j in 0..n {
                if coef[i][j].norm() > coef[i0][j0].norm() {
                    (i0, j0) = (i, j);
                }
            }
        }
        let pivot = coef[i0][j0];
        let alpha: Vec<Complex64> = (0..n).map(|i| coef[i][j0]).collect();
        let beta: Vec<Complex64> = (0..n).map(|j| (coef[i0][j] / pivot).conj()).collect();
        let tol = 1e-10 * pivot.norm();
        for i in 0..n {
            for j in 0..n {
                if (coef[i][j] - alpha[i] * beta[j].conj()).norm() > tol {
                    return None;
                }
            }
        }
        Self::new(CVector::new(alpha).ok()?, CVector::new(beta).ok()?, core).ok()
    }
}

fn frob(m: &CMatrix) -> f64 {
    m.entries().iter().map(|z| z.norm_sqr()).sum()
}

impl Densify for TensorRankOne {
    fn densify(&self) -> CMatrix {
        let n = self.alpha.len();
        let m = self.core.rows();
        let mut out = CMatrix::zeros(n * m, n * m).expect("nonempty");
        for i in 0..n {
            for j in 0..n {
                let w = self.alpha[i] * self.beta[j].conj();
                for r in 0..m {
                    for c in 0..m {
                        out.set(i * m + r, j * m + c, w * self.core.get(r, c));
                    }
                }
            }
        }
        out
    }
}

/// `||B||_{p,p} = ||alpha||_p ||beta||_q ||core||_{p,p}`; an interval for the
/// core norm scales to an interval for `B`.
pub fn tensor_norm(t: &TensorRankOne, p: Exponent, core_norm: Interval) -> Interval {
    core_norm.scale(vec_norm(&t.alpha, p) * vec_norm(&t.beta, p.dual()))
}

/// `B` is LA iff `C(alpha)`, `R(beta)` and the core all are.
pub fn tensor_is_la(t: &TensorRankOne, core_is_la: bool) -> bool {
    embed_is_la(&t.alpha) && embed_is_la(&t.beta) && core_is_la
}
