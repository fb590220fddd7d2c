//! The column and row embeddings `C(x)` and `R(x)` of a vector into a square matrix.

use crate::exponent::Exponent;
use crate::matrix::CMatrix;
use crate::vector::{vec_norm, CVector};

/// `C(x)`: `x` as the first column of an `n x n` zero matrix.
pub fn column_embed(x: &CVector) -> CMatrix {
    let n = x.len();
    let mut m = CMatrix::zeros(n, n).expect("n >= 1");
    for (i, z) in x.iter().enumerate() {
        m.set(i, 0, *z);
    }
    m
}

/// `R(x)`: `conj(x)` as the first row of an `n x n` zero matrix.
pub fn row_embed(x: &CVector) -> CMatrix {
    let n = x.len();
    let mut m = CMatrix::zeros(n, n).expect("n >= 1");
    for (j, z) in x.iter().enumerate() {
        m.set(0, j, z.conj());
    }
    m
}

/// `||C(x)||_{p,p} = ||x||_p`.
pub fn column_embed_norm(x: &CVector, p: Exponent) -> f64 {
    vec_norm(x, p)
}

/// `||R(x)||_{p,p} = ||x||_q`.
pub fn row_embed_norm(x: &CVector, p: Exponent) -> f64 {
    vec_norm(x, p.dual())
}

/// True iff all nonzero entries share one modulus (to `1e-9` relative),
/// which is exactly when `C(x)` and `R(x)` are logarithmic affine.
/// The zero vector counts as LA.
pub fn embed_is_la(x: &CVector) -> bool {
    let mods: Vec<f64> = x.iter().map(|z| z.norm()).filter(|&m| m > 0.0).collect();
    let Some(max) = mods.iter().copied().reduce(f64::max) else {
        return true;
    };
    mods.iter().all(|&m| max - m <= 1e-9 * max)
}
