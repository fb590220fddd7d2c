//! Structured families with exact or transferable norms.

mod blocks;
mod circulant;
mod embed;
mod hankel;
mod permutation;
mod tensor;

pub use blocks::{
    block_column_bound, block_diagonal_split, block_grid_bound, block_matrix, block_row_bound,
    blocks_share_maximizer, direct_sum, direct_sum_norm, pad_embed, BlockBound,
};
pub use circulant::{
    circulant_two_norm, classify_circulant_la, root_of_unity, spectral_radius, Circulant, LaWitness,
};
pub use embed::{column_embed, column_embed_norm, embed_is_la, row_embed, row_embed_norm};
pub use hankel::{hankel_factor, HankelMod};
pub use permutation::UnitaryPermutation;
pub use tensor::{tensor_is_la, tensor_norm, TensorRankOne};

use crate::matrix::CMatrix;

/// Expansion of a structured value into its dense matrix.
pub trait Densify {
    fn densify(&self) -> CMatrix;
}

/// The 3x3 Lo Shu magic square, constant 15.
pub fn magic3() -> CMatrix {
    CMatrix::from_real_rows(&[&[8.0, 1.0, 6.0], &[3.0, 5.0, 7.0], &[4.0, 9.0, 2.0]]).expect("square")
}

/// Durer's 4x4 magic square, constant 34.
pub fn magic4() -> CMatrix {
    CMatrix::from_real_rows(&[
        &[16.0, 3.0, 2.0, 13.0],
        &[5.0, 10.0, 11.0, 8.0],
        &[9.0, 6.0, 7.0, 12.0],
        &[4.0, 15.0, 14.0, 1.0],
    ])
    .expect("square")
}

/// The common line sum of an entrywise nonnegative matrix whose row and
/// column sums all agree, which is its norm at every `p`.
///
/// Entries down to `-1e-12` count as zero and imaginary parts must be at most
/// `1e-12` (relative to the largest entry); sums must lie within `1e-9`
/// relative of their mean.
pub fn doubly_balanced_norm(a: &CMatrix) -> Option<f64> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let scale = a.max_abs();
    if scale == 0.0 {
        return Some(0.0);
    }
    let mut rows = vec![0.0; n];
    let mut cols = vec![0.0; n];
    for i in 0..n {
        for (j, z) in a.row(i).iter().enumerate() {
            if z.im.abs() > 1e-12 * scale || z.re < -1e-12 {
                return None;
            }
            let v = z.re.max(0.0);
            rows[i] += v;
            cols[j] += v;
        }
    }
    let mean = rows.iter().chain(&cols).sum::<f64>() / (2 * n) as f64;
    rows.iter()
        .chain(&cols)
        .all(|s| (s - mean).abs() <= 1e-9 * mean)
        .then_some(mean)
}
