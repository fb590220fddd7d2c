//! Zero padding, direct sums and block-row / block-column / block-grid bounds.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NormError, Result};
use crate::exponent::Exponent;
use crate::interval::Interval;
use crate::matrix::CMatrix;
use crate::vector::slice_norm;

/// `A` in the top-left corner of an `m x m` zero matrix.
pub fn pad_embed(a: &CMatrix, m: usize) -> Result<CMatrix> {
    let n = a.require_square()?;
    if m < n {
        return Err(NormError::Dimension(format!("cannot embed {n}x{n} into {m}x{m}")));
    }
    let mut out = CMatrix::zeros(m, m)?;
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(i, j));
        }
    }
    Ok(out)
}

/// Block-diagonal matrix `A_1 (+) A_2 (+) ...` of square parts.
pub fn direct_sum(parts: &[CMatrix]) -> Result<CMatrix> {
    if parts.is_empty() {
        return Err(NormError::Argument("direct sum of no parts".into()));
    }
    let mut total = 0;
    for p in parts {
        total += p.require_square()?;
    }
    let mut out = CMatrix::zeros(total, total)?;
    let mut off = 0;
    for p in parts {
        let n = p.rows();
        for i in 0..n {
            for j in 0..n {
                out.set(off + i, off + j, p.get(i, j));
            }
        }
        off += n;
    }
    Ok(out)
}

/// `||A (+) B||_{p,p} = max(||A||_{p,p}, ||B||_{p,p})`, applied endpoint-wise.
pub fn direct_sum_norm(parts: &[Interval]) -> Result<Interval> {
    if parts.is_empty() {
        return Err(NormError::Argument("direct sum of no parts".into()));
    }
    Ok(Interval::new(
        parts.iter().map(|i| i.lower).fold(f64::NEG_INFINITY, f64::max),
        parts.iter().map(|i| i.upper).fold(f64::NEG_INFINITY, f64::max),
    ))
}

/// Sizes of the finest split of `A` into consecutive diagonal blocks with
/// zero off-diagonal blocks. A single entry means no split.
pub fn block_diagonal_split(a: &CMatrix) -> Vec<usize> {
    let n = a.rows();
    if !a.is_square() {
        return vec![n];
    }
    // reach[i]: furthest index coupled to i through row i or column i
    let mut reach = vec![0usize; n];
    for (i, r) in reach.iter_mut().enumerate() {
        let mut far = i;
        for j in 0..n {
            if a.get(i, j).norm_sqr() != 0.0 || a.get(j, i).norm_sqr() != 0.0 {
                far = far.max(j);
            }
        }
        *r = far;
    }
    let mut sizes = Vec::new();
    let mut start = 0;
    let mut end = 0;
    for i in 0..n {
        end = end.max(reach[i]);
        if i == end {
            sizes.push(i + 1 - start);
            start = i + 1;
            end = i + 1;
        }
    }
    sizes
}

/// Value of a block bound and whether it is attained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlockBound {
    pub value: f64,
    /// True when the caller asserted a shared maximizer, making the bound an equality.
    pub exact: bool,
}

fn as_complex(values: &[f64]) -> Vec<Complex64> {
    values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Stacked blocks `[A_1; A_2; ...]`: `(sum ||A_i||^p)^{1/p}`.
pub fn block_column_bound(norms: &[f64], p: Exponent, exact: bool) -> BlockBound {
    BlockBound {
        value: slice_norm(&as_complex(norms), p),
        exact,
    }
}

/// Side-by-side blocks `[A_1, A_2, ...]`: `(sum ||A_i||^q)^{1/q}`.
pub fn block_row_bound(norms: &[f64], p: Exponent, exact: bool) -> BlockBound {
    BlockBound {
        value: slice_norm(&as_complex(norms), p.dual()),
        exact,
    }
}

/// Smaller of the row-then-column and column-then-row mixed sums for a
/// `k x l` grid of block norms.
pub fn block_grid_bound(grid: &[Vec<f64>], p: Exponent) -> Result<f64> {
    let k = grid.len();
    let l = grid.first().map_or(0, Vec::len);
    if k == 0 || l == 0 {
        return Err(NormError::Argument("empty block grid".into()));
    }
    if grid.iter().any(|r| r.len() != l) {
        return Err(NormError::Dimension("ragged block grid".into()));
    }
    if grid.iter().flatten().any(|&v| !(v >= 0.0)) {
        return Err(NormError::Domain("block norms must be nonnegative".into()));
    }
    let q = p.dual();
    let row_sums: Vec<f64> = grid.iter().map(|r| slice_norm(&as_complex(r), q)).collect();
    let by_rows = slice_norm(&as_complex(&row_sums), p);
    let col_sums: Vec<f64> = (0..l)
        .map(|j| {
            let col: Vec<f64> = grid.iter().map(|r| r[j]).collect();
            slice_norm(&as_complex(&col), p)
        })
        .collect();
    let by_cols = slice_norm(&as_complex(&col_sums), q);
    Ok(by_rows.min(by_cols))
}

/// Assembles a dense matrix from a rectangular grid of equally sized square blocks.
pub fn block_matrix(blocks: &[Vec<CMatrix>]) -> Result<CMatrix> {
    let k = blocks.len();
    let l = blocks.first().map_or(0, Vec::len);
    if k == 0 || l == 0 {
        return Err(NormError::Argument("empty block grid".into()));
    }
    let m = blocks[0][0].require_square()?;
    for row in blocks {
        if row.len() != l {
            return Err(NormError::Dimension("ragged block grid".into()));
        }
        for b in row {
            if b.rows() != m || b.cols() != m {
                return Err(NormError::Dimension("blocks differ in size".into()));
            }
        }
    }
    let mut out = CMatrix::zeros(k * m, l * m)?;
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, b) in row.iter().enumerate() {
            for i in 0..m {
                for j in 0..m {
                    out.set(bi * m + i, bj * m + j, b.get(i, j));
                }
            }
        }
    }
    Ok(out)
}

/// Sufficient condition for a shared maximizer: every block is a scalar
/// multiple of one common matrix.
pub fn blocks_share_maximizer(blocks: &[CMatrix]) -> bool {
    let Some(reference) = blocks
        .iter()
        .max_by(|a, b| a.max_abs().total_cmp(&b.max_abs()))
    else {
        return false;
    };
    if reference.is_zero() {
        return true;
    }
    blocks.iter().all(|b| scalar_multiple_of(b, reference).is_some())
}

/// The scalar `c` with `b = c * reference`, if one exists to `1e-10` relative.
pub(crate) fn scalar_multiple_of(b: &CMatrix, reference: &CMatrix) -> Option<Complex64> {
    if b.rows() != reference.rows() || b.cols() != reference.cols() {
        return None;
    }
    let rr: f64 = reference.entries().iter().map(|z| z.norm_sqr()).sum();
    if rr == 0.0 {
        return None;
    }
    let c: Complex64 = b
        .entries()
        .iter()
        .zip(reference.entries())
        .map(|(x, r)| x * r.conj())
        .sum::<Complex64>()
        / rr;
    let tol = 1e-10 * b.max_abs().max(reference.max_abs() * c.norm());
    let fits = b
        .entries()
        .iter()
        .zip(reference.entries())
        .all(|(x, r)| (x - c * r).norm() <= tol);
    fits.then_some(c)
}
