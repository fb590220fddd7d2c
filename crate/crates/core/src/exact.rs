//! Closed-form operator norms at `p = 1, 2, inf` and the isometry test.

use serde::{Deserialize, Serialize};

use crate::error::{NormError, Result};
use crate::exponent::Exponent;
use crate::matrix::CMatrix;
use crate::sample;
use crate::vector::slice_norm;

const JACOBI_MAX_SWEEPS: usize = 60;
const JACOBI_TOL: f64 = 1e-14;

/// A maximum absolute line sum together with the line attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSum {
    pub value: f64,
    /// Smallest attaining index.
    pub index: usize,
}

fn argmax(sums: impl Iterator<Item = f64>) -> LineSum {
    let mut best = LineSum {
        value: f64::NEG_INFINITY,
        index: 0,
    };
    for (i, s) in sums.enumerate() {
        if s > best.value {
            best = LineSum { value: s, index: i };
        }
    }
    best
}

/// Maximum absolute column sum and its column.
pub fn max_column_sum(a: &CMatrix) -> LineSum {
    argmax((0..a.cols()).map(|j| (0..a.rows()).map(|i| a.get(i, j).norm()).sum()))
}

/// Maximum absolute row sum and its row.
pub fn max_row_sum(a: &CMatrix) -> LineSum {
    argmax((0..a.rows()).map(|i| a.row(i).iter().map(|z| z.norm()).sum()))
}

/// `||A||_{1,1}`: the largest absolute column sum.
pub fn norm_one(a: &CMatrix) -> f64 {
    max_column_sum(a).value
}

/// `||A||_{inf,inf}`: the largest absolute row sum.
pub fn norm_inf(a: &CMatrix) -> f64 {
    max_row_sum(a).value
}

/// `||A||_{2,2}`, the largest singular value.
///
/// Computed as the square root of the top eigenvalue of `A^* A` by cyclic
/// Jacobi on the real symmetric embedding `[[X, -Y], [Y, X]]` of
/// `A^* A = X + iY`, which carries every eigenvalue twice.
pub fn norm_two(a: &CMatrix) -> f64 {
    let scale = a.max_abs();
    if scale == 0.0 {
        return 0.0;
    }
    let a = a.scale((1.0 / scale).into());
    let n = a.cols();
    // Gram matrix G = A^* A.
    let mut gram = vec![num_complex::Complex64::new(0.0, 0.0); n * n];
    for k in 0..a.rows() {
        let row = a.row(k);
        for i in 0..n {
            let ai = row[i].conj();
            if ai.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                gram[i * n + j] += ai * row[j];
            }
        }
    }
    let k = 2 * n;
    let mut sym = vec![0.0; k * k];
    for i in 0..n {
        for j in 0..n {
            let g = gram[i * n + j];
            sym[i * k + j] = g.re;
            sym[(i + n) * k + (j + n)] = g.re;
            sym[i * k + (j + n)] = -g.im;
            sym[(i + n) * k + j] = g.im;
        }
    }
    let top = symmetric_eigenvalues(sym, k)
        .into_iter()
        .fold(0.0, f64::max);
    scale * top.sqrt()
}

/// Eigenvalues of a real symmetric `k x k` matrix by cyclic Jacobi rotations.
pub(crate) fn symmetric_eigenvalues(mut a: Vec<f64>, k: usize) -> Vec<f64> {
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..k {
            for j in 0..k {
                let v = a[i * k + j] * a[i * k + j];
                if i == j {
                    diag += v;
                } else {
                    off += v;
                }
            }
        }
        if off == 0.0 || off.sqrt() < JACOBI_TOL * diag.sqrt() {
            break;
        }
        for p in 0..k {
            for q in p + 1..k {
                let apq = a[p * k + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * k + p];
                let aqq = a[q * k + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * k + p] = app - t * apq;
                a[q * k + q] = aqq + t * apq;
                a[p * k + q] = 0.0;
                a[q * k + p] = 0.0;
                for r in 0..k {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * k + p];
                    let arq = a[r * k + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * k + p] = new_rp;
                    a[p * k + r] = new_rp;
                    a[r * k + q] = new_rq;
                    a[q * k + r] = new_rq;
                }
            }
        }
    }
    (0..k).map(|i| a[i * k + i]).collect()
}

/// The three anchor norms `||A||_{1,1}`, `||A||_{2,2}`, `||A||_{inf,inf}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnchorNorms {
    pub n1: f64,
    pub n2: f64,
    pub ninf: f64,
}

impl AnchorNorms {
    pub fn is_zero(&self) -> bool {
        self.n1 == 0.0 && self.ninf == 0.0
    }

    /// The anchor at `p` when `p` is one of `1, 2, inf`.
    pub fn at(&self, p: Exponent) -> Option<f64> {
        match p {
            Exponent::Infinity => Some(self.ninf),
            _ if p.is_one() => Some(self.n1),
            _ if p.is_two() => Some(self.n2),
            _ => None,
        }
    }
}

pub fn anchor_norms(a: &CMatrix) -> Result<AnchorNorms> {
    a.require_square()?;
    Ok(AnchorNorms {
        n1: norm_one(a),
        n2: norm_two(a),
        ninf: norm_inf(a),
    })
}

/// Structural unitary-permutation test with a seeded p-isometry self-check.
///
/// Returns true iff every row and every column holds exactly one nonzero and
/// each nonzero has modulus one. Unitaries outside that class are rejected
/// even at `p = 2`.
pub fn is_p_isometry(s: &CMatrix, p: Exponent, trials: usize, seed: u64) -> Result<bool> {
    let n = s.require_square()?;
    if trials == 0 {
        return Err(NormError::Argument("trials must be >= 1".into()));
    }
    if !is_unitary_permutation_form(s) {
        return Ok(false);
    }
    let mut rng = sample::rng(seed);
    for _ in 0..trials {
        let x = sample::complex_vec(&mut rng, n);
        let before = slice_norm(&x, p);
        let after = slice_norm(&s.apply(&x), p);
        if (after - before).abs() > 1e-12 * before.max(f64::MIN_POSITIVE) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn is_unitary_permutation_form(s: &CMatrix) -> bool {
    const ZERO: f64 = 1e-12;
    if !s.is_square() {
        return false;
    }
    let n = s.rows();
    let mut col_hits = vec![0usize; n];
    for i in 0..n {
        let mut row_hits = 0;
        for (j, z) in s.row(i).iter().enumerate() {
            let m = z.norm();
            if m > ZERO {
                if (m - 1.0).abs() > ZERO {
                    return false;
                }
                row_hits += 1;
                col_hits[j] += 1;
            }
        }
        if row_hits != 1 {
            return false;
        }
    }
    col_hits.iter().all(|&h| h == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn magic3() -> CMatrix {
        CMatrix::from_real_rows(&[&[8.0, 1.0, 6.0], &[3.0, 5.0, 7.0], &[4.0, 9.0, 2.0]]).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn line_sums() {
        assert_eq!(norm_one(&magic3()), 15.0);
        assert_eq!(norm_inf(&magic3()), 15.0);
        assert_eq!(norm_one(&CMatrix::identity(3).unwrap()), 1.0);
        let a = CMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        assert_eq!(max_column_sum(&a), LineSum { value: 6.0, index: 1 });
        assert_eq!(max_row_sum(&a), LineSum { value: 7.0, index: 1 });
        assert_eq!(norm_inf(&CMatrix::zeros(2, 2).unwrap()), 0.0);
    }

    #[test]
    fn ties_pick_smallest_index() {
        assert_eq!(max_column_sum(&magic3()).index, 0);
        assert_eq!(max_row_sum(&magic3()).index, 0);
    }

    #[test]
    fn two_norm_examples() {
        assert!((norm_two(&CMatrix::identity(4).unwrap()) - 1.0).abs() < 1e-14);
        assert!((norm_two(&magic3()) - 15.0).abs() < 1e-12);
        let a = CMatrix::from_real_rows(&[&[0.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert!((norm_two(&a) - 2.0).abs() < 1e-14);
        assert_eq!(norm_two(&CMatrix::zeros(3, 3).unwrap()), 0.0);
        // [[1,2],[3,4]]: sigma_max^2 = (30 + sqrt(884)) / 2
        let a = CMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let expected = ((30.0 + 884f64.sqrt()) / 2.0).sqrt();
        assert!((norm_two(&a) - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn two_norm_complex_rank_one() {
        // u v^* has sigma_max = |u|_2 |v|_2
        let u = [c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.5)];
        let v = [c(0.5, 0.5), c(-2.0, 1.0), c(0.0, 1.0)];
        let mut m = CMatrix::zeros(3, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, u[i] * v[j].conj());
            }
        }
        let nu: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let nv: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((norm_two(&m) - nu * nv).abs() < 1e-12 * nu * nv);
    }

    #[test]
    fn anchors_examples() {
        let a = anchor_norms(&magic3()).unwrap();
        assert_eq!((a.n1, a.ninf), (15.0, 15.0));
        assert!((a.n2 - 15.0).abs() < 1e-12);
        let d = CMatrix::from_diagonal(&[c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        let a = anchor_norms(&d).unwrap();
        assert_eq!((a.n1, a.ninf), (3.0, 3.0));
        assert!((a.n2 - 3.0).abs() < 1e-14);
        let m = CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 0.0]]).unwrap();
        let a = anchor_norms(&m).unwrap();
        assert_eq!((a.n1, a.ninf), (1.0, 2.0));
        assert!((a.n2 - 2f64.sqrt()).abs() < 1e-14);
        assert!(anchor_norms(&CMatrix::zeros(2, 3).unwrap()).is_err());
    }

    #[test]
    fn isometry_examples() {
        // sigma = (2, 3, 1) in 1-based form, phases (1, i, -1)
        let mut s = CMatrix::zeros(3, 3).unwrap();
        s.set(0, 1, c(1.0, 0.0));
        s.set(1, 2, c(0.0, 1.0));
        s.set(2, 0, c(-1.0, 0.0));
        assert!(is_p_isometry(&s, Exponent::Finite(3.0), 10, 1).unwrap());
        for p in [Exponent::ONE, Exponent::TWO, Exponent::Finite(1.7), Exponent::INF] {
            assert!(is_p_isometry(&CMatrix::identity(4).unwrap(), p, 5, 0).unwrap());
        }
        let m = CMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(!is_p_isometry(&m, Exponent::Finite(1.5), 5, 0).unwrap());
        assert!(is_p_isometry(&CMatrix::zeros(2, 3).unwrap(), Exponent::TWO, 1, 0).is_err());
        assert!(is_p_isometry(&s, Exponent::TWO, 0, 0).is_err());
    }

    #[test]
    fn rotation_is_not_a_unitary_permutation() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let r = CMatrix::from_real_rows(&[&[h, -h], &[h, h]]).unwrap();
        assert!(!is_p_isometry(&r, Exponent::TWO, 3, 0).unwrap());
    }
}
