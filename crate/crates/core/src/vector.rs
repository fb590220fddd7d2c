//! Complex vectors, vector p-norms and the sesquilinear pairing.

use std::ops::Index;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NormError, Result};
use crate::exponent::Exponent;

/// Above this exponent a finite p-norm is replaced by the max norm once the
/// two agree to relative `1e-12`.
const LARGE_EXPONENT: f64 = 1e6;

/// A nonempty vector of complex scalars; serializes as a list of `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CVector(Vec<Complex64>);

impl CVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(NormError::Empty);
        }
        Ok(CVector(entries))
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(1.0, 0.0); n])
    }

    /// The `j`-th standard basis vector of length `n`.
    pub fn basis(n: usize, j: usize) -> Result<Self> {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        if j >= n {
            return Err(NormError::Dimension(format!("basis index {j} >= {n}")));
        }
        v[j] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.norm_sqr() == 0.0)
    }

    pub fn scale(&self, c: Complex64) -> CVector {
        CVector(self.0.iter().map(|z| z * c).collect())
    }

    pub fn conj(&self) -> CVector {
        CVector(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn norm(&self, p: Exponent) -> f64 {
        vec_norm(self, p)
    }
}

impl Index<usize> for CVector {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

/// The vector p-norm; `max |x_i|` at `p = inf`.
pub fn vec_norm(x: &CVector, p: Exponent) -> f64 {
    slice_norm(x.as_slice(), p)
}

/// [`vec_norm`] on a raw slice; an empty slice has norm zero.
pub fn slice_norm(x: &[Complex64], p: Exponent) -> f64 {
    let max = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    match p {
        Exponent::Infinity => max,
        Exponent::Finite(p) => {
            if max == 0.0 {
                return 0.0;
            }
            if p == 1.0 {
                return x.iter().map(|z| z.norm()).sum();
            }
            if p > LARGE_EXPONENT {
                // ||x||_p <= n^{1/p} max |x_i|
                let spread = (x.len() as f64).powf(1.0 / p) - 1.0;
                if spread < 1e-12 {
                    return max;
                }
            }
            let sum: f64 = if p == 2.0 {
                x.iter().map(|z| (z.norm() / max).powi(2)).sum()
            } else {
                x.iter().map(|z| (z.norm() / max).powf(p)).sum()
            };
            max * sum.powf(1.0 / p)
        }
    }
}

/// `<x, y> = sum x_i conj(y_i)`.
pub fn pairing(x: &CVector, y: &CVector) -> Result<Complex64> {
    if x.len() != y.len() {
        return Err(NormError::Dimension(format!(
            "pairing of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(x.iter().zip(y.iter()).map(|(a, b)| a * b.conj()).sum())
}

/// The constant `n^{1/p1 - 1/p2}` with `||x||_{p1} <= n^{1/p1 - 1/p2} ||x||_{p2}`.
pub fn norm_equivalence_factor(n: usize, p1: Exponent, p2: Exponent) -> Result<f64> {
    if n == 0 {
        return Err(NormError::Empty);
    }
    if p1 > p2 {
        return Err(NormError::ArgumentOrder {
            lower: p1.to_string(),
            upper: p2.to_string(),
        });
    }
    Ok((n as f64).powf(p1.reciprocal() - p2.reciprocal()))
}

/// Modulus-preserving complex sign with `sign(0) = 0`.
pub fn complex_sign(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        z / r
    }
}

/// Componentwise duality map `z -> |z|^{r-1} sign(z)` for finite `r > 1`.
///
/// The vector is prescaled by its max modulus so large `r` cannot overflow;
/// only the direction of the result is meaningful.
pub fn duality_map(x: &[Complex64], r: f64) -> Vec<Complex64> {
    let max = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return x.to_vec();
    }
    x.iter()
        .map(|&z| {
            let m = z.norm() / max;
            complex_sign(z) * m.powf(r - 1.0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn norm_examples() {
        let v = CVector::from_real(&[3.0, 4.0]).unwrap();
        assert_eq!(vec_norm(&v, Exponent::TWO), 5.0);
        let v = CVector::new(vec![c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(vec_norm(&v, Exponent::ONE), 3.0);
        let v = CVector::from_real(&[1.0, 2.0]).unwrap();
        assert_eq!(vec_norm(&v, Exponent::INF), 2.0);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(CVector::new(vec![]), Err(NormError::Empty));
    }

    #[test]
    fn zero_vector_has_zero_norm() {
        let v = CVector::from_real(&[0.0, 0.0]).unwrap();
        for p in [Exponent::ONE, Exponent::Finite(3.5), Exponent::INF] {
            assert_eq!(vec_norm(&v, p), 0.0);
        }
    }

    #[test]
    fn huge_exponent_does_not_overflow() {
        let v = CVector::from_real(&[1e10, 3e10]).unwrap();
        let n = vec_norm(&v, Exponent::Finite(1e9));
        assert!((n - 3e10).abs() <= 1e-9 * 3e10);
        let n = vec_norm(&v, Exponent::Finite(400.0));
        assert!(n.is_finite() && n >= 3e10);
    }

    #[test]
    fn pairing_examples() {
        let e1 = CVector::from_real(&[1.0, 0.0]).unwrap();
        let e2 = CVector::from_real(&[0.0, 1.0]).unwrap();
        assert_eq!(pairing(&e1, &e2).unwrap(), c(0.0, 0.0));
        let v = CVector::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(pairing(&v, &v).unwrap(), c(2.0, 0.0));
        let x = CVector::from_real(&[2.0, 1.0]).unwrap();
        let y = CVector::from_real(&[1.0, 3.0]).unwrap();
        assert_eq!(pairing(&x, &y).unwrap(), c(5.0, 0.0));
        let z = CVector::from_real(&[1.0]).unwrap();
        assert!(matches!(pairing(&x, &z), Err(NormError::Dimension(_))));
    }

    #[test]
    fn equivalence_factor_examples() {
        let f = norm_equivalence_factor(4, Exponent::ONE, Exponent::TWO).unwrap();
        assert!((f - 2.0).abs() < 1e-15);
        let f = norm_equivalence_factor(9, Exponent::TWO, Exponent::INF).unwrap();
        assert!((f - 3.0).abs() < 1e-15);
        let p3 = Exponent::Finite(3.0);
        assert_eq!(norm_equivalence_factor(5, p3, p3).unwrap(), 1.0);
        assert!(matches!(
            norm_equivalence_factor(5, Exponent::INF, Exponent::TWO),
            Err(NormError::ArgumentOrder { .. })
        ));
    }

    fn complex_vec(len: usize) -> impl Strategy<Value = CVector> {
        prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), len)
            .prop_map(|v| CVector::new(v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
    }

    fn exponents() -> impl Strategy<Value = Exponent> {
        prop_oneof![
            Just(Exponent::ONE),
            Just(Exponent::Finite(1.5)),
            Just(Exponent::TWO),
            Just(Exponent::Finite(3.0)),
            Just(Exponent::INF),
            (1.0f64..20.0).prop_map(Exponent::Finite),
        ]
    }

    proptest! {
        #[test]
        fn prop_norm_monotone_and_equivalent(
            x in (1usize..8).prop_flat_map(complex_vec),
            a in exponents(),
            b in exponents(),
        ) {
            let (p1, p2) = if a <= b { (a, b) } else { (b, a) };
            let n1 = vec_norm(&x, p1);
            let n2 = vec_norm(&x, p2);
            let k = norm_equivalence_factor(x.len(), p1, p2).unwrap();
            prop_assert!(n2 <= n1 * (1.0 + 1e-12) + 1e-300);
            prop_assert!(n1 <= k * n2 * (1.0 + 1e-12) + 1e-300);
        }

        #[test]
        fn prop_holder(
            (x, y) in (1usize..8).prop_flat_map(|n| (complex_vec(n), complex_vec(n))),
            p in prop_oneof![
                Just(Exponent::ONE),
                Just(Exponent::Finite(1.5)),
                Just(Exponent::TWO),
                Just(Exponent::Finite(3.0)),
                Just(Exponent::INF),
            ],
        ) {
            let lhs = pairing(&x, &y).unwrap().norm();
            let rhs = vec_norm(&x, p) * vec_norm(&y, p.dual());
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
        }

        #[test]
        fn prop_homogeneous(
            x in (1usize..8).prop_flat_map(complex_vec),
            re in -5.0f64..5.0,
            im in -5.0f64..5.0,
            p in exponents(),
        ) {
            let s = c(re, im);
            let lhs = vec_norm(&x.scale(s), p);
            let rhs = s.norm() * vec_norm(&x, p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300));
        }
    }
}
