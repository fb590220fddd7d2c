use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{NormError, Result};
use crate::matrix::CMatrix;
use crate::sample;

use super::Densify;

/// A permutation matrix with unit-modulus phases: `s[i][sigma[i]] = phases[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryPermutation {
    sigma: Vec<usize>,
    phases: Vec<Complex64>,
}

impl UnitaryPermutation {
    pub fn new(sigma: Vec<usize>, phases: Vec<Complex64>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(NormError::Empty);
        }
        if phases.len() != n {
            return Err(NormError::Dimension(format!(
                "{} phases for a permutation of {n}",
                phases.len()
            )));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(NormError::Argument(format!("{sigma:?} is not a bijection")));
            }
            seen[s] = true;
        }
        if let Some(z) = phases.iter().find(|z| (z.norm() - 1.0).abs() > 1e-12) {
            return Err(NormError::Argument(format!("phase {z} is not unimodular")));
        }
        Ok(UnitaryPermutation { sigma, phases })
    }

    /// Plain permutation matrix with all phases 1.
    pub fn permutation(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        Self::new(sigma, vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::permutation((0..n).collect())
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Result<Self> {
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(rng);
        let phases = (0..n).map(|_| sample::phase(rng)).collect();
        Self::new(sigma, phases)
    }

    /// Reads the structure back from a dense matrix (entries below `1e-12` count as zero).
    pub fn recognize(a: &CMatrix) -> Option<Self> {
        if !crate::exact::is_unitary_permutation_form(a) {
            return None;
        }
        let n = a.rows();
        let mut sigma = Vec::with_capacity(n);
        let mut phases = Vec::with_capacity(n);
        for i in 0..n {
            let (j, z) = a
                .row(i)
                .iter()
                .enumerate()
                .find(|(_, z)| z.norm() > 1e-12)?;
            sigma.push(j);
            phases.push(*z);
        }
        Self::new(sigma, phases).ok()
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn phases(&self) -> &[Complex64] {
        &self.phases
    }
}

impl Densify for UnitaryPermutation {
    fn densify(&self) -> CMatrix {
        let n = self.sigma.len();
        let mut m = CMatrix::zeros(n, n).expect("n >= 1");
        for (i, (&j, &z)) in self.sigma.iter().zip(&self.phases).enumerate() {
            m.set(i, j, z);
        }
        m
    }
}
