//! Lower bounds by ascent and certificates, a brute-force oracle for tiny
//! real matrices, and the combiner producing certified intervals.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{NormError, Result};
use crate::exact::{anchor_norms, max_column_sum, max_row_sum, AnchorNorms};
use crate::exponent::Exponent;
use crate::interp::{
    is_self_adjoint, upper_bound_from_anchors, LowerProvenance, NormBound, UpperProvenance,
};
use crate::interval::Interval;
use crate::matrix::CMatrix;
use crate::sample;
use crate::structured::{
    block_diagonal_split, classify_circulant_la, doubly_balanced_norm, hankel_factor,
    spectral_radius, tensor_norm, Circulant, Densify, HankelMod, TensorRankOne, UnitaryPermutation,
};
use crate::vector::{complex_sign, duality_map, slice_norm, CVector};

const MAX_ITERATIONS: usize = 500;
const GAIN_TOL: f64 = 1e-12;
const CERTIFICATE_TOL: f64 = 1e-9;
pub const DEFAULT_RESTARTS: usize = 8;

/// Best point found by the ascent iteration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AscentResult {
    /// `||A x||_p / ||x||_p` for the returned maximizer.
    pub value: f64,
    /// Unit vector in the p-norm.
    pub maximizer: CVector,
    pub iterations: usize,
    pub converged: bool,
    /// Objective after each step of the winning restart.
    pub trace: Vec<f64>,
}

/// `|lambda|` once `A xi = lambda S xi` is verified to `1e-9` relative; a
/// lower bound for every `p` at once.
pub fn eigen_lower_bound(
    a: &CMatrix,
    xi: &CVector,
    s: &UnitaryPermutation,
    lambda: Complex64,
) -> Result<f64> {
    let n = a.require_square()?;
    if xi.len() != n || s.len() != n {
        return Err(NormError::Dimension(format!(
            "certificate of size ({}, {}) for a {n}x{n} matrix",
            xi.len(),
            s.len()
        )));
    }
    if xi.is_zero() {
        return Err(NormError::Argument("certificate vector is zero".into()));
    }
    let ax = a.apply(xi.as_slice());
    let sx = s.densify().apply(xi.as_slice());
    let diff: Vec<Complex64> = ax.iter().zip(&sx).map(|(u, v)| u - lambda * v).collect();
    let two = Exponent::TWO;
    let scale = slice_norm(&ax, two).max(lambda.norm() * slice_norm(xi.as_slice(), two));
    let residual = slice_norm(&diff, two);
    if residual > CERTIFICATE_TOL * scale {
        return Err(NormError::CertificateRejected {
            residual: residual / scale,
            tolerance: CERTIFICATE_TOL,
        });
    }
    Ok(lambda.norm())
}

struct Run {
    x: Vec<Complex64>,
    value: f64,
    iterations: usize,
    converged: bool,
    trace: Vec<f64>,
}

fn normalize(x: &[Complex64], p: Exponent) -> Option<Vec<Complex64>> {
    let n = slice_norm(x, p);
    (n > 0.0 && n.is_finite()).then(|| x.iter().map(|z| z / n).collect())
}

/// Fixed-point iteration `x <- Phi_q(A^* Phi_p(A x))` for finite `p > 1`,
/// renormalized each step; the objective `||A x||_p` never decreases.
fn iterate(a: &CMatrix, p: f64, start: &[Complex64]) -> Run {
    let pe = Exponent::Finite(p);
    let q = p / (p - 1.0);
    let Some(mut x) = normalize(start, pe) else {
        return Run {
            x: start.to_vec(),
            value: 0.0,
            iterations: 0,
            converged: true,
            trace: vec![0.0],
        };
    };
    let mut value = slice_norm(&a.apply(&x), pe);
    let mut trace = vec![value];
    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let z = a.apply_adjoint(&duality_map(&a.apply(&x), p));
        let Some(next) = normalize(&duality_map(&z, q), pe) else {
            converged = true;
            break;
        };
        let next_value = slice_norm(&a.apply(&next), pe);
        trace.push(next_value);
        if next_value < value {
            // rounding at the fixed point
            converged = true;
            break;
        }
        let gain = (next_value - value) / next_value;
        x = next;
        value = next_value;
        if gain < GAIN_TOL {
            converged = true;
            break;
        }
    }
    Run {
        x,
        value,
        iterations,
        converged,
        trace,
    }
}

/// Runs the ascent from a single start vector and returns its objective trace.
pub fn ascent_trace(a: &CMatrix, p: Exponent, start: &CVector) -> Result<Vec<f64>> {
    let n = a.require_square()?;
    if start.len() != n {
        return Err(NormError::Dimension(format!("start of length {} for n = {n}", start.len())));
    }
    match p {
        Exponent::Finite(v) if v > 1.0 => Ok(iterate(a, v, start.as_slice()).trace),
        _ => Err(NormError::Argument("ascent trace needs 1 < p < inf".into())),
    }
}

fn starts(a: &CMatrix, r: Exponent, count: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let n = a.rows();
    let col = (0..n)
        .map(|j| {
            let c: Vec<Complex64> = (0..n).map(|i| a.get(i, j)).collect();
            slice_norm(&c, r)
        })
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (j, v)| if v > best.1 { (j, v) } else { best });
    let mut e = vec![Complex64::new(0.0, 0.0); n];
    e[col.0] = Complex64::new(1.0, 0.0);
    let mut out = vec![vec![Complex64::new(1.0, 0.0); n], e];
    for k in 2..count.max(2) {
        let mut rng = sample::rng(sample::derive_seed(seed, k as u64));
        out.push(sample::complex_vec(&mut rng, n));
    }
    out.truncate(count);
    out
}

/// Multi-start ascent lower bound for `||A||_{p,p}`.
///
/// Starts are the ones vector, the unit vector of the largest column and
/// `restarts - 2` seeded random vectors, all of which are run: stopping once
/// two starts agree was seen to settle on shared local maxima. For `p < 2` each start runs on
/// `A^*` at the dual exponent and the result is mapped back to a primal
/// vector, then polished at `p`. At `p = 1` and `p = inf` the exact
/// attaining vector is returned. The reported value is always re-evaluated
/// from the maximizer.
pub fn ascent_lower_bound(a: &CMatrix, p: Exponent, restarts: usize, seed: u64) -> Result<AscentResult> {
    let n = a.require_square()?;
    if restarts == 0 {
        return Err(NormError::Argument("restarts must be >= 1".into()));
    }
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(AscentResult {
            value: 0.0,
            maximizer: CVector::new(normalize(&vec![Complex64::new(1.0, 0.0); n], p).expect("nonzero"))?,
            iterations: 0,
            converged: true,
            trace: vec![0.0],
        });
    }
    let exact_result = |x: Vec<Complex64>| -> Result<AscentResult> {
        let value = ratio(a, &x, p);
        Ok(AscentResult {
            value,
            maximizer: CVector::new(x)?,
            iterations: 0,
            converged: true,
            trace: vec![value],
        })
    };
    let pv = match p {
        Exponent::Infinity => {
            let i = max_row_sum(a).index;
            let x = a.row(i).iter().map(|z| complex_sign(*z).conj()).collect();
            return exact_result(x);
        }
        Exponent::Finite(v) if v == 1.0 => {
            return exact_result(CVector::basis(n, max_column_sum(a).index)?.into_inner());
        }
        Exponent::Finite(v) => v,
    };
    let b = a.scale(Complex64::new(1.0 / scale, 0.0));
    let dual = pv < 2.0;
    let (work, r) = if dual { (b.adjoint(), p.dual()) } else { (b.clone(), p) };
    let mut best: Option<Run> = None;
    for start in starts(&work, r, restarts, seed) {
        let run = if dual {
            let first = iterate(&work, r.value(), &start);
            let mapped = duality_map(&b.apply_adjoint(&first.x), r.value());
            let polish = iterate(&b, pv, &mapped);
            let mut trace = first.trace;
            trace.extend(polish.trace);
            Run {
                iterations: first.iterations + polish.iterations,
                trace,
                ..polish
            }
        } else {
            iterate(&b, pv, &start)
        };
        if best.as_ref().is_none_or(|cur| run.value > cur.value) {
            best = Some(run);
        }
    }
    let run = best.expect("at least one restart");
    let x = normalize(&run.x, p).unwrap_or(run.x);
    Ok(AscentResult {
        value: ratio(a, &x, p),
        maximizer: CVector::new(x)?,
        iterations: run.iterations,
        converged: run.converged,
        trace: run.trace.iter().map(|v| v * scale).collect(),
    })
}

fn ratio(a: &CMatrix, x: &[Complex64], p: Exponent) -> f64 {
    let d = slice_norm(x, p);
    if d == 0.0 {
        0.0
    } else {
        slice_norm(&a.apply(x), p) / d
    }
}

/// Brute-force maximum over the real unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    /// Angles of the maximizer: `theta` for `n = 2`, `(theta, phi)` for `n = 3`.
    pub angles: Vec<f64>,
    /// Real maximizer with unit p-norm.
    pub maximizer: Vec<f64>,
    /// Set for complex input, where real vectors only give a lower bound.
    pub lower_bound_only: bool,
}

const GOLDEN_TOL: f64 = 1e-8;
const REFINED_CANDIDATES: usize = 3;

/// Exhaustive angular search over real directions followed by golden-section
/// refinement of the best cells.
///
/// `n = 2` sweeps `theta` over `[0, pi)`; `n = 3` sweeps `theta` over
/// `[0, pi]` and `phi` over `[0, pi)`, which meets every direction up to sign.
pub fn oracle_norm(a: &CMatrix, p: Exponent, resolution: usize) -> Result<OracleResult> {
    let n = a.require_square()?;
    if n > 3 {
        return Err(NormError::UnsupportedSize(n));
    }
    if resolution < 360 {
        return Err(NormError::Argument(format!("resolution {resolution} is below 360")));
    }
    let lower_bound_only = !a.is_real();
    let eval = |u: &[f64]| -> f64 {
        let x: Vec<Complex64> = u.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        ratio(a, &x, p)
    };
    let finish = |angles: Vec<f64>, u: Vec<f64>, value: f64| {
        let norm = slice_norm(&u.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>(), p);
        OracleResult {
            value,
            angles,
            maximizer: u.iter().map(|v| v / norm).collect(),
            lower_bound_only,
        }
    };
    let h = PI / resolution as f64;
    match n {
        1 => Ok(finish(vec![], vec![1.0], a.get(0, 0).norm())),
        2 => {
            let dir = |t: f64| [t.cos(), t.sin()];
            let values: Vec<f64> = (0..resolution).map(|k| eval(&dir(k as f64 * h))).collect();
            let mut cand: Vec<usize> = (0..resolution)
                .filter(|&k| {
                    let prev = values[(k + resolution - 1) % resolution];
                    let next = values[(k + 1) % resolution];
                    values[k] >= prev && values[k] >= next
                })
                .collect();
            cand.sort_by(|&x, &y| values[y].total_cmp(&values[x]));
            cand.truncate(REFINED_CANDIDATES);
            let mut best = (values[cand[0]], cand[0] as f64 * h);
            for &k in &cand {
                let c = k as f64 * h;
                let (t, v) = golden_max(|t| eval(&dir(t)), c - h, c + h);
                if v > best.0 {
                    best = (v, t);
                }
            }
            Ok(finish(vec![best.1], dir(best.1).to_vec(), best.0))
        }
        _ => {
            let dir = |t: f64, f: f64| [t.sin() * f.cos(), t.sin() * f.sin(), t.cos()];
            let rows = resolution + 1;
            let cols = resolution;
            let mut values = vec![0.0; rows * cols];
            for i in 0..rows {
                for j in 0..cols {
                    values[i * cols + j] = eval(&dir(i as f64 * h, j as f64 * h));
                }
            }
            let at = |i: usize, j: usize| values[i * cols + j];
            let mut cand: Vec<(usize, usize)> = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    let v = at(i, j);
                    let left = at(i, (j + cols - 1) % cols);
                    let right = at(i, (j + 1) % cols);
                    let up = if i > 0 { at(i - 1, j) } else { f64::NEG_INFINITY };
                    let down = if i + 1 < rows { at(i + 1, j) } else { f64::NEG_INFINITY };
                    if v >= left && v >= right && v >= up && v >= down {
                        cand.push((i, j));
                    }
                }
            }
            cand.sort_by(|x, y| at(y.0, y.1).total_cmp(&at(x.0, x.1)));
            cand.truncate(REFINED_CANDIDATES);
            let (i0, j0) = cand[0];
            let mut best = (at(i0, j0), i0 as f64 * h, j0 as f64 * h);
            for &(i, j) in &cand {
                let (mut t, mut f) = (i as f64 * h, j as f64 * h);
                let (tc, fc) = (t, f);
                let mut v = at(i, j);
                for _ in 0..50 {
                    let before = v;
                    let (nt, vt) = golden_max(|s| eval(&dir(s, f)), tc - h, tc + h);
                    if vt > v {
                        (t, v) = (nt, vt);
                    }
                    let (nf, vf) = golden_max(|s| eval(&dir(t, s)), fc - h, fc + h);
                    if vf > v {
                        (f, v) = (nf, vf);
                    }
                    if v - before <= 1e-15 * v {
                        break;
                    }
                }
                if v > best.0 {
                    best = (v, t, f);
                }
            }
            Ok(finish(vec![best.1, best.2], dir(best.1, best.2).to_vec(), best.0))
        }
    }
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`; returns the
/// best point seen and its value.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    while hi - lo > GOLDEN_TOL {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
            if f1 > best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
            if f2 > best.1 {
                best = (x2, f2);
            }
        }
    }
    best
}

/// A claimed relation `A xi = lambda S xi`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenCertificate {
    pub xi: CVector,
    pub s: UnitaryPermutation,
    pub lambda: Complex64,
}

/// Settings for [`certified_bound_with`] and [`Certifier`].
#[derive(Debug, Clone, PartialEq)]
pub struct BoundOptions {
    pub restarts: usize,
    /// Checked once up front; each contributes `|lambda|` at every `p`.
    pub certificates: Vec<EigenCertificate>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            restarts: DEFAULT_RESTARTS,
            certificates: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
enum Plan {
    Zero,
    /// The same value at every `p`.
    Constant { value: f64, lower: LowerProvenance },
    Circulant { spectral: f64 },
    Hankel(Box<Certifier>),
    Split(Vec<Certifier>),
    Tensor { t: TensorRankOne, core: Box<Certifier> },
    Generic,
}

/// Structure analysis of one matrix, reusable across exponents.
///
/// Recognizers run in order: zero, circulant (exact when LA), Hankel-mod
/// (delegates to its circulant factor), doubly balanced, block diagonal
/// (recurses per block), rank-one tensor (recurses on the core), generic.
#[derive(Debug, Clone)]
pub struct Certifier {
    a: CMatrix,
    anchors: AnchorNorms,
    self_adjoint: bool,
    restarts: usize,
    certified: Option<f64>,
    plan: Plan,
}

impl Certifier {
    pub fn new(a: &CMatrix, options: &BoundOptions) -> Result<Self> {
        a.require_square()?;
        if options.restarts == 0 {
            return Err(NormError::Argument("restarts must be >= 1".into()));
        }
        let mut certified: Option<f64> = None;
        for c in &options.certificates {
            let v = eigen_lower_bound(a, &c.xi, &c.s, c.lambda)?;
            certified = Some(certified.map_or(v, |w| w.max(v)));
        }
        let plain = BoundOptions {
            restarts: options.restarts,
            certificates: Vec::new(),
        };
        Ok(Certifier {
            a: a.clone(),
            anchors: anchor_norms(a)?,
            self_adjoint: is_self_adjoint(a),
            restarts: options.restarts,
            certified,
            plan: Self::plan(a, &plain)?,
        })
    }

    fn plan(a: &CMatrix, options: &BoundOptions) -> Result<Plan> {
        if a.is_zero() {
            return Ok(Plan::Zero);
        }
        if let Some(c) = Circulant::recognize(a) {
            let w = classify_circulant_la(&c);
            return Ok(match w.norm {
                Some(value) if w.is_la => Plan::Constant {
                    value,
                    lower: LowerProvenance::EigenCertificate,
                },
                _ => Plan::Circulant {
                    spectral: spectral_radius(&c).0,
                },
            });
        }
        if let Some(h) = HankelMod::recognize(a) {
            let (_, circ) = hankel_factor(&h);
            return Ok(Plan::Hankel(Box::new(Certifier::new(&circ.densify(), options)?)));
        }
        if let Some(value) = doubly_balanced_norm(a) {
            return Ok(Plan::Constant {
                value,
                lower: LowerProvenance::OnesVector,
            });
        }
        let sizes = block_diagonal_split(a);
        if sizes.len() > 1 {
            let mut parts = Vec::with_capacity(sizes.len());
            let mut off = 0;
            for s in sizes {
                parts.push(Certifier::new(&a.block(off, off, s, s)?, options)?);
                off += s;
            }
            return Ok(Plan::Split(parts));
        }
        if let Some(t) = TensorRankOne::recognize(a) {
            let core = Box::new(Certifier::new(&t.core, options)?);
            return Ok(Plan::Tensor { t, core });
        }
        Ok(Plan::Generic)
    }

    pub fn anchors(&self) -> &AnchorNorms {
        &self.anchors
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.a
    }

    /// Name of the recognizer that handles this matrix.
    pub fn structure(&self) -> &'static str {
        match &self.plan {
            Plan::Zero => "zero",
            Plan::Constant {
                lower: LowerProvenance::OnesVector,
                ..
            } => "doubly-balanced",
            Plan::Constant { .. } => "la-circulant",
            Plan::Circulant { .. } => "circulant",
            Plan::Hankel(_) => "hankel-mod",
            Plan::Split(_) => "direct-sum",
            Plan::Tensor { .. } => "tensor",
            Plan::Generic => "generic",
        }
    }

    /// Certified interval at `p`; every `seed` gives a valid interval and the
    /// same seed gives the same interval.
    pub fn bound(&self, p: Exponent, seed: u64) -> NormBound {
        let mut b = self.raw_bound(p, seed);
        if let Some(v) = self.certified {
            if v > b.lower {
                b.lower = v;
                b.lower_provenance = LowerProvenance::EigenCertificate;
            }
        }
        if b.lower > b.upper && b.lower - b.upper <= 1e-9 * b.upper {
            b.lower = b.upper;
        }
        b
    }

    fn generic_upper(&self, p: Exponent) -> (f64, UpperProvenance) {
        let u = upper_bound_from_anchors(&self.anchors, self.a.rows(), self.self_adjoint, p);
        (u.value, u.provenance)
    }

    fn raw_bound(&self, p: Exponent, seed: u64) -> NormBound {
        let at_anchor = self.anchors.at(p);
        match &self.plan {
            Plan::Zero => NormBound {
                p,
                lower: 0.0,
                upper: 0.0,
                lower_provenance: LowerProvenance::Anchor,
                upper_provenance: UpperProvenance::Anchor,
            },
            Plan::Constant { value, lower } => NormBound {
                p,
                lower: *value,
                upper: *value,
                lower_provenance: *lower,
                upper_provenance: if at_anchor.is_some() {
                    UpperProvenance::Anchor
                } else {
                    UpperProvenance::RieszThorin
                },
            },
            Plan::Hankel(inner) => inner.bound(p, seed),
            Plan::Split(parts) => {
                let bounds: Vec<NormBound> = parts.iter().map(|c| c.bound(p, seed)).collect();
                let lo = argmax_by(&bounds, |b| b.lower);
                let hi = argmax_by(&bounds, |b| b.upper);
                NormBound {
                    p,
                    lower: bounds[lo].lower,
                    upper: bounds[hi].upper,
                    lower_provenance: bounds[lo].lower_provenance,
                    upper_provenance: bounds[hi].upper_provenance,
                }
            }
            Plan::Tensor { t, core } => {
                let c = core.bound(p, seed);
                let i = tensor_norm(t, p, Interval::new(c.lower, c.upper));
                NormBound {
                    p,
                    lower: i.lower,
                    upper: i.upper,
                    lower_provenance: LowerProvenance::Structured,
                    upper_provenance: UpperProvenance::Structured,
                }
            }
            Plan::Circulant { spectral } => {
                let (upper, upper_provenance) = self.generic_upper(p);
                let (mut lower, mut lower_provenance) = match at_anchor {
                    Some(v) => (v, LowerProvenance::Anchor),
                    None => self.ascent_and_extrapolation(p, seed),
                };
                if at_anchor.is_none() {
                    // ||C||_p = ||C||_q for every circulant
                    let dual = self.ascent(p.dual(), seed);
                    if dual > lower {
                        (lower, lower_provenance) = (dual, LowerProvenance::Boyd);
                    }
                }
                if *spectral > lower {
                    (lower, lower_provenance) = (*spectral, LowerProvenance::EigenCertificate);
                }
                NormBound {
                    p,
                    lower,
                    upper,
                    lower_provenance,
                    upper_provenance,
                }
            }
            Plan::Generic => {
                let (upper, upper_provenance) = self.generic_upper(p);
                let (lower, lower_provenance) = match at_anchor {
                    Some(v) => (v, LowerProvenance::Anchor),
                    None => self.ascent_and_extrapolation(p, seed),
                };
                NormBound {
                    p,
                    lower,
                    upper,
                    lower_provenance,
                    upper_provenance,
                }
            }
        }
    }

    fn ascent(&self, p: Exponent, seed: u64) -> f64 {
        ascent_lower_bound(&self.a, p, self.restarts, seed)
            .map(|r| r.value)
            .unwrap_or(0.0)
    }

    fn ascent_and_extrapolation(&self, p: Exponent, seed: u64) -> (f64, LowerProvenance) {
        let boyd = self.ascent(p, seed);
        let anchor = anchor_extrapolation(&self.anchors, p);
        if anchor > boyd {
            (anchor, LowerProvenance::Anchor)
        } else {
            (boyd, LowerProvenance::Boyd)
        }
    }
}

fn argmax_by(bounds: &[NormBound], key: impl Fn(&NormBound) -> f64) -> usize {
    let mut best = 0;
    for (i, b) in bounds.iter().enumerate() {
        if key(b) > key(&bounds[best]) {
            best = i;
        }
    }
    best
}

/// Lower bound from log-convexity of `g(t) = ln ||A||_{1/t}` through the
/// known values at `t = 0, 1/2, 1`.
///
/// For `t >= 1/2` the point `1/2` splits `[0, t]`; for `t <= 1/2` it splits `[t, 1]`.
pub fn anchor_extrapolation(anchors: &AnchorNorms, p: Exponent) -> f64 {
    if anchors.is_zero() {
        return 0.0;
    }
    let t = p.reciprocal();
    let (l1, l2, li) = (anchors.n1.ln(), anchors.n2.ln(), anchors.ninf.ln());
    let g = if t >= 0.5 {
        let lambda = 0.5 / t;
        (l2 - (1.0 - lambda) * li) / lambda
    } else {
        let mu = (0.5 - t) / (1.0 - t);
        (l2 - mu * l1) / (1.0 - mu)
    };
    g.exp()
}

/// Certified interval for `||A||_{p,p}` with default options.
pub fn certified_bound(a: &CMatrix, p: Exponent, seed: u64) -> Result<NormBound> {
    certified_bound_with(a, p, seed, &BoundOptions::default())
}

pub fn certified_bound_with(a: &CMatrix, p: Exponent, seed: u64, options: &BoundOptions) -> Result<NormBound> {
    Ok(Certifier::new(a, options)?.bound(p, seed))
}
