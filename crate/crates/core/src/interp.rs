//! Interpolation upper bounds, the logarithmic-affine test and norm profiles.

use serde::Serialize;

use crate::error::{NormError, Result};
use crate::estimator::{BoundOptions, Certifier};
use crate::exact::{anchor_norms, AnchorNorms};
use crate::exponent::Exponent;
use crate::matrix::CMatrix;

/// Where a lower bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerProvenance {
    OnesVector,
    EigenCertificate,
    Boyd,
    Oracle,
    Anchor,
    /// Exact value from a recognized structure (tensor construction, direct sum part).
    Structured,
}

/// Where an upper bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperProvenance {
    Anchor,
    RieszThorin,
    TwoNormScaled,
    SelfAdjoint,
    Structured,
}

/// A certified interval for `||A||_{p,p}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormBound {
    pub p: Exponent,
    pub lower: f64,
    pub upper: f64,
    pub lower_provenance: LowerProvenance,
    pub upper_provenance: UpperProvenance,
}

impl NormBound {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn relative_width(&self) -> f64 {
        if self.upper == 0.0 {
            0.0
        } else {
            self.width() / self.upper
        }
    }
}

/// Upper side of a [`NormBound`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UpperBound {
    pub value: f64,
    pub provenance: UpperProvenance,
}

/// `v1^{1-theta} v2^theta` with `1/p = (1-theta)/p1 + theta/p2`.
pub fn riesz_thorin_bound(p: Exponent, p1: Exponent, v1: f64, p2: Exponent, v2: f64) -> Result<f64> {
    let (t, t1, t2) = (p.reciprocal(), p1.reciprocal(), p2.reciprocal());
    if t < t1.min(t2) || t > t1.max(t2) {
        return Err(NormError::Range {
            p: p.to_string(),
            p1: p1.to_string(),
            p2: p2.to_string(),
        });
    }
    if t == t1 {
        return Ok(v1);
    }
    if t == t2 {
        return Ok(v2);
    }
    let theta = (t1 - t) / (t1 - t2);
    Ok(v1.powf(1.0 - theta) * v2.powf(theta))
}

/// `n1^{1/p} ninf^{1-1/p}`, the norm of an LA matrix with these anchors.
pub fn la_envelope(anchors: &AnchorNorms, p: Exponent) -> f64 {
    match p {
        Exponent::Infinity => anchors.ninf,
        _ if p.is_one() => anchors.n1,
        _ => {
            let t = p.reciprocal();
            anchors.n1.powf(t) * anchors.ninf.powf(1.0 - t)
        }
    }
}

/// Smallest of the interpolation bounds at `p` for a square matrix.
pub fn upper_bound(a: &CMatrix, p: Exponent) -> Result<UpperBound> {
    let anchors = anchor_norms(a)?;
    Ok(upper_bound_from_anchors(&anchors, a.rows(), is_self_adjoint(a), p))
}

/// [`upper_bound`] from precomputed anchors of an `n x n` matrix.
///
/// Candidates are the envelope through `(1, n1)` and `(inf, ninf)`, the
/// segment through `(1, n1), (2, n2)` or `(2, n2), (inf, ninf)`, and
/// `n^{|1/2 - 1/p|} n2`. On ties the segment wins. At `p` in `{1, 2, inf}`
/// the value is the anchor itself.
pub fn upper_bound_from_anchors(
    anchors: &AnchorNorms,
    n: usize,
    self_adjoint: bool,
    p: Exponent,
) -> UpperBound {
    if let Some(v) = anchors.at(p) {
        return UpperBound {
            value: v,
            provenance: UpperProvenance::Anchor,
        };
    }
    let segment = if p < Exponent::TWO {
        riesz_thorin_bound(p, Exponent::ONE, anchors.n1, Exponent::TWO, anchors.n2)
    } else {
        riesz_thorin_bound(p, Exponent::TWO, anchors.n2, Exponent::INF, anchors.ninf)
    }
    .expect("p lies between the segment ends");
    let mut best = UpperBound {
        value: segment,
        provenance: if self_adjoint {
            UpperProvenance::SelfAdjoint
        } else {
            UpperProvenance::RieszThorin
        },
    };
    let envelope = la_envelope(anchors, p);
    if envelope < best.value {
        best = UpperBound {
            value: envelope,
            provenance: UpperProvenance::RieszThorin,
        };
    }
    let scaled = (n as f64).powf((0.5 - p.reciprocal()).abs()) * anchors.n2;
    if scaled < best.value {
        best = UpperBound {
            value: scaled,
            provenance: UpperProvenance::TwoNormScaled,
        };
    }
    best
}

pub(crate) fn is_self_adjoint(a: &CMatrix) -> bool {
    a.is_square() && a.max_abs_diff(&a.adjoint()) <= 1e-12 * a.max_abs()
}

/// Result of the logarithmic-affine test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaClassification {
    pub is_la: bool,
    pub n1: f64,
    pub n2: f64,
    pub ninf: f64,
    /// `n2 / sqrt(n1 ninf)`, at most one; one for the zero matrix.
    pub ratio: f64,
    /// The matrix is zero.
    pub degenerate: bool,
}

pub const DEFAULT_LA_TOL: f64 = 1e-9;

/// LA iff `n2 >= (1 - tol) sqrt(n1 ninf)`; equality at the single interior
/// point `p = 2` forces equality everywhere.
pub fn is_log_affine(a: &CMatrix, tol: f64) -> Result<LaClassification> {
    Ok(classify_anchors(&anchor_norms(a)?, tol))
}

pub fn classify_anchors(anchors: &AnchorNorms, tol: f64) -> LaClassification {
    let AnchorNorms { n1, n2, ninf } = *anchors;
    if anchors.is_zero() {
        return LaClassification {
            is_la: true,
            n1,
            n2,
            ninf,
            ratio: 1.0,
            degenerate: true,
        };
    }
    let ratio = n2 / (n1 * ninf).sqrt();
    LaClassification {
        is_la: ratio >= 1.0 - tol,
        n1,
        n2,
        ninf,
        ratio,
        degenerate: false,
    }
}

/// Checks `f(q0)^{1/p - 1/r} = f(p)^{1/q0 - 1/r} f(r)^{1/p - 1/q0}` to `1e-9`
/// relative, for `p < q0 < r`.
pub fn three_point_log_affinity(
    f_p: f64,
    f_q0: f64,
    f_r: f64,
    p: Exponent,
    q0: Exponent,
    r: Exponent,
) -> Result<bool> {
    if !(f_p > 0.0 && f_q0 > 0.0 && f_r > 0.0) {
        return Err(NormError::Domain("profile values must be positive".into()));
    }
    if !(p < q0 && q0 < r) {
        return Err(NormError::Argument(format!("need p < q0 < r, got {p}, {q0}, {r}")));
    }
    let (tp, tq, tr) = (p.reciprocal(), q0.reciprocal(), r.reciprocal());
    let lhs = (tp - tr) * f_q0.ln();
    let rhs = (tq - tr) * f_p.ln() + (tp - tq) * f_r.ln();
    Ok((lhs - rhs).abs() <= 1e-9)
}

/// `{1, 1.25, 1.5, 2, 3, 4, 8, inf}` and the dual of each finite point, sorted.
pub fn default_grid() -> Vec<Exponent> {
    let base = [1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 8.0];
    let mut grid: Vec<Exponent> = base
        .iter()
        .flat_map(|&p| [Exponent::Finite(p), Exponent::Finite(p).dual()])
        .chain([Exponent::INF])
        .collect();
    grid.sort_by(|a, b| a.partial_cmp(b).expect("exponents are ordered"));
    grid.dedup_by(|a, b| a.approx_eq(*b, 1e-12));
    grid
}

/// Checks that a grid is strictly increasing and contains `1`, `2` and `inf`.
pub fn validate_grid(grid: &[Exponent]) -> Result<()> {
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(NormError::Argument("grid must be strictly increasing".into()));
    }
    for anchor in [Exponent::ONE, Exponent::TWO, Exponent::INF] {
        if !grid.contains(&anchor) {
            return Err(NormError::Argument(format!("grid must contain {anchor}")));
        }
    }
    Ok(())
}

/// Shape diagnostics for a sampled profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileDiagnostics {
    /// `g(t) = ln upper(1/t)` passes the chord test on consecutive triples.
    pub convex: bool,
    /// Upper values are nonincreasing then nondecreasing along the grid.
    pub unimodal: bool,
    /// Grid point minimizing the upper envelope.
    pub p0: Exponent,
    /// Neighboring grid points around the minimizing run.
    pub p0_interval: (Exponent, Exponent),
    /// The matrix is zero.
    pub degenerate: bool,
}

/// Bounds on `f(p) = ||A||_{p,p}` sampled over a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PNormProfile {
    pub grid: Vec<Exponent>,
    pub bounds: Vec<NormBound>,
    /// `(t, ln upper)` with `t = 1/p`.
    pub g_values: Vec<(f64, f64)>,
    /// `la_envelope` at each grid point.
    pub envelope: Vec<f64>,
    pub anchors: AnchorNorms,
    pub diagnostics: ProfileDiagnostics,
}

pub fn profile(a: &CMatrix, grid: &[Exponent], seed: u64) -> Result<PNormProfile> {
    profile_with(a, grid, seed, &BoundOptions::default())
}

pub fn profile_with(
    a: &CMatrix,
    grid: &[Exponent],
    seed: u64,
    options: &BoundOptions,
) -> Result<PNormProfile> {
    validate_grid(grid)?;
    let certifier = Certifier::new(a, options)?;
    let anchors = *certifier.anchors();
    let bounds: Vec<NormBound> = grid.iter().map(|&p| certifier.bound(p, seed)).collect();
    let g_values: Vec<(f64, f64)> = bounds.iter().map(|b| (b.p.reciprocal(), b.upper.ln())).collect();
    let envelope = grid.iter().map(|&p| la_envelope(&anchors, p)).collect();
    let uppers: Vec<f64> = bounds.iter().map(|b| b.upper).collect();
    let degenerate = anchors.is_zero();
    let (lo, hi) = argmin_run(grid, &uppers);
    let p0 = pick_p0(grid, lo, hi);
    let diagnostics = ProfileDiagnostics {
        convex: degenerate || chord_test(&g_values, 1e-9),
        unimodal: degenerate || is_unimodal(&uppers, 1e-9),
        p0,
        p0_interval: (grid[lo.saturating_sub(1)], grid[(hi + 1).min(grid.len() - 1)]),
        degenerate,
    };
    Ok(PNormProfile {
        grid: grid.to_vec(),
        bounds,
        g_values,
        envelope,
        anchors,
        diagnostics,
    })
}

/// True when every middle point of a consecutive triple lies on or below
/// the chord of its neighbors, up to `slack`.
pub fn chord_test(points: &[(f64, f64)], slack: f64) -> bool {
    points.windows(3).all(|w| {
        let ((ta, ga), (tb, gb), (tc, gc)) = (w[0], w[1], w[2]);
        let chord = ga + (gc - ga) * (tb - ta) / (tc - ta);
        gb <= chord + slack
    })
}

/// Nonincreasing then nondecreasing, with relative slack.
pub fn is_unimodal(values: &[f64], rel_tol: f64) -> bool {
    let slack = |a: f64, b: f64| rel_tol * a.abs().max(b.abs());
    let mut i = 1;
    while i < values.len() && values[i] <= values[i - 1] + slack(values[i], values[i - 1]) {
        i += 1;
    }
    while i < values.len() && values[i] + slack(values[i], values[i - 1]) >= values[i - 1] {
        i += 1;
    }
    i >= values.len()
}

/// Index range of the maximal run of grid points tied (to `1e-12` relative)
/// with the minimum that contains the preferred minimizer.
fn argmin_run(grid: &[Exponent], values: &[f64]) -> (usize, usize) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let tied = |v: f64| v - min <= 1e-12 * min.abs();
    let best = pick_index(grid, values, &tied);
    let mut lo = best;
    while lo > 0 && tied(values[lo - 1]) {
        lo -= 1;
    }
    let mut hi = best;
    while hi + 1 < values.len() && tied(values[hi + 1]) {
        hi += 1;
    }
    (lo, hi)
}

/// Among tied minimizers prefer the one whose `1/p` is closest to `1/2`,
/// then the smallest index.
fn pick_index(grid: &[Exponent], values: &[f64], tied: &dyn Fn(f64) -> bool) -> usize {
    let mut best: Option<usize> = None;
    for (i, &v) in values.iter().enumerate() {
        if !tied(v) {
            continue;
        }
        let d = (grid[i].reciprocal() - 0.5).abs();
        match best {
            Some(b) if (grid[b].reciprocal() - 0.5).abs() <= d => {}
            _ => best = Some(i),
        }
    }
    best.unwrap_or(0)
}

fn pick_p0(grid: &[Exponent], lo: usize, hi: usize) -> Exponent {
    (lo..=hi)
        .min_by(|&a, &b| {
            let da = (grid[a].reciprocal() - 0.5).abs();
            let db = (grid[b].reciprocal() - 0.5).abs();
            da.total_cmp(&db).then(a.cmp(&b))
        })
        .map(|i| grid[i])
        .expect("nonempty run")
}
