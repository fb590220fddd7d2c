//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes matrix or coefficient text and returns a JSON string.
//! The work happens in plain functions that return `Result<String, String>`
//! so they can be tested natively.

use pnorm::io::{from_csv, parse_complex};
use pnorm::structured::{classify_circulant_la, doubly_balanced_norm, Circulant, Densify, HankelMod, UnitaryPermutation};
use pnorm::{default_grid, is_log_affine, profile_with, BoundOptions, CMatrix, Certifier, Complex64, PNormProfile};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Rows on separate lines or separated by `;`, entries by `,`.
pub fn parse_matrix(text: &str) -> Result<CMatrix, String> {
    let a = from_csv(&text.replace(';', "\n")).map_err(|e| e.to_string())?;
    a.require_square().map_err(|e| e.to_string())?;
    Ok(a)
}

fn rows_text(a: &CMatrix) -> Vec<Vec<String>> {
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|z| pnorm::io::format_complex(*z)).collect())
        .collect()
}

fn profile_value(a: &CMatrix, seed: u64) -> Result<Value, String> {
    let options = BoundOptions::default();
    let structure = Certifier::new(a, &options).map_err(|e| e.to_string())?.structure();
    let prof: PNormProfile = profile_with(a, &default_grid(), seed, &options).map_err(|e| e.to_string())?;
    let points: Vec<Value> = prof
        .bounds
        .iter()
        .zip(&prof.envelope)
        .map(|(b, env)| {
            json!({
                "p": b.p,
                "t": b.p.reciprocal(),
                "lower": b.lower,
                "upper": b.upper,
                "envelope": env,
                "lower_provenance": b.lower_provenance,
                "upper_provenance": b.upper_provenance,
            })
        })
        .collect();
    Ok(json!({
        "structure": structure,
        "anchors": prof.anchors,
        "diagnostics": prof.diagnostics,
        "points": points,
    }))
}

pub fn profile_report(matrix: &str, seed: u64) -> Result<String, String> {
    let a = parse_matrix(matrix)?;
    Ok(profile_value(&a, seed)?.to_string())
}

pub fn classify_report(matrix: &str) -> Result<String, String> {
    let a = parse_matrix(matrix)?;
    let anchor = is_log_affine(&a, pnorm::interp::DEFAULT_LA_TOL).map_err(|e| e.to_string())?;
    let structure = Certifier::new(&a, &BoundOptions::default())
        .map_err(|e| e.to_string())?
        .structure();
    Ok(json!({
        "structure": structure,
        "doubly_balanced": doubly_balanced_norm(&a),
        "circulant": Circulant::recognize(&a).map(|c| classify_circulant_la(&c)),
        "hankel_mod": HankelMod::recognize(&a).is_some(),
        "unitary_permutation": UnitaryPermutation::recognize(&a).is_some(),
        "anchor_test": anchor,
    })
    .to_string())
}

pub fn circulant_report(coeffs: &str, seed: u64) -> Result<String, String> {
    let coeffs: Vec<Complex64> = coeffs
        .split(',')
        .map(parse_complex)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let c = Circulant::new(coeffs).map_err(|e| e.to_string())?;
    let a = c.densify();
    Ok(json!({
        "matrix": rows_text(&a),
        "spectrum": c.spectrum(),
        "abs_sum": c.abs_sum(),
        "witness": classify_circulant_la(&c),
        "profile": profile_value(&a, seed)?,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Bounds over the default exponent grid.
#[wasm_bindgen]
pub fn profile(matrix: &str, seed: u32) -> Result<String, JsError> {
    js(profile_report(matrix, seed.into()))
}

/// Structural recognizers and the anchor test.
#[wasm_bindgen]
pub fn classify(matrix: &str) -> Result<String, JsError> {
    js(classify_report(matrix))
}

/// Dense form, spectrum, LA witness and profile of a circulant.
#[wasm_bindgen]
pub fn circulant(coeffs: &str, seed: u32) -> Result<String, JsError> {
    js(circulant_report(coeffs, seed.into()))
}
