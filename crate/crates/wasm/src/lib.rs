//! Browser bindings for the interactive demo page.
//!
//! Every export returns a JSON string: a payload object on success, or
//! `{"error": "..."}` on bad input, so the page never deals with thrown
//! values crossing the FFI boundary. The functions are plain Rust on
//! non-wasm targets, which keeps them testable on the host.

use num_traits::ToPrimitive;
use serde_json::json;
use supertree::{qdyck, spectral, BranchingProfile};
use wasm_bindgen::prelude::wasm_bindgen;

const MAX_LEVELS: usize = 2000;
const MAX_BINS: usize = 400;
// C_m coefficients stay below 2^53 through m = 26
const MAX_CATALAN: usize = 26;

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn histogram(values: &[f64], bins: usize) -> Option<(f64, f64, Vec<f64>)> {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !(lo.is_finite() && hi > lo) {
        return None;
    }
    let width = (hi - lo) / bins as f64;
    let mut density = vec![0.0; bins];
    for &v in values {
        let cell = (((v - lo) / width) as usize).min(bins - 1);
        density[cell] += 1.0;
    }
    let norm = 1.0 / (values.len() as f64 * width);
    for d in &mut density {
        *d *= norm;
    }
    Some((lo, width, density))
}

fn spectrum_payload(profile: &BranchingProfile, bins: usize) -> String {
    if !(2..=MAX_BINS).contains(&bins) {
        return error_json(format!("bins must be in 2..={MAX_BINS}"));
    }
    let eigenvalues = match spectral::transfer_eigenvalues(profile) {
        Ok(e) => e,
        Err(e) => return error_json(e),
    };
    let Some((lo, width, density)) = histogram(&eigenvalues, bins) else {
        return error_json("degenerate spectrum");
    };
    let k = profile.levels();
    let unit_growing = profile.label() == "growing(p0=1, a=1)";
    let cells: Vec<_> = density
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let left = lo + i as f64 * width;
            let mid = left + 0.5 * width;
            json!({
                "left": left,
                "right": left + width,
                "density": d,
                "semicircle": if unit_growing { Some(spectral::semicircle_pdf(mid, k)) } else { None },
            })
        })
        .collect();
    json!({
        "label": profile.label(),
        "levels": k,
        "radius": spectral::moment_radius(&eigenvalues).ok(),
        "bins": cells,
    })
    .to_string()
}

/// Spectral histogram of the growing-rule transfer matrix; negative slopes
/// that the growing rule cannot support fall back to the linear rule, as in
/// the command-line tool.
#[wasm_bindgen]
pub fn growing_spectrum(p0: i64, a: i64, levels: usize, bins: usize) -> String {
    if !(2..=MAX_LEVELS).contains(&levels) {
        return error_json(format!("levels must be in 2..={MAX_LEVELS}"));
    }
    match supertree::auto_profile(p0, a, levels) {
        Ok(profile) => spectrum_payload(&profile, bins),
        Err(e) => error_json(e),
    }
}

/// Spectral histogram of the descending profile (P-1, P-2, ..., 1).
#[wasm_bindgen]
pub fn descending_spectrum(p: usize, bins: usize) -> String {
    if !(2..=MAX_LEVELS).contains(&p) {
        return error_json(format!("P must be in 2..={MAX_LEVELS}"));
    }
    match BranchingProfile::descending(p) {
        Ok(profile) => spectrum_payload(&profile, bins),
        Err(e) => error_json(e),
    }
}

/// The double-scaling observable g_q(z) on a uniform z grid, with the
/// q -> 1 limit curve alongside.
#[wasm_bindgen]
pub fn collapse_curve(q: f64, zmax: f64, points: usize) -> String {
    if !(0.0 < q && q < 1.0) {
        return error_json("q must lie in (0, 1)");
    }
    if !(2..=1000).contains(&points) || !(zmax > 0.0 && zmax.is_finite()) {
        return error_json("need 2..=1000 points and a positive finite zmax");
    }
    let mut zs = Vec::with_capacity(points);
    let mut gs = Vec::with_capacity(points);
    let mut limit = Vec::with_capacity(points);
    for i in 0..points {
        let z = zmax * i as f64 / (points - 1) as f64;
        match qdyck::collapse_observable(q, z) {
            Ok(g) => gs.push(g),
            Err(e) => return error_json(e),
        }
        limit.push(qdyck::collapse_limit(z));
        zs.push(z);
    }
    json!({ "q": q, "z": zs, "g": gs, "limit": limit }).to_string()
}

/// Coefficients of the Carlitz-Riordan q-Catalan polynomial C_m(q),
/// ascending in the area exponent.
#[wasm_bindgen]
pub fn qcatalan_coefficients(m: usize) -> String {
    if m > MAX_CATALAN {
        return error_json(format!("m must be at most {MAX_CATALAN}"));
    }
    let poly = qdyck::carlitz_riordan(m).pop().expect("nonempty");
    let coefficients: Vec<f64> = poly
        .coeffs()
        .iter()
        .map(|c| c.to_f64().expect("fits f64 exactly below the cap"))
        .collect();
    json!({ "m": m, "coefficients": coefficients }).to_string()
}

#[wasm_bindgen]
pub fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}
