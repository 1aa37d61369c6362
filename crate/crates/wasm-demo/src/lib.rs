//! Browser bindings: each export takes text inputs and returns a JSON string.
//! The `*_json` functions hold the logic so they can be tested natively.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use eqos_core::arrangement::{parse_arrangement, Arrangement};
use eqos_core::exact::parse_rational;
use eqos_core::invariants::{distinguish, fingerprint, Verdict, NOT_DISTINGUISHED_NOTE};
use eqos_core::presentations::{eq_ideal, os_ideal, parse_ideal, specialize, vg_dimension};

fn arrangement(text: &str) -> Result<Arrangement, String> {
    parse_arrangement(text).map_err(|e| e.to_string())
}

/// Chambers, faces and Hilbert functions of an arrangement, plus float copies
/// of its forms for drawing.
pub fn analyze_json(text: &str) -> Result<Value, String> {
    let a = arrangement(text)?;
    let faces = a.enumerate_faces().map_err(|e| e.to_string())?;
    let chambers: Vec<String> = faces.iter().filter(|f| f.is_chamber()).map(|f| f.to_string()).collect();
    let d = a.rank() + 2;
    let err = |e: eqos_core::Error| e.to_string();
    let eq = eq_ideal(&a).map_err(err)?;
    let vg = specialize(&eq, 1).map_err(err)?;
    let forms: Vec<Vec<f64>> = a
        .forms()
        .iter()
        .map(|f| {
            f.normal
                .iter()
                .chain([&f.offset])
                .map(|q| q.to_f64().unwrap_or(f64::NAN))
                .collect()
        })
        .collect();
    Ok(json!({
        "dimension": a.dim(),
        "hyperplanes": a.len(),
        "rank": a.rank(),
        "faces": faces.len(),
        "chambers": chambers,
        "degree": d,
        "os_hilbert": os_ideal(&a).map_err(err)?.hilbert_function(d),
        "eq_hilbert": eq.hilbert_function(d),
        "vg_dimension": vg_dimension(&vg),
        "forms": forms,
    }))
}

/// Sign vector of the point `(x, y)`, rounded to hundredths so the test is
/// exact.
pub fn locate_json(text: &str, x: f64, y: f64) -> Result<Value, String> {
    let a = arrangement(text)?;
    if a.dim() != 2 {
        return Err("point location needs a plane arrangement".into());
    }
    let p: Vec<_> = [x, y]
        .iter()
        .map(|v| parse_rational(&format!("{}/100", (v * 100.0).round() as i64)))
        .collect::<Option<_>>()
        .ok_or("coordinates must be finite")?;
    Ok(json!({ "sign_vector": a.sign_vector_at(&p).to_string() }))
}

/// Generators with provenance, reduced Groebner basis and Hilbert function.
pub fn presentation_json(text: &str, ring: &str, degree: usize) -> Result<Value, String> {
    let a = arrangement(text)?;
    let err = |e: eqos_core::Error| e.to_string();
    let p = match ring {
        "os" => os_ideal(&a).map_err(err)?,
        "eq" => eq_ideal(&a).map_err(err)?,
        "vg" => specialize(&eq_ideal(&a).map_err(err)?, 1).map_err(err)?,
        other => return Err(format!("unknown ring {other:?}; use os, eq or vg")),
    };
    let show = |g: &eqos_core::poly::Gf2Poly| g.display(&p.ring).to_string();
    let generators: Vec<Value> = p
        .generators
        .iter()
        .zip(&p.provenance)
        .map(|(g, prov)| json!({ "poly": show(g), "from": prov.to_string() }))
        .collect();
    let gb: Vec<String> = p.groebner().iter().map(show).collect();
    let mut out = json!({ "ring": ring, "generators": generators, "groebner": gb });
    if ring == "vg" {
        out["total_dimension"] = json!(vg_dimension(&p));
    } else {
        out["hilbert"] = json!(p.hilbert_function(degree));
    }
    Ok(out)
}

/// Runs the invariant ladder on two ideal files.
pub fn compare_json(left: &str, right: &str, degree: usize) -> Result<Value, String> {
    let err = |e: eqos_core::Error| e.to_string();
    let (a, b) = (parse_ideal(left).map_err(err)?, parse_ideal(right).map_err(err)?);
    if a.ring != b.ring {
        return Err("the two ideals live in different rings".into());
    }
    let (qa, qb) = (a.quotient(degree + 1), b.quotient(degree + 1));
    let verdict = distinguish(&qa, &qb, degree).map_err(err)?;
    let detail = match &verdict {
        Verdict::Distinguished { certificate } => certificate.to_string(),
        Verdict::NotDistinguished => NOT_DISTINGUISHED_NOTE.to_string(),
    };
    Ok(json!({
        "verdict": verdict.label(),
        "detail": detail,
        "hilbert": [qa.hilbert_function(degree).map_err(err)?, qb.hilbert_function(degree).map_err(err)?],
        "fingerprint": [fingerprint(&qa, degree).map_err(err)?.to_string(), fingerprint(&qb, degree).map_err(err)?.to_string()],
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    to_js(analyze_json(text))
}

#[wasm_bindgen]
pub fn locate(text: &str, x: f64, y: f64) -> Result<String, JsValue> {
    to_js(locate_json(text, x, y))
}

#[wasm_bindgen]
pub fn presentation(text: &str, ring: &str, degree: usize) -> Result<String, JsValue> {
    to_js(presentation_json(text, ring, degree))
}

#[wasm_bindgen]
pub fn compare(left: &str, right: &str, degree: usize) -> Result<String, JsValue> {
    to_js(compare_json(left, right, degree))
}

/// Bundled inputs for the page's example menu.
#[wasm_bindgen]
pub fn examples() -> String {
    use eqos_core::fixtures;
    json!({
        "arrangements": fixtures::ARRANGEMENTS.iter().filter(|(_, t)| parse_arrangement(t).is_ok_and(|a| a.dim() == 2)).map(|(n, t)| json!({"name": n, "text": t})).collect::<Vec<_>>(),
        "ideals": fixtures::IDEALS.iter().map(|(n, t)| json!({"name": n, "text": t})).collect::<Vec<_>>(),
    })
    .to_string()
}
