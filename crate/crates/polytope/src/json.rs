//! JSON serialization of labelled quads.
//!
//! Two input modes are accepted, discriminated by a `"mode"` tag:
//!
//! ```json
//! {"mode": "normal_form", "epsilon": "1/2", "eta": "1/3",
//!  "r": ["1", "1", "1", "1"]}
//! ```
//!
//! with labels in facet order `[alpha0, alphaInf, beta0, betaInf]`
//! (a zero label marks the facet as omitted), and
//!
//! ```json
//! {"mode": "raw",
//!  "vertices": [[x, y], ...],   // order [A0B0, AIBI, A0BI, AIB0]
//!  "normals": [[a, b, c], ...], // order [beta0, alpha0, betaInf, alphaInf]
//!  "omitted": ["alpha0"]}       // optional
//! ```
//!
//! where a normal `[a, b, c]` is the affine function `a + b·x + c·y`.
//! Numeric values may be JSON integers or strings (`"p/q"`, integers, or
//! exact decimals).  Emission always uses canonical strings.

use crate::affine::{AffineFn, P2};
use crate::quad::{FacetId, LabelledQuad};
use crate::PolytopeError;
use exactcore::{parse_rat, rat_to_string, Rat};
use num_traits::Zero;
use serde_json::{json, Value};

/// Order in which raw-mode normals are listed in JSON.
const RAW_NORMAL_ORDER: [FacetId; 4] = [
    FacetId::Beta0,
    FacetId::Alpha0,
    FacetId::BetaInf,
    FacetId::AlphaInf,
];

/// Parse a labelled quad from either JSON input mode.
pub fn quad_from_json(v: &Value) -> Result<LabelledQuad, PolytopeError> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("input must be a JSON object"))?;
    let mode = obj
        .get("mode")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"mode\" tag"))?;
    match mode {
        "normal_form" => {
            let eps = rat_field(obj.get("epsilon"), "epsilon")?;
            let eta = rat_field(obj.get("eta"), "eta")?;
            let r_arr = obj
                .get("r")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"r\" array"))?;
            if r_arr.len() != 4 {
                return Err(bad("\"r\" must list four labels"));
            }
            let mut r = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
            for (j, rv) in r_arr.iter().enumerate() {
                r[j] = value_to_rat(rv, "r")?;
            }
            LabelledQuad::from_normal_form(eps, eta, r)
        }
        "raw" => {
            let verts = obj
                .get("vertices")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"vertices\" array"))?;
            if verts.len() != 4 {
                return Err(bad("\"vertices\" must list four points"));
            }
            let mut vertices: Vec<P2> = Vec::with_capacity(4);
            for pv in verts {
                let pair = pv
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| bad("each vertex must be a pair [x, y]"))?;
                vertices.push([
                    value_to_rat(&pair[0], "vertex")?,
                    value_to_rat(&pair[1], "vertex")?,
                ]);
            }
            let norms = obj
                .get("normals")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"normals\" array"))?;
            if norms.len() != 4 {
                return Err(bad("\"normals\" must list four affine functions"));
            }
            // Reorder from JSON order to internal facet order.
            let mut normals_internal: [Option<AffineFn>; 4] = [None, None, None, None];
            for (k, nv) in norms.iter().enumerate() {
                let triple = nv
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| bad("each normal must be a triple [a, b, c]"))?;
                let f = RAW_NORMAL_ORDER[k];
                normals_internal[f.index()] = Some(AffineFn::new(
                    value_to_rat(&triple[0], "normal")?,
                    value_to_rat(&triple[1], "normal")?,
                    value_to_rat(&triple[2], "normal")?,
                ));
            }
            let normals = normals_internal.map(|n| n.expect("all four filled"));
            let mut omitted = Vec::new();
            if let Some(om) = obj.get("omitted") {
                let listed = om
                    .as_array()
                    .ok_or_else(|| bad("\"omitted\" must be an array of facet tags"))?;
                for tag in listed {
                    let t = tag
                        .as_str()
                        .ok_or_else(|| bad("omitted facet tags must be strings"))?;
                    let f = FacetId::from_tag(t).ok_or_else(|| {
                        bad("unknown facet tag (expected alpha0/alphaInf/beta0/betaInf)")
                    })?;
                    omitted.push(f);
                }
            }
            let verts_arr: [P2; 4] = [
                vertices[0].clone(),
                vertices[1].clone(),
                vertices[2].clone(),
                vertices[3].clone(),
            ];
            LabelledQuad::from_raw(verts_arr, normals, &omitted)
        }
        other => Err(bad(&format!("unknown mode {:?}", other))),
    }
}

/// Parse a labelled quad from a JSON string.
pub fn quad_from_json_str(s: &str) -> Result<LabelledQuad, PolytopeError> {
    let v: Value = serde_json::from_str(s)
        .map_err(|e| PolytopeError::BadInput(format!("invalid JSON: {}", e)))?;
    quad_from_json(&v)
}

/// Emit the normal-form JSON representation (canonical for any quad).
pub fn quad_to_normal_form_json(q: &LabelledQuad) -> Value {
    json!({
        "mode": "normal_form",
        "epsilon": rat_to_string(q.eps()),
        "eta": rat_to_string(q.eta()),
        "r": FacetId::ALL.map(|f| rat_to_string(q.label(f))),
    })
}

/// Emit the raw JSON representation (vertices and normals in the frame the
/// quad was built in).
pub fn quad_to_raw_json(q: &LabelledQuad) -> Value {
    let verts: Vec<Value> = q
        .vertices()
        .iter()
        .map(|p| json!([rat_to_string(&p[0]), rat_to_string(&p[1])]))
        .collect();
    let normals: Vec<Value> = RAW_NORMAL_ORDER
        .iter()
        .map(|f| {
            let n = q.normal(*f);
            let c = n.coeffs();
            json!([
                rat_to_string(&c[0]),
                rat_to_string(&c[1]),
                rat_to_string(&c[2])
            ])
        })
        .collect();
    let omitted: Vec<Value> = q
        .omitted_facets()
        .into_iter()
        .map(|f| json!(f.tag()))
        .collect();
    json!({
        "mode": "raw",
        "vertices": verts,
        "normals": normals,
        "omitted": omitted,
    })
}

fn bad(msg: &str) -> PolytopeError {
    PolytopeError::BadInput(msg.to_string())
}

fn rat_field(v: Option<&Value>, name: &str) -> Result<Rat, PolytopeError> {
    value_to_rat(
        v.ok_or_else(|| bad(&format!("missing \"{}\"", name)))?,
        name,
    )
}

/// Accept an exact numeric value: a JSON integer or a string holding an
/// integer, fraction `p/q`, or exact decimal.  Floats are rejected (inputs
/// must be exact).
pub fn value_to_rat(v: &Value, context: &str) -> Result<Rat, PolytopeError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Err(bad(&format!(
                    "{}: non-integer JSON numbers are not exact; pass a string like \"1/3\"",
                    context
                )))
            }
        }
        Value::String(s) => parse_rat(s)
            .ok_or_else(|| bad(&format!("{}: cannot parse {:?} as a rational", context, s))),
        _ => Err(bad(&format!(
            "{}: expected a number or string, got {}",
            context, v
        ))),
    }
}
