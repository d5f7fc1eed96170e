//! Browser bindings. Each exported function returns a JSON string; the plain
//! `*_json` functions hold the logic so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use qpart::diagrams::{self, Diagram};
use qpart::identities::{self, CaseId, CaseSpec};
use qpart::involutions::{self, InvolutionError};
use qpart::mocktheta;
use qpart::{DiagramStyle, Partition};

/// Largest order the page may request; enumeration cost grows like p(order).
pub const MAX_ORDER: usize = 60;
/// Largest catalog size the page may request.
pub const MAX_CATALOG_N: u32 = 40;

fn describe(r: &identities::VerificationReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

/// Verifies one identity and returns its report together with the leading
/// coefficients of the left side, the product side and the correction.
/// `case` is one of `i`..`vi`, `mock9` or `rank`.
pub fn explore_case_json(case: &str, order: usize) -> Result<String, String> {
    if order > MAX_ORDER {
        return Err(format!("order {} exceeds {}", order, MAX_ORDER));
    }
    let value = match case {
        "mock9" => json!({ "report": describe(&mocktheta::verify_identity9(order).map_err(|e| e.to_string())?) }),
        "rank" => {
            let report = mocktheta::verify_rank(order).map_err(|e| e.to_string())?;
            let left = mocktheta::rank_sum_series(order).map_err(|e| e.to_string())?;
            json!({ "report": describe(&report), "lhs": left.coeffs() })
        }
        other => {
            let id: CaseId = other.parse().map_err(|e: identities::UnknownCase| e.to_string())?;
            let spec = CaseSpec::get(id);
            let run = || -> qpart::series::Result<Value> {
                let report = identities::verify(id, order)?;
                Ok(json!({
                    "report": describe(&report),
                    "lhs": identities::lhs_tail_sum(&spec, order)?.coeffs(),
                    "product": identities::product_side(&spec, order)?.coeffs(),
                    "correction": identities::g_series(id, order)?.coeffs(),
                }))
            };
            run().map_err(|e| e.to_string())?
        }
    };
    Ok(value.to_string())
}

fn parse_style(style: &str) -> Result<DiagramStyle, String> {
    match style {
        "odd" => Ok(DiagramStyle::OddRestricted),
        "even" => Ok(DiagramStyle::EvenRestricted),
        other => Err(format!("unknown style {:?} (expected odd or even)", other)),
    }
}

fn diagram_of(lambda: &Partition, style: DiagramStyle) -> Result<Diagram, String> {
    match style {
        DiagramStyle::OddRestricted => diagrams::to_odd_diagram(lambda),
        DiagramStyle::EvenRestricted => diagrams::to_even_diagram(lambda),
    }
    .map_err(|e| e.to_string())
}

fn shown(lambda: &Partition, d: &Diagram) -> Value {
    json!({ "parts": lambda.parts(), "label": lambda.to_string(), "rows": d.rows() })
}

/// Renders the 2/1 diagram of `parts` and the diagram of its partner under
/// the pairing for `style`; `partner` is null for an unpaired partition.
pub fn diagram_pair_json(parts: &str, style: &str) -> Result<String, String> {
    let style = parse_style(style)?;
    let lambda: Partition = parts
        .parse()
        .map_err(|e: qpart::partitions::PartitionError| e.to_string())?;
    let d = diagram_of(&lambda, style)?;
    let image = match style {
        DiagramStyle::OddRestricted => involutions::sigma_odd(&lambda),
        DiagramStyle::EvenRestricted => involutions::sigma_even(&lambda),
    };
    let partner = match image {
        Ok(p) => shown(&p, &diagram_of(&p, style)?),
        Err(InvolutionError::Exceptional { .. }) => Value::Null,
        Err(e) => return Err(e.to_string()),
    };
    Ok(json!({ "style": style, "input": shown(&lambda, &d), "partner": partner }).to_string())
}

/// Both sides of the rank identity at `n`.
pub fn rank_catalog_json(n: u32) -> Result<String, String> {
    if n > MAX_CATALOG_N {
        return Err(format!("n {} exceeds {}", n, MAX_CATALOG_N));
    }
    let c = mocktheta::catalog(n);
    let row = |e: &mocktheta::RankCatalogEntry| json!({ "label": e.partition.to_string(), "rank": e.rank, "weight": e.multiplicity });
    Ok(json!({
        "n": n,
        "left": c.left.iter().map(row).collect::<Vec<_>>(),
        "right": c.right.iter().map(row).collect::<Vec<_>>(),
        "leftTotal": c.left_total(),
        "rightTotal": c.right_total(),
    })
    .to_string())
}

fn to_js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = exploreCase)]
pub fn explore_case(case: &str, order: usize) -> Result<String, JsError> {
    to_js(explore_case_json(case, order))
}

#[wasm_bindgen(js_name = diagramPair)]
pub fn diagram_pair(parts: &str, style: &str) -> Result<String, JsError> {
    to_js(diagram_pair_json(parts, style))
}

#[wasm_bindgen(js_name = rankCatalog)]
pub fn rank_catalog(n: u32) -> Result<String, JsError> {
    to_js(rank_catalog_json(n))
}
