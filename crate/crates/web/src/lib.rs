//! Browser bindings: each export takes a problem in the text or JSON format
//! and returns a JSON string.

use sepvar::enumerate::merged_ideal;
use sepvar::io::{oracle_basis, parse_problem, route_and_solve, ProblemError, SolveError};
use sepvar::poly::merge::phi_merge;
use sepvar::poly::newton::{newton_edges, support};
use sepvar::poly::Poly;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error_json(message: String) -> String {
    json!({ "error": message }).to_string()
}

fn solve_error(e: SolveError) -> String {
    error_json(e.to_string())
}

fn parse_error(e: ProblemError) -> String {
    error_json(e.to_string())
}

/// Generators of the algebra of separated pairs, as a result document.
#[wasm_bindgen]
pub fn separate(problem: &str) -> String {
    let spec = match parse_problem(problem) {
        Ok(s) => s,
        Err(e) => return parse_error(e),
    };
    match route_and_solve(&spec) {
        Ok(doc) => doc.to_json(),
        Err(e) => solve_error(e),
    }
}

/// Basis of all pairs with components of degree at most `max_degree`.
#[wasm_bindgen]
pub fn oracle(problem: &str, max_degree: u32) -> String {
    let spec = match parse_problem(problem) {
        Ok(s) => s,
        Err(e) => return parse_error(e),
    };
    match oracle_basis(&spec, max_degree) {
        Ok(basis) => json!({ "max-degree": max_degree, "basis": basis }).to_string(),
        Err(e) => solve_error(e),
    }
}

/// Newton polygon in `s`, `t` of the merged first generator, over `Q`.
#[wasm_bindgen]
pub fn newton_polygon(problem: &str) -> String {
    let spec = match parse_problem(problem) {
        Ok(s) => s,
        Err(e) => return parse_error(e),
    };
    let part = match spec.partition() {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let names = part.names();
    let p: Poly<sepvar::field::Rational> =
        match sepvar::io::parse_poly(&spec.generators[0], &names[..part.n() + part.m()]) {
            Ok(p) => p,
            Err(e) => return error_json(format!("newton polygon needs rational coefficients: {e}")),
        };
    let merged = phi_merge(&p, &part);
    let (s, t) = (part.s(), part.t());
    let edges: Vec<Value> = newton_edges(&merged, s, t)
        .unwrap_or_default()
        .iter()
        .map(|e| {
            json!({
                "normal": [e.normal.0, e.normal.1],
                "start": [e.start.0, e.start.1],
                "end": [e.end.0, e.end.1],
                "axis-to-axis": e.is_axis_to_axis(),
                "poly": e.poly.render(&names),
            })
        })
        .collect();
    let basis: Vec<String> = merged_ideal(std::slice::from_ref(&p), &part)
        .polys()
        .iter()
        .map(|q| sepvar::principal::from_bivariate(q, &part).render(&names))
        .collect();
    json!({
        "merged": merged.render(&names),
        "support": support(&merged, s, t).iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        "edges": edges,
        "merged-basis": basis,
    })
    .to_string()
}
