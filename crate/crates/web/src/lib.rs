//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export builds a seeded `G(n, m)` instance, runs one operation and
//! returns a JSON document with the edge list, a role per vertex and the
//! run statistics. The `*_json` functions hold the logic so it can be tested
//! natively.

use bdd_core::generate::{gnm, max_edges};
use bdd_core::{
    bound_factor, decompose_with_stats, kernelize, lift_solution, solve_exact,
    validate_decomposition, DegreeBound, ExactConfig, Graph, KernelResult, VertexSet,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Larger graphs are unreadable on a canvas anyway.
pub const MAX_VERTICES: usize = 400;
pub const MAX_DEGREE: usize = 8;
/// Kernel size cap for the exact solver in `solve`.
pub const MAX_EXACT: usize = 24;

fn instance(n: usize, m: usize, seed: u32, d: usize) -> Result<(Graph, DegreeBound), String> {
    if n > MAX_VERTICES {
        return Err(format!("the demo draws at most {MAX_VERTICES} vertices"));
    }
    if d > MAX_DEGREE {
        return Err(format!("the demo accepts d up to {MAX_DEGREE}"));
    }
    if m > max_edges(n) {
        return Err(format!("{n} vertices allow at most {} edges", max_edges(n)));
    }
    let g = gnm(n, m, u64::from(seed)).map_err(|e| e.to_string())?;
    Ok((g, DegreeBound(d)))
}

fn edges(g: &Graph) -> Value {
    g.edges().map(|(u, v)| json!([u, v])).collect()
}

fn roles(n: usize, groups: &[(&'static str, &VertexSet)], rest: &'static str) -> Vec<&'static str> {
    let mut out = vec![rest; n];
    for &(name, set) in groups {
        for v in set {
            out[v] = name;
        }
    }
    out
}

/// One d-bounded decomposition with its witness stars and validator verdicts.
pub fn decompose_json(n: usize, m: usize, seed: u32, d: usize) -> Result<Value, String> {
    let (g, d) = instance(n, m, seed, d)?;
    let (dec, stats) = decompose_with_stats(&g, d);
    let report = validate_decomposition(&g, d, &dec);
    let stars: Vec<Value> = dec
        .witness_packing
        .stars()
        .iter()
        .flat_map(|s| s.leaves.iter().map(move |l| json!([s.center, l])))
        .collect();
    let checks: serde_json::Map<String, Value> = report
        .verdicts()
        .into_iter()
        .map(|(name, verdict)| {
            let text = match verdict {
                Ok(()) => "pass".to_string(),
                Err(v) => v.to_string(),
            };
            (name.to_string(), Value::from(text))
        })
        .collect();
    Ok(json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "d": d.get(),
        "edges": edges(&g),
        "roles": roles(g.vertex_count(), &[("T", &dec.t), ("C", &dec.c), ("I", &dec.i)], "J"),
        "highlight": stars,
        "checks": checks,
        "stats": {
            "initial_stars": stats.initial_stars,
            "packing_upgrades": stats.packing_upgrades,
            "special_set": stats.special_deletion_set_size,
            "repair_iterations": stats.repair_iterations,
            "c_size": dec.c.len(),
            "i_size": dec.i.len(),
            "t_size": dec.t.len(),
            "j_size": dec.j.len(),
        },
    }))
}

fn kernel_document(g: &Graph, d: DegreeBound, r: &KernelResult) -> Value {
    let rounds: Vec<Value> = r
        .stats
        .iter()
        .map(|s| json!({"vertices": s.vertices, "c_added": s.c_added, "i_added": s.i_added}))
        .collect();
    json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "d": d.get(),
        "edges": edges(g),
        "roles": roles(g.vertex_count(), &[("C", &r.c_total), ("I", &r.i_total)], "K"),
        "highlight": [],
        "stats": {
            "rounds": r.rounds,
            "kernel_n": r.kernel.vertex_count(),
            "kernel_m": r.kernel.edge_count(),
            "c_size": r.c_total.len(),
            "i_size": r.i_total.len(),
            "bound_factor": bound_factor(d).expect("demo degree is small"),
        },
        "rounds": rounds,
    })
}

/// Repeated decomposition down to the kernel.
pub fn kernelize_json(n: usize, m: usize, seed: u32, d: usize) -> Result<Value, String> {
    let (g, d) = instance(n, m, seed, d)?;
    let r = kernelize(&g, d);
    Ok(kernel_document(&g, d, &r))
}

/// Kernelize, solve the kernel exactly and lift the solution back.
pub fn solve_json(n: usize, m: usize, seed: u32, d: usize) -> Result<Value, String> {
    let (g, d) = instance(n, m, seed, d)?;
    let r = kernelize(&g, d);
    let cfg = ExactConfig {
        max_vertices: MAX_EXACT,
        ..ExactConfig::default()
    };
    let kernel_solution = solve_exact(&r.kernel, d, cfg).map_err(|e| {
        format!(
            "kernel has {} vertices; the exact solver is capped ({e})",
            r.kernel.vertex_count()
        )
    })?;
    let lifted = lift_solution(&r, &kernel_solution).map_err(|e| e.to_string())?;
    let mut doc = kernel_document(&g, d, &r);
    doc["solution"] = lifted.0.iter().collect();
    doc["stats"]["alpha_kernel"] = kernel_solution.len().into();
    doc["stats"]["solution_size"] = lifted.len().into();
    Ok(doc)
}

fn export(result: Result<Value, String>) -> Result<String, JsError> {
    result.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn decompose(n: usize, m: usize, seed: u32, d: usize) -> Result<String, JsError> {
    export(decompose_json(n, m, seed, d))
}

#[wasm_bindgen(js_name = kernelize)]
pub fn kernelize_export(n: usize, m: usize, seed: u32, d: usize) -> Result<String, JsError> {
    export(kernelize_json(n, m, seed, d))
}

#[wasm_bindgen]
pub fn solve(n: usize, m: usize, seed: u32, d: usize) -> Result<String, JsError> {
    export(solve_json(n, m, seed, d))
}
