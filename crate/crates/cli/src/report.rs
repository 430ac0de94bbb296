//! Assembly of the JSON analysis report: identity, spectrum summary, bound
//! evaluations with exact and decimal renderings, solver results and
//! certificates.

use anyhow::{anyhow, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use acyclic_core::bounds::{
    edge_forest_bound, min_eigenvalue, noncanonical_forest_bound, q_int, q_to_f64, ratio_bound,
    spectral_forest_bound, spectral_forest_bound_f64, SpectrumSummary,
};
use acyclic_core::families::FamilyGraph;
use acyclic_core::search::{
    certify_tau, classify_maximum_forests, max_independent_set, max_induced_forest_family, Budget,
    SolveResult,
};

pub struct AnalysisRequest {
    pub alpha: bool,
    pub tau: bool,
    pub bounds: bool,
    pub certify: bool,
    pub classify: bool,
    pub budget: Budget,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn solve_value(r: &SolveResult) -> Value {
    json!({
        "value": r.value,
        "witness": r.witness.indices(),
        "nodes": r.nodes_explored,
        "seconds": r.seconds,
        "optimal": r.optimal,
    })
}

/// Spectrum for bound evaluation: the family's exact eigenvalue when known,
/// otherwise closed-form/numeric detection on the graph.
fn spectrum_for(fg: &FamilyGraph) -> Result<(Option<i64>, Option<SpectrumSummary>)> {
    if let Some(l) = fg.known_lambda_min {
        return Ok((Some(l), min_eigenvalue(&fg.graph).ok()));
    }
    let s = min_eigenvalue(&fg.graph).map_err(|e| anyhow!(e.to_string()))?;
    let exact = s
        .exact_q()
        .map(|(_, _, lmin)| {
            debug_assert!(lmin.is_integer());
            *lmin.numer() as i64
        })
        .filter(|_| s.exact);
    Ok((exact, Some(s)))
}

fn bounds_value(fg: &FamilyGraph) -> Result<Value> {
    let n = fg.n() as u64;
    let k = fg
        .graph
        .regularity()
        .ok_or_else(|| anyhow!("bounds require a regular graph"))? as u64;
    let (exact_lambda, spec) = spectrum_for(fg)?;

    let spectrum_json = spec.as_ref().map(|s| {
        json!({
            "lambda1": s.lambda1,
            "lambda2": s.lambda2,
            "lambda_min": s.lambda_min,
            "exact": s.exact,
            "tolerance": s.tolerance,
        })
    });

    let (ratio, spectral) = match exact_lambda {
        Some(l) => {
            let lam = q_int(l as i128);
            let rb = ratio_bound(n, k, lam).map_err(|e| anyhow!(e.to_string()))?;
            let sb = spectral_forest_bound(n, k, lam).map_err(|e| anyhow!(e.to_string()))?;
            let strong = sb.strong.as_ref().map(|s| {
                json!({
                    "exact": format!("{} + ({})*sqrt({})", s.a, s.b, s.d),
                    "decimal": s.to_f64(),
                })
            });
            (
                json!({ "exact": rb.to_string(), "decimal": q_to_f64(&rb) }),
                json!({
                    "strong": strong,
                    "weak": { "exact": sb.weak.to_string(), "decimal": q_to_f64(&sb.weak) },
                }),
            )
        }
        None => {
            let s = spec
                .as_ref()
                .ok_or_else(|| anyhow!("no spectrum available"))?;
            let lam = s.lambda_min;
            let rb = (n as f64) * (-lam) / (k as f64 - lam);
            let (strong, weak) = spectral_forest_bound_f64(n as f64, k as f64, lam);
            (
                json!({ "decimal": rb, "tolerance": s.tolerance }),
                json!({
                    "strong": strong.map(|v| json!({ "decimal": v })),
                    "weak": { "decimal": weak },
                }),
            )
        }
    };

    let edge = edge_forest_bound(n, k, 1)
        .ok()
        .map(|b| json!({ "exact": b.to_string(), "decimal": q_to_f64(&b), "components": 1 }));
    let noncanonical = noncanonical_forest_bound(&fg.graph)
        .ok()
        .map(|b| json!({ "value": b, "eta": (b - 2) / 2 }));

    Ok(json!({
        "spectrum": spectrum_json,
        "ratio": ratio,
        "spectral_forest": spectral,
        "edge_forest": edge,
        "noncanonical_forest": noncanonical,
    }))
}

pub fn analysis_report(
    fg: &FamilyGraph,
    identity: Value,
    req: AnalysisRequest,
    started: std::time::Instant,
) -> Result<Value> {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!(acyclic_core::SCHEMA));
    doc.insert("identity".into(), identity);
    doc.insert("n".into(), json!(fg.n()));
    if let Some(k) = fg.graph.regularity() {
        doc.insert("valency".into(), json!(k));
    }
    if !fg.notes.is_empty() {
        doc.insert("notes".into(), json!(fg.notes));
    }

    if req.bounds {
        doc.insert("bounds".into(), bounds_value(fg)?);
    }
    if req.alpha {
        let r = max_independent_set(&fg.graph, &req.budget);
        doc.insert("alpha".into(), solve_value(&r));
    }
    if req.tau {
        let r = max_induced_forest_family(fg, &req.budget);
        doc.insert("tau".into(), solve_value(&r));
    }
    if req.certify {
        let cert = certify_tau(fg).map_err(|e| anyhow!(e.to_string()))?;
        doc.insert("certificate".into(), serde_json::to_value(&cert)?);
    }
    if req.classify {
        let cert =
            classify_maximum_forests(&fg.graph, &req.budget).map_err(|e| anyhow!(e.to_string()))?;
        doc.insert("classification".into(), serde_json::to_value(&cert)?);
    }
    doc.insert(
        "wall_seconds".into(),
        json!(started.elapsed().as_secs_f64()),
    );
    Ok(Value::Object(doc))
}
