//! Machine-checkable certificates for the acyclic number.
//!
//! Two routes produce a [`TauCertificate`]:
//!
//! - [`classify_maximum_forests`] solves alpha and tau exactly and, when
//!   needed, enumerates every maximum forest to decide whether all of them
//!   are canonical (a coclique plus one vertex).
//! - [`certify_tau`] avoids search entirely: alpha comes from a ratio-bound-
//!   tight coclique witness, and non-canonical forests are excluded by the
//!   counting bound 2 + 2*eta (for quadrangle graphs, by the stronger
//!   geometric bound 5). This scales to graphs far beyond exact search.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::forest::{enumerate_maximum_forests, EnumerationOutcome};
use super::{
    is_canonical_forest, max_independent_set, max_induced_forest, Budget, SearchError, SolveResult,
};
use crate::bounds::{q_floor, q_int, ratio_bound};
use crate::families::{generate, FamilyGraph, FamilySpec};
use crate::graph::Graph;
use crate::io;
use crate::vset::VertexSet;
use crate::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaProof {
    ExactSearch,
    RatioBound,
}

/// How the bound on non-canonical forests was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoncanonicalProof {
    /// 2 + 2*eta(G).
    EtaCounting,
    /// Non-canonical forests in a quadrangle non-collinearity graph span at
    /// most 5 vertices: around an induced P4 the remaining choices close a
    /// 6-cycle, and a disjoint edge pair reduces to that case.
    QuadrangleGeometry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalProof {
    /// noncanonical_upper < canonical_lower.
    BoundGap,
    /// Every maximum forest was enumerated and checked.
    Enumeration,
}

/// Machine-checkable record of the acyclic number and the structure of the
/// maximum induced forests.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TauCertificate {
    pub schema: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    /// Inline graph (JSON form) when no family parameters identify it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_json: Option<String>,
    pub n: usize,
    pub valency: usize,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub alpha_witness_sha256: String,
    pub alpha_upper_proof: AlphaProof,
    pub eta_value: usize,
    pub eta_witness_edge: (usize, usize),
    /// alpha + 1, with a witness forest (coclique plus one vertex).
    pub canonical_lower: usize,
    pub canonical_witness: Vec<usize>,
    pub canonical_witness_sha256: String,
    /// Upper bound on any non-canonical induced forest.
    pub noncanonical_upper: usize,
    pub noncanonical_proof: NoncanonicalProof,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    pub all_maximum_canonical: TriState,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_proof: Option<CanonicalProof>,
    /// A maximum forest that is not canonical, when the answer is `No`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_witness_sha256: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

pub(crate) fn witness_sha256(indices: &[usize]) -> String {
    let joined = indices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut h = Sha256::new();
    h.update(joined.as_bytes());
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Picks a canonical witness forest: the coclique plus the smallest vertex
/// outside it (always a forest).
fn canonical_witness(g: &Graph, coclique: &VertexSet) -> VertexSet {
    let mut w = coclique.clone();
    let outside = coclique.complement().first().expect("proper coclique");
    w.insert(outside);
    debug_assert!(g.forest_check(&w).is_forest);
    w
}

/// Classifies the maximum induced forests of a regular graph by exact search:
/// computes alpha and tau, then decides whether every maximum forest is
/// canonical, enumerating all of them when the counting bound is not already
/// decisive. Budget exhaustion yields `Unknown`, never a wrong answer.
pub fn classify_maximum_forests(
    g: &Graph,
    budget: &Budget,
) -> Result<TauCertificate, SearchError> {
    if g.regularity().is_none() || g.edge_count() == 0 {
        return Err(SearchError::NotRegularWithEdge);
    }
    let eta = g.eta()?;
    let alpha = max_independent_set(g, budget);
    let noncanonical_upper = 2 + 2 * eta.value;

    let mut cert = certificate_skeleton(g, None, &alpha, eta.value, eta.witness_edge);
    cert.graph_json = Some(io::write_json(g));
    if !alpha.optimal {
        cert.notes
            .push("coclique search exhausted its budget".to_string());
        return Ok(cert);
    }

    let canonical_lower = alpha.value + 1;
    if noncanonical_upper < canonical_lower {
        cert.tau = Some(canonical_lower);
        cert.all_maximum_canonical = TriState::Yes;
        cert.canonical_proof = Some(CanonicalProof::BoundGap);
        return Ok(cert);
    }

    let tau = max_induced_forest(g, budget);
    if !tau.optimal {
        cert.notes
            .push("forest search exhausted its budget".to_string());
        return Ok(cert);
    }
    cert.tau = Some(tau.value);
    debug_assert!(tau.value >= canonical_lower);

    if tau.value > canonical_lower {
        // no forest of this order can be canonical
        let witness = tau.witness.indices();
        debug_assert!(!is_canonical_forest(g, &tau.witness).unwrap());
        cert.all_maximum_canonical = TriState::No;
        cert.no_witness_sha256 = Some(witness_sha256(&witness));
        cert.no_witness = Some(witness);
        return Ok(cert);
    }

    // tau == alpha + 1: enumerate all maximum forests, stopping at the first
    // non-canonical one
    let mut found: Option<Vec<usize>> = None;
    let outcome = enumerate_maximum_forests(g, tau.value, budget, |w| {
        if !is_canonical_forest(g, w).expect("enumerated sets are forests") {
            found = Some(w.indices());
            false
        } else {
            true
        }
    });
    match (outcome, found) {
        (_, Some(witness)) => {
            cert.all_maximum_canonical = TriState::No;
            cert.no_witness_sha256 = Some(witness_sha256(&witness));
            cert.no_witness = Some(witness);
        }
        (EnumerationOutcome::Complete, None) => {
            cert.all_maximum_canonical = TriState::Yes;
            cert.canonical_proof = Some(CanonicalProof::Enumeration);
        }
        (EnumerationOutcome::BudgetExhausted, None) => {
            cert.notes
                .push("maximum-forest enumeration exhausted its budget".to_string());
        }
        (EnumerationOutcome::StoppedByCallback, None) => unreachable!(),
    }
    Ok(cert)
}

fn certificate_skeleton(
    g: &Graph,
    family: Option<FamilySpec>,
    alpha: &SolveResult,
    eta_value: usize,
    eta_edge: (usize, usize),
) -> TauCertificate {
    let alpha_witness = alpha.witness.indices();
    let canonical = canonical_witness(g, &alpha.witness).indices();
    TauCertificate {
        schema: SCHEMA.to_string(),
        family,
        graph_json: None,
        n: g.n(),
        valency: g.regularity().unwrap_or(0),
        alpha: alpha.value,
        alpha_witness_sha256: witness_sha256(&alpha_witness),
        alpha_witness,
        alpha_upper_proof: AlphaProof::ExactSearch,
        eta_value,
        eta_witness_edge: eta_edge,
        canonical_lower: alpha.value + 1,
        canonical_witness_sha256: witness_sha256(&canonical),
        canonical_witness: canonical,
        noncanonical_upper: 2 + 2 * eta_value,
        noncanonical_proof: NoncanonicalProof::EtaCounting,
        tau: None,
        all_maximum_canonical: TriState::Unknown,
        canonical_proof: None,
        no_witness: None,
        no_witness_sha256: None,
        notes: Vec::new(),
    }
}

/// Exact rational ratio bound for a family graph, using the family's known
/// smallest eigenvalue. Rounded down to the integer coclique cap.
fn family_ratio_bound(fg: &FamilyGraph) -> Option<i128> {
    let k = fg.graph.regularity()? as u64;
    let lmin = fg.known_lambda_min?;
    let bound = ratio_bound(fg.n() as u64, k, q_int(lmin as i128)).ok()?;
    Some(q_floor(&bound))
}

/// Certifies tau without any search. Requires a coclique witness whose size
/// equals the exact ratio bound; concludes when non-canonical forests are
/// provably smaller than alpha + 1.
pub fn certify_tau(fg: &FamilyGraph) -> Result<TauCertificate, SearchError> {
    let g = &fg.graph;
    let witness = fg
        .coclique_witness
        .as_ref()
        .ok_or_else(|| SearchError::BadWitness("family carries no coclique witness".into()))?;
    if !g.is_independent(witness) {
        return Err(SearchError::BadWitness("witness is not independent".into()));
    }
    let bound = family_ratio_bound(fg).ok_or_else(|| {
        SearchError::BadWitness("no exact smallest eigenvalue for the ratio bound".into())
    })?;
    if witness.len() as i128 != bound {
        return Err(SearchError::BadWitness(format!(
            "witness size {} does not meet the ratio bound {}",
            witness.len(),
            bound
        )));
    }
    let alpha = witness.len();
    let eta = g.eta()?;

    let is_quadrangle = matches!(
        fg.spec,
        Some(FamilySpec::GqNoncollinearity { .. })
    );
    let eta_bound = 2 + 2 * eta.value;
    let (noncanonical_upper, noncanonical_proof) = if is_quadrangle && 5 < eta_bound {
        (5, NoncanonicalProof::QuadrangleGeometry)
    } else {
        (eta_bound, NoncanonicalProof::EtaCounting)
    };

    let solve_like = SolveResult {
        value: alpha,
        witness: witness.clone(),
        nodes_explored: 0,
        seconds: 0.0,
        optimal: true,
    };
    let mut cert = certificate_skeleton(g, fg.spec.clone(), &solve_like, eta.value, eta.witness_edge);
    cert.alpha_upper_proof = AlphaProof::RatioBound;
    cert.noncanonical_upper = noncanonical_upper;
    cert.noncanonical_proof = noncanonical_proof;
    cert.notes = fg.notes.clone();

    let canonical_lower = alpha + 1;
    if noncanonical_upper < canonical_lower {
        cert.tau = Some(canonical_lower);
        cert.all_maximum_canonical = TriState::Yes;
        cert.canonical_proof = Some(CanonicalProof::BoundGap);
    } else {
        cert.notes.push(format!(
            "inconclusive: non-canonical bound {noncanonical_upper} is not below alpha+1 = {canonical_lower}"
        ));
    }
    Ok(cert)
}

/// Re-checks a stored certificate against a regenerated graph. Returns the
/// list of failed checks (empty means the certificate verifies).
pub fn verify_certificate(cert: &TauCertificate) -> Result<Vec<String>, SearchError> {
    let mut failures = Vec::new();
    let graph: Graph = if let Some(spec) = &cert.family {
        match generate(spec) {
            Ok(fg) => fg.graph,
            Err(e) => return Ok(vec![format!("family regeneration failed: {e}")]),
        }
    } else if let Some(js) = &cert.graph_json {
        match io::parse_json(js) {
            Ok(g) => g,
            Err(e) => return Ok(vec![format!("inline graph parse failed: {e}")]),
        }
    } else {
        return Ok(vec!["certificate identifies no graph".to_string()]);
    };

    let mut check = |ok: bool, msg: &str| {
        if !ok {
            failures.push(msg.to_string());
        }
    };

    check(graph.n() == cert.n, "vertex count mismatch");
    check(
        graph.regularity() == Some(cert.valency),
        "valency mismatch",
    );

    let alpha_set = VertexSet::from_indices(graph.n(), &cert.alpha_witness);
    check(alpha_set.len() == cert.alpha, "alpha witness size mismatch");
    check(
        graph.is_independent(&alpha_set),
        "alpha witness is not independent",
    );
    check(
        witness_sha256(&cert.alpha_witness) == cert.alpha_witness_sha256,
        "alpha witness hash mismatch",
    );

    match graph.eta() {
        Ok(eta) => {
            check(eta.value == cert.eta_value, "eta mismatch");
            let (a, b) = cert.eta_witness_edge;
            check(graph.has_edge(a, b), "eta witness edge missing");
            check(
                graph
                    .common_nonneighbors(a, b)
                    .map(|s| s.len() == cert.eta_value)
                    .unwrap_or(false),
                "eta witness edge does not attain eta",
            );
        }
        Err(_) => check(false, "graph has no edges"),
    }

    check(
        cert.canonical_lower == cert.alpha + 1,
        "canonical lower bound is not alpha+1",
    );
    let canon = VertexSet::from_indices(graph.n(), &cert.canonical_witness);
    check(
        canon.len() == cert.canonical_lower,
        "canonical witness size mismatch",
    );
    check(
        graph.forest_check(&canon).is_forest,
        "canonical witness is not a forest",
    );
    check(
        witness_sha256(&cert.canonical_witness) == cert.canonical_witness_sha256,
        "canonical witness hash mismatch",
    );

    match cert.noncanonical_proof {
        NoncanonicalProof::EtaCounting => check(
            cert.noncanonical_upper == 2 + 2 * cert.eta_value,
            "eta-counting bound mismatch",
        ),
        NoncanonicalProof::QuadrangleGeometry => {
            check(
                cert.noncanonical_upper == 5,
                "quadrangle geometric bound must be 5",
            );
            check(
                matches!(cert.family, Some(FamilySpec::GqNoncollinearity { .. })),
                "geometric bound used outside a quadrangle family",
            );
        }
    }

    if cert.all_maximum_canonical == TriState::Yes {
        match cert.canonical_proof {
            Some(CanonicalProof::BoundGap) => check(
                cert.noncanonical_upper < cert.canonical_lower,
                "bound-gap proof lacks the gap",
            ),
            Some(CanonicalProof::Enumeration) => {}
            None => check(false, "yes answer without a proof tag"),
        }
        check(
            cert.tau == Some(cert.canonical_lower),
            "yes answer requires tau = alpha+1",
        );
    }

    if let Some(no_witness) = &cert.no_witness {
        let s = VertexSet::from_indices(graph.n(), no_witness);
        check(
            Some(s.len()) == cert.tau,
            "non-canonical witness is not maximum",
        );
        match is_canonical_forest(&graph, &s) {
            Ok(canonical) => check(!canonical, "non-canonical witness is canonical"),
            Err(_) => check(false, "non-canonical witness is not a forest"),
        }
        check(
            cert.no_witness_sha256.as_deref() == Some(witness_sha256(no_witness).as_str()),
            "non-canonical witness hash mismatch",
        );
    }

    if let Some(tau) = cert.tau {
        check(
            tau >= cert.canonical_lower,
            "tau below the canonical lower bound",
        );
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn classify_petersen_is_no() {
        // tau = 7 > alpha+1 = 5: every maximum forest is non-canonical
        let fg = generate(&FamilySpec::Kneser { n: 5, k: 2 }).unwrap();
        let cert = classify_maximum_forests(&fg.graph, &Budget::default()).unwrap();
        assert_eq!(cert.tau, Some(7));
        assert_eq!(cert.all_maximum_canonical, TriState::No);
        assert!(cert.no_witness.is_some());
        assert!(verify_certificate(&cert).unwrap().is_empty());
    }

    #[test]
    fn certify_x2_13_without_search() {
        let fg = generate(&FamilySpec::Hamming { m: 2, n: 13 }).unwrap();
        let cert = certify_tau(&fg).unwrap();
        // eta = 2, alpha = 13: bound gap 6 < 14
        assert_eq!(cert.alpha, 13);
        assert_eq!(cert.noncanonical_upper, 6);
        assert_eq!(cert.tau, Some(14));
        assert_eq!(cert.all_maximum_canonical, TriState::Yes);
        assert!(verify_certificate(&cert).unwrap().is_empty());
    }

    #[test]
    fn certify_requires_a_witness() {
        let fg = generate(&FamilySpec::Paley {
            field: crate::families::FieldSpec::new(13, 1),
            complement: false,
        })
        .unwrap();
        assert!(matches!(
            certify_tau(&fg),
            Err(SearchError::BadWitness(_))
        ));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let fg = generate(&FamilySpec::Hamming { m: 2, n: 13 }).unwrap();
        let mut cert = certify_tau(&fg).unwrap();
        cert.alpha_witness[0] += 1;
        assert!(!verify_certificate(&cert).unwrap().is_empty());
    }

    #[test]
    fn certificate_json_round_trip() {
        let fg = generate(&FamilySpec::Hamming { m: 2, n: 13 }).unwrap();
        let cert = certify_tau(&fg).unwrap();
        let s = serde_json::to_string_pretty(&cert).unwrap();
        let back: TauCertificate = serde_json::from_str(&s).unwrap();
        assert!(verify_certificate(&back).unwrap().is_empty());
    }
}
