//! The reference-value criteria. Each function runs one criterion end to end
//! and reports expected-vs-computed lines; the CLI prints them and the
//! acceptance tests assert them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{run_criterion, CheckLine, CriterionReport, Scope};
use crate::bounds::{
    edge_forest_bound, interlacing_subgraph_check, min_eigenvalue, q_floor, q_int, ratio_bound,
    spectral_forest_bound, srg_parameters, srg_spectrum, Q,
};
use crate::constructions::{k73_forest, kneser_odd_forest, paley_small_tree, scan_one};
use crate::families::{
    cyclic_orthogonal_array, generate, gq_noncollinearity_graph, oa_block_complement_graph,
    symplectic_gq, FamilyGraph, FamilySpec, FieldSpec,
};
use crate::graph::Graph;
use crate::search::{
    brute_force_oracle, certify_tau, classify_maximum_forests, enumerate_maximum_forests,
    is_canonical_forest, max_independent_set, max_induced_forest_capped, Budget, Predicate,
    TriState,
};
use crate::search::{max_induced_forest_family, verify_certificate};
use crate::vset::VertexSet;

fn tri(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

fn paley_complement(q: u32) -> FamilyGraph {
    let field = crate::constructions::scan_field_spec(q).expect("odd prime power");
    generate(&FamilySpec::Paley {
        field,
        complement: true,
    })
    .expect("complement Paley graph")
}

fn kneser(n: u32, k: u32) -> FamilyGraph {
    generate(&FamilySpec::Kneser { n, k }).expect("Kneser graph")
}

fn hamming(m: u32, n: u32) -> FamilyGraph {
    generate(&FamilySpec::Hamming { m, n }).expect("tensor power graph")
}

/// tau(P'(9)) = 5 by exact search, under a second.
pub fn criterion_01(budget: &Budget) -> CriterionReport {
    run_criterion("C1", "acyclic number of the order-9 complement Paley graph", |lines| {
        let fg = paley_complement(3);
        let r = max_induced_forest_family(&fg, budget);
        lines.push(CheckLine::eq("tau(P'(9))", 5, r.value));
        lines.push(CheckLine::eq("search completed", true, r.optimal));
        lines.push(CheckLine::new(
            "solve time < 1s",
            "< 1.0",
            format!("{:.4}", r.seconds),
            r.seconds < 1.0,
        ));
    })
}

/// Exact rational bound window: both forest bounds for (9,4,-2) lie in (5,6).
pub fn criterion_02(_budget: &Budget) -> CriterionReport {
    run_criterion("C2", "forest bounds for the (9,4,-2) spectrum sit strictly between 5 and 6", |lines| {
        let sb = spectral_forest_bound(9, 4, q_int(-2)).expect("valid inputs");
        let strong = sb.strong.as_ref().expect("nonnegative discriminant");
        lines.push(CheckLine::new(
            "spectral bound > 5 (exact)",
            true,
            strong.gt_q(&q_int(5)),
            strong.gt_q(&q_int(5)),
        ));
        lines.push(CheckLine::new(
            "spectral bound < 6 (exact)",
            true,
            strong.lt_q(&q_int(6)),
            strong.lt_q(&q_int(6)),
        ));
        let eb = edge_forest_bound(9, 4, 1).expect("valid inputs");
        lines.push(CheckLine::new(
            "edge bound in (5,6) (exact)",
            true,
            eb > q_int(5) && eb < q_int(6),
            eb > q_int(5) && eb < q_int(6),
        ));
    })
}

/// tau(K(n,2)) = max(n,7) for n = 5..9, canonical classification no/no at
/// 5, 6 and yes/yes at 8, 9.
pub fn criterion_03(budget: &Budget, scope: Scope) -> CriterionReport {
    run_criterion("C3", "pair Kneser graphs: acyclic number and forest structure", |lines| {
        let top = match scope {
            Scope::Fast => 8,
            Scope::Full => 9,
        };
        let start = std::time::Instant::now();
        for n in 5..=top {
            let fg = kneser(n, 2);
            let cert = classify_maximum_forests(&fg.graph, budget).expect("regular with edges");
            let expected_tau = (n as usize).max(7);
            lines.push(CheckLine::eq(
                format!("tau(K({n},2))"),
                expected_tau,
                cert.tau.unwrap_or(0),
            ));
            let expected = match n {
                5 | 6 => Some("no"),
                8 | 9 => Some("yes"),
                _ => None,
            };
            if let Some(exp) = expected {
                lines.push(CheckLine::eq(
                    format!("K({n},2) all maximum forests canonical"),
                    exp.to_string(),
                    tri(cert.all_maximum_canonical).to_string(),
                ));
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "total time < 2 min",
            "< 120",
            format!("{elapsed:.1}"),
            elapsed < 120.0,
        ));
    })
}

/// tau of the binary q-Kneser graph on 2-spaces of a 4-space is 8, with a
/// maximum forest that is an 8-vertex path (hence non-canonical).
pub fn criterion_04(budget: &Budget) -> CriterionReport {
    run_criterion("C4", "binary q-Kneser graph: order-8 maximum forests include a path", |lines| {
        let start = std::time::Instant::now();
        let fg = generate(&FamilySpec::QKneser {
            n: 4,
            k: 2,
            field: FieldSpec::new(2, 1),
        })
        .expect("q-Kneser graph");
        let r = max_induced_forest_family(&fg, budget);
        lines.push(CheckLine::eq("tau(K_2(4,2))", 8, r.value));
        lines.push(CheckLine::eq("search completed", true, r.optimal));

        let g = &fg.graph;
        let mut noncanonical_witness: Option<VertexSet> = None;
        let mut path_witness: Option<VertexSet> = None;
        let outcome = enumerate_maximum_forests(g, 8, budget, |w| {
            if noncanonical_witness.is_none()
                && !is_canonical_forest(g, w).expect("enumerated forests")
            {
                noncanonical_witness = Some(w.clone());
            }
            let is_path = g.forest_check(w).components == 1
                && w.iter().all(|v| g.induced_degree(w, v) <= 2);
            if is_path {
                path_witness = Some(w.clone());
                false
            } else {
                true
            }
        });
        lines.push(CheckLine::eq(
            "enumeration exhaustive or stopped by a hit",
            true,
            outcome != crate::search::EnumerationOutcome::BudgetExhausted,
        ));
        lines.push(CheckLine::eq(
            "a non-canonical maximum forest exists",
            true,
            noncanonical_witness.is_some(),
        ));
        lines.push(CheckLine::eq(
            "a maximum forest is an induced 8-path",
            true,
            path_witness.is_some(),
        ));
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "time < 2 min",
            "< 120",
            format!("{elapsed:.1}"),
            elapsed < 120.0,
        ));
    })
}

/// tau(X_{2,n}) = max(5, n+1) for n = 3..6; the canonical classification is
/// asserted for n = 4, 5, 6.
pub fn criterion_05(budget: &Budget) -> CriterionReport {
    run_criterion("C5", "two-fold tensor powers of complete graphs", |lines| {
        let start = std::time::Instant::now();
        for n in 3..=6u32 {
            let fg = hamming(2, n);
            let cert = classify_maximum_forests(&fg.graph, budget).expect("regular with edges");
            let expected_tau = 5usize.max(n as usize + 1);
            lines.push(CheckLine::eq(
                format!("tau(X_(2,{n}))"),
                expected_tau,
                cert.tau.unwrap_or(0),
            ));
            if n >= 4 {
                lines.push(CheckLine::eq(
                    format!("X_(2,{n}) all maximum forests canonical"),
                    "yes".to_string(),
                    tri(cert.all_maximum_canonical).to_string(),
                ));
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "total time < 2 min",
            "< 120",
            format!("{elapsed:.1}"),
            elapsed < 120.0,
        ));
    })
}

/// tau(K(7,3)) = 23, achieved by the explicit forest and equal to the edge
/// bound.
pub fn criterion_06(budget: &Budget) -> CriterionReport {
    run_criterion("C6", "triple Kneser graph on 7 points", |lines| {
        let start = std::time::Instant::now();
        let (fg, forest) = k73_forest().expect("explicit forest");
        lines.push(CheckLine::eq("explicit forest order", 23, forest.len()));
        let eb = edge_forest_bound(35, 4, 1).expect("valid inputs");
        lines.push(CheckLine::eq("edge bound (35,4,1)", q_int(23), eb));
        let r = max_induced_forest_family(&fg, budget);
        lines.push(CheckLine::eq("tau(K(7,3))", 23, r.value));
        lines.push(CheckLine::eq("search completed", true, r.optimal));
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "time <= 10 min",
            "<= 600",
            format!("{elapsed:.1}"),
            elapsed <= 600.0,
        ));
    })
}

/// The matched-pair forests in K(2k+1,k) validate for k = 4, 5 and beat the
/// canonical order.
pub fn criterion_07(_budget: &Budget) -> CriterionReport {
    run_criterion("C7", "large forests in odd Kneser graphs", |lines| {
        let start = std::time::Instant::now();
        for k in [4u32, 5] {
            let (fg, forest) = kneser_odd_forest(k).expect("construction validates");
            let expected = num_integer::binomial(2 * k as u128, k as u128) as usize
                + 2 * k as usize
                - 2;
            lines.push(CheckLine::eq(
                format!("forest order in K({},{k})", 2 * k + 1),
                expected,
                forest.len(),
            ));
            let alpha_plus_1 = num_integer::binomial(2 * k as u128, k as u128 - 1) as usize + 1;
            lines.push(CheckLine::new(
                format!("exceeds alpha+1 = {alpha_plus_1}"),
                true,
                forest.len() > alpha_plus_1,
                forest.len() > alpha_plus_1,
            ));
            let fc = fg.graph.forest_check(&forest);
            lines.push(CheckLine::eq("induces a forest", true, fc.is_forest));
        }
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "time < 5 s",
            "< 5",
            format!("{elapsed:.2}"),
            elapsed < 5.0,
        ));
    })
}

/// Search-free certification at scale: the s=4 symplectic quadrangle, the
/// (3,17) array complement, and the three-fold tensor power on 13 symbols.
pub fn criterion_08(_budget: &Budget) -> CriterionReport {
    run_criterion("C8", "certificates without search", |lines| {
        let cases: Vec<(&str, FamilyGraph, usize)> = vec![
            (
                "W(4) non-collinearity",
                {
                    let field = FieldSpec::new(2, 2);
                    let f = field.build().expect("GF(4)");
                    let gq = symplectic_gq(&f).expect("quadrangle verifies");
                    gq_noncollinearity_graph(
                        &gq,
                        Some(FamilySpec::GqNoncollinearity { field }),
                    )
                    .expect("graph")
                },
                6,
            ),
            (
                "OA(3,17) complement",
                {
                    let oa = cyclic_orthogonal_array(3, 17).expect("valid array");
                    oa_block_complement_graph(&oa, Some(FamilySpec::OaComplement { m: 3, n: 17 }))
                        .expect("graph")
                },
                18,
            ),
            ("X_(3,13)", hamming(3, 13), 170),
        ];
        for (name, fg, expected_tau) in cases {
            let start = std::time::Instant::now();
            let cert = certify_tau(&fg).expect("certification applies");
            lines.push(CheckLine::eq(
                format!("{name}: certified tau"),
                expected_tau,
                cert.tau.unwrap_or(0),
            ));
            lines.push(CheckLine::eq(
                format!("{name}: all maximum forests canonical"),
                "yes".to_string(),
                tri(cert.all_maximum_canonical).to_string(),
            ));
            let failures = verify_certificate(&cert).expect("verification runs");
            lines.push(CheckLine::eq(
                format!("{name}: certificate re-verifies"),
                "ok".to_string(),
                if failures.is_empty() {
                    "ok".to_string()
                } else {
                    failures.join("; ")
                },
            ));
            let elapsed = start.elapsed().as_secs_f64();
            lines.push(CheckLine::new(
                format!("{name}: built and re-verified < 1 min"),
                "< 60",
                format!("{elapsed:.1}"),
                elapsed < 60.0,
            ));
        }
    })
}

/// tau(P'(25)) = 7 and tau(P'(49)) = 9 by exact search.
pub fn criterion_09(budget: &Budget) -> CriterionReport {
    run_criterion("C9", "complement Paley graphs of orders 25 and 49", |lines| {
        let start = std::time::Instant::now();
        for (q, expected) in [(5u32, 7usize), (7, 9)] {
            let fg = paley_complement(q);
            let r = max_induced_forest_family(&fg, budget);
            lines.push(CheckLine::eq(
                format!("tau(P'({}))", q * q),
                expected,
                r.value,
            ));
            lines.push(CheckLine::eq("search completed", true, r.optimal));
        }
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "combined time <= 30 min",
            "<= 1800",
            format!("{elapsed:.1}"),
            elapsed <= 1800.0,
        ));
    })
}

/// The two-add scan: hits at q = 3, 5, 7 matching the explicit small trees,
/// empty at q = 9, 11, 13.
pub fn criterion_10(budget: &Budget, scope: Scope) -> CriterionReport {
    run_criterion("C10", "two-vertex additions over Blokhuis cocliques", |lines| {
        let start = std::time::Instant::now();
        for q in [3u32, 5, 7] {
            let report = scan_one(q, budget).expect("scan runs");
            let (_, tree) = paley_small_tree(q).expect("explicit tree");
            lines.push(CheckLine::eq(format!("scan q={q} complete"), true, report.complete));
            lines.push(CheckLine::new(
                format!("scan q={q} finds forests"),
                "nonempty",
                format!("{} hits", report.hits.len()),
                !report.hits.is_empty(),
            ));
            let orders_match = report
                .hits
                .iter()
                .all(|h| h.set.len() + 2 == tree.len());
            lines.push(CheckLine::eq(
                format!("hit orders match the explicit tree ({})", tree.len()),
                true,
                orders_match,
            ));
            // the explicit tree itself appears among the hits
            let tree_idx = tree.indices();
            let found = report.hits.iter().any(|h| {
                let mut all: Vec<usize> = h.set.clone();
                all.push(h.pair.0);
                all.push(h.pair.1);
                all.sort_unstable();
                all == tree_idx
            });
            lines.push(CheckLine::eq(
                format!("explicit q={q} tree appears among hits"),
                true,
                found,
            ));
        }
        if scope == Scope::Full {
            for q in [9u32, 11, 13] {
                let report = scan_one(q, budget).expect("scan runs");
                lines.push(CheckLine::eq(
                    format!("scan q={q} complete"),
                    true,
                    report.complete,
                ));
                lines.push(CheckLine::eq(
                    format!("scan q={q} hit count"),
                    0,
                    report.hits.len(),
                ));
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        lines.push(CheckLine::new(
            "time <= 30 min",
            "<= 1800",
            format!("{elapsed:.1}"),
            elapsed <= 1800.0,
        ));
    })
}

/// Family graphs small enough for the exhaustive oracle.
fn oracle_family_list() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: &str, fg: FamilyGraph| out.push((name.to_string(), fg.graph));
    push("K(4,2)", kneser(4, 2));
    push("K(5,2)", kneser(5, 2));
    push("K(6,2)", kneser(6, 2));
    push("K(6,3)", kneser(6, 3));
    push("K(7,2)", kneser(7, 2));
    push(
        "K_2(2,1)",
        generate(&FamilySpec::QKneser {
            n: 2,
            k: 1,
            field: FieldSpec::new(2, 1),
        })
        .unwrap(),
    );
    push(
        "K_3(2,1)",
        generate(&FamilySpec::QKneser {
            n: 2,
            k: 1,
            field: FieldSpec::new(3, 1),
        })
        .unwrap(),
    );
    push("P'(9)", paley_complement(3));
    push(
        "P(13)",
        generate(&FamilySpec::Paley {
            field: FieldSpec::new(13, 1),
            complement: false,
        })
        .unwrap(),
    );
    push(
        "P'(17)",
        generate(&FamilySpec::Paley {
            field: FieldSpec::new(17, 1),
            complement: true,
        })
        .unwrap(),
    );
    push("X_(2,3)", hamming(2, 3));
    push("X_(2,4)", hamming(2, 4));
    push("X_(3,2)", hamming(3, 2));
    push("X_(1,5)", hamming(1, 5));
    push("OA(3,2) complement", {
        let oa = cyclic_orthogonal_array(3, 2).unwrap();
        oa_block_complement_graph(&oa, None).unwrap()
    });
    push("OA(3,3) complement", {
        let oa = cyclic_orthogonal_array(3, 3).unwrap();
        oa_block_complement_graph(&oa, None).unwrap()
    });
    push("OA(4,3) complement", {
        let oa = cyclic_orthogonal_array(4, 3).unwrap();
        oa_block_complement_graph(&oa, None).unwrap()
    });
    push("W(2) non-collinearity", {
        let f = FieldSpec::new(2, 1).build().unwrap();
        let gq = symplectic_gq(&f).unwrap();
        gq_noncollinearity_graph(&gq, None).unwrap()
    });
    out
}

fn seeded_random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(4..=16);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Solver values equal the exhaustive oracle on 200 seeded random graphs and
/// on every family graph with at most 24 vertices.
pub fn criterion_11(budget: &Budget) -> CriterionReport {
    run_criterion("C11", "solver agreement with the exhaustive oracle", |lines| {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut mis_mismatch = 0usize;
        let mut forest_mismatch = 0usize;
        let mut gap_violations = 0usize;
        for _ in 0..200 {
            let g = seeded_random_graph(&mut rng);
            let alpha = max_independent_set(&g, budget);
            let tau = max_induced_forest_capped(&g, budget, None);
            if alpha.value != brute_force_oracle(&g, Predicate::Independent).unwrap() {
                mis_mismatch += 1;
            }
            if tau.value != brute_force_oracle(&g, Predicate::Forest).unwrap() {
                forest_mismatch += 1;
            }
            if g.edge_count() > 0 && tau.value < alpha.value + 1 {
                gap_violations += 1;
            }
        }
        lines.push(CheckLine::eq("random coclique mismatches", 0, mis_mismatch));
        lines.push(CheckLine::eq("random forest mismatches", 0, forest_mismatch));
        lines.push(CheckLine::eq(
            "random tau >= alpha+1 violations",
            0,
            gap_violations,
        ));

        let mut family_mismatch: Vec<String> = Vec::new();
        let mut witness_failures: Vec<String> = Vec::new();
        for (name, g) in oracle_family_list() {
            assert!(g.n() <= 24, "{name} exceeds the oracle limit");
            let alpha = max_independent_set(&g, budget);
            let tau = max_induced_forest_capped(&g, budget, None);
            if alpha.value != brute_force_oracle(&g, Predicate::Independent).unwrap() {
                family_mismatch.push(format!("{name} coclique"));
            }
            if tau.value != brute_force_oracle(&g, Predicate::Forest).unwrap() {
                family_mismatch.push(format!("{name} forest"));
            }
            if g.edge_count() > 0 && tau.value < alpha.value + 1 {
                family_mismatch.push(format!("{name} gap"));
            }
            // the optimal forest itself passes the interlacing check
            if g.regularity().is_some() && tau.value > 0 && tau.value < g.n() {
                let spec = min_eigenvalue(&g).expect("small graphs have spectra");
                match interlacing_subgraph_check(&g, &tau.witness, &spec) {
                    Ok(true) => {}
                    _ => witness_failures.push(name.clone()),
                }
            }
        }
        lines.push(CheckLine::eq(
            "family graph mismatches",
            "none".to_string(),
            if family_mismatch.is_empty() {
                "none".to_string()
            } else {
                family_mismatch.join(", ")
            },
        ));
        lines.push(CheckLine::eq(
            "optimal forests pass interlacing",
            "all".to_string(),
            if witness_failures.is_empty() {
                "all".to_string()
            } else {
                witness_failures.join(", ")
            },
        ));
    })
}

/// Exact smallest eigenvalue of a family graph, preferring attached metadata
/// and falling back to strongly-regular closed forms.
fn exact_lambda_min(fg: &FamilyGraph) -> Option<Q> {
    if let Some(l) = fg.known_lambda_min {
        return Some(q_int(l as i128));
    }
    let p = srg_parameters(&fg.graph)?;
    let spec = srg_spectrum(&p).ok()?;
    let (_, _, lmin) = spec.exact_q()?;
    Some(lmin)
}

/// Known acyclic numbers, checked against both forest bounds.
fn solved_tau_table() -> Vec<(String, FamilyGraph, usize)> {
    let mut out: Vec<(String, FamilyGraph, usize)> = Vec::new();
    out.push(("P'(9)".into(), paley_complement(3), 5));
    for n in 5..=9u32 {
        out.push((
            format!("K({n},2)"),
            kneser(n, 2),
            (n as usize).max(7),
        ));
    }
    out.push((
        "K_2(4,2)".into(),
        generate(&FamilySpec::QKneser {
            n: 4,
            k: 2,
            field: FieldSpec::new(2, 1),
        })
        .unwrap(),
        8,
    ));
    for n in 3..=6u32 {
        out.push((
            format!("X_(2,{n})"),
            hamming(2, n),
            5usize.max(n as usize + 1),
        ));
    }
    out.push(("K(7,3)".into(), kneser(7, 3), 23));
    out.push(("P'(25)".into(), paley_complement(5), 7));
    out.push(("P'(49)".into(), paley_complement(7), 9));
    out.push((
        "W(4)".into(),
        {
            let field = FieldSpec::new(2, 2);
            let f = field.build().unwrap();
            let gq = symplectic_gq(&f).unwrap();
            gq_noncollinearity_graph(&gq, Some(FamilySpec::GqNoncollinearity { field })).unwrap()
        },
        6,
    ));
    out.push((
        "OA(3,17)".into(),
        {
            let oa = cyclic_orthogonal_array(3, 17).unwrap();
            oa_block_complement_graph(&oa, Some(FamilySpec::OaComplement { m: 3, n: 17 })).unwrap()
        },
        18,
    ));
    out.push(("X_(3,13)".into(), hamming(3, 13), 170));
    out
}

/// Bound-consistency suite: tau respects both forest bounds, the ratio bound
/// matches every shipped witness, and the interlacing check holds on random
/// induced subgraphs.
pub fn criterion_12(_budget: &Budget) -> CriterionReport {
    run_criterion("C12", "bound consistency across the solved graphs", |lines| {
        let table = solved_tau_table();
        let mut bound_failures: Vec<String> = Vec::new();
        for (name, fg, tau) in &table {
            let k = fg.valency() as u64;
            let n = fg.n() as u64;
            let Some(lmin) = exact_lambda_min(fg) else {
                bound_failures.push(format!("{name}: no exact eigenvalue"));
                continue;
            };
            let sb = spectral_forest_bound(n, k, lmin).expect("valid spectrum");
            let cap = match &sb.strong {
                Some(s) => s.floor(),
                None => q_floor(&sb.weak),
            };
            if (*tau as i128) > cap {
                bound_failures.push(format!("{name}: tau {tau} beats spectral cap {cap}"));
            }
            if k >= 2 {
                let eb = edge_forest_bound(n, k, 1).expect("valid inputs");
                if (*tau as i128) > q_floor(&eb) {
                    bound_failures.push(format!("{name}: tau {tau} beats edge bound"));
                }
            }
        }
        lines.push(CheckLine::eq(
            "tau within spectral and edge bounds",
            "ok".to_string(),
            if bound_failures.is_empty() {
                "ok".to_string()
            } else {
                bound_failures.join("; ")
            },
        ));

        // ratio bound equals the witness coclique size on every family graph
        // that ships a witness
        let mut ratio_failures: Vec<String> = Vec::new();
        let mut witness_count = 0usize;
        for (name, fg, _) in &table {
            let Some(w) = &fg.coclique_witness else {
                continue;
            };
            witness_count += 1;
            let Some(lmin) = exact_lambda_min(fg) else {
                ratio_failures.push(format!("{name}: no exact eigenvalue"));
                continue;
            };
            let rb = ratio_bound(fg.n() as u64, fg.valency() as u64, lmin).expect("valid");
            if rb != q_int(w.len() as i128) {
                ratio_failures.push(format!("{name}: ratio {rb} vs witness {}", w.len()));
            }
        }
        lines.push(CheckLine::new(
            "ratio bound tight on shipped witnesses",
            format!("{witness_count} witnesses ok"),
            if ratio_failures.is_empty() {
                format!("{witness_count} witnesses ok")
            } else {
                ratio_failures.join("; ")
            },
            ratio_failures.is_empty(),
        ));

        // interlacing on 1000 random induced subgraphs per graph up to 200
        // vertices
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut interlacing_failures: Vec<String> = Vec::new();
        for (name, fg, _) in &table {
            let n = fg.n();
            if n > 200 {
                continue;
            }
            let spec = min_eigenvalue(&fg.graph).expect("spectrum available");
            for _ in 0..1000 {
                let mut s = VertexSet::empty(n);
                for v in 0..n {
                    if rng.gen_bool(0.5) {
                        s.insert(v);
                    }
                }
                if s.is_empty() || s.len() == n {
                    continue;
                }
                match interlacing_subgraph_check(&fg.graph, &s, &spec) {
                    Ok(true) => {}
                    Ok(false) => {
                        interlacing_failures.push(format!("{name}: subset {s:?}"));
                        break;
                    }
                    Err(e) => {
                        interlacing_failures.push(format!("{name}: {e}"));
                        break;
                    }
                }
            }
        }
        lines.push(CheckLine::eq(
            "interlacing holds on random induced subgraphs",
            "ok".to_string(),
            if interlacing_failures.is_empty() {
                "ok".to_string()
            } else {
                interlacing_failures.join("; ")
            },
        ));
    })
}

/// Criterion ids in order.
pub fn criterion_ids() -> Vec<&'static str> {
    vec![
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    ]
}

/// Runs one criterion by id.
pub fn run_by_id(id: &str, budget: &Budget, scope: Scope) -> Option<CriterionReport> {
    Some(match id {
        "C1" => criterion_01(budget),
        "C2" => criterion_02(budget),
        "C3" => criterion_03(budget, scope),
        "C4" => criterion_04(budget),
        "C5" => criterion_05(budget),
        "C6" => criterion_06(budget),
        "C7" => criterion_07(budget),
        "C8" => criterion_08(budget),
        "C9" => criterion_09(budget),
        "C10" => criterion_10(budget, scope),
        "C11" => criterion_11(budget),
        "C12" => criterion_12(budget),
        _ => return None,
    })
}

/// The ids covered by a scope.
pub fn all_criteria(scope: Scope) -> Vec<&'static str> {
    match scope {
        Scope::Fast => vec!["C1", "C2", "C3", "C5", "C7", "C10"],
        Scope::Full => criterion_ids(),
    }
}

/// Runs a whole scope.
pub fn run_all(scope: Scope, budget: &Budget) -> Vec<CriterionReport> {
    all_criteria(scope)
        .into_iter()
        .map(|id| run_by_id(id, budget, scope).expect("known id"))
        .collect()
}
