//! Property tests for the kernel invariants and cross-checks between the
//! exact closed forms, the numeric spectra, and the certification routes.

use proptest::prelude::*;

use acyclic_core::bounds::{
    min_eigenvalue, numeric_spectrum, q_int, spectral_forest_bound, srg_parameters, srg_spectrum,
};
use acyclic_core::families::{
    cyclic_orthogonal_array, generate, FamilySpec, FieldSpec,
};
use acyclic_core::search::{
    certify_tau, enumerate_maximum_forests, is_canonical_forest, max_induced_forest, Budget,
    EnumerationOutcome, TriState,
};
use acyclic_core::{Graph, VertexSet};

/// Random graph strategy: up to 12 vertices with an arbitrary edge subset.
fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=12).prop_flat_map(|n| {
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let m = all_pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |flags| {
            let edges: Vec<(usize, usize)> = all_pairs
                .iter()
                .zip(&flags)
                .filter(|(_, &f)| f)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    /// On every forest-inducing subset, induced edges = |S| - components.
    #[test]
    fn forest_edge_identity(g in graph_strategy(), seed in any::<u64>()) {
        let n = g.n();
        let mask = seed & ((1u64 << n) - 1);
        let s = VertexSet::from_indices(
            n,
            &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
        );
        let fc = g.forest_check(&s);
        if fc.is_forest {
            prop_assert_eq!(g.induced_edge_count(&s), s.len() - fc.components);
        } else {
            let (u, v) = fc.cycle_edge.expect("cyclic subsets carry a witness edge");
            prop_assert!(g.has_edge(u, v));
            prop_assert!(s.contains(u) && s.contains(v));
        }
    }

    /// Independent sets induce forests whose components are singletons.
    #[test]
    fn independent_sets_are_trivial_forests(g in graph_strategy(), seed in any::<u64>()) {
        let n = g.n();
        let mask = seed & ((1u64 << n) - 1);
        let s = VertexSet::from_indices(
            n,
            &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
        );
        if g.is_independent(&s) {
            let fc = g.forest_check(&s);
            prop_assert!(fc.is_forest);
            prop_assert_eq!(fc.components, s.len());
        }
    }

    /// |common_nonneighbors(a,b)| = n - |N[a] ∪ N[b]|, by direct enumeration.
    #[test]
    fn common_nonneighbors_complement_identity(g in graph_strategy()) {
        let n = g.n();
        for a in 0..n {
            for b in (a + 1)..n {
                let fast = g.common_nonneighbors(a, b).unwrap();
                let slow: Vec<usize> = (0..n)
                    .filter(|&v| v != a && v != b && !g.has_edge(v, a) && !g.has_edge(v, b))
                    .collect();
                prop_assert_eq!(fast.indices(), slow);
                let closed: std::collections::BTreeSet<usize> = g
                    .neighbors(a)
                    .iter()
                    .chain(g.neighbors(b).iter())
                    .chain([a, b])
                    .collect();
                prop_assert_eq!(fast.len(), n - closed.len());
            }
        }
    }

    /// eta is invariant under vertex relabeling.
    #[test]
    fn eta_is_relabeling_invariant(g in graph_strategy(), seed in any::<u64>()) {
        if g.edge_count() == 0 {
            return Ok(());
        }
        let n = g.n();
        // Fisher-Yates from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(g.eta().unwrap().value, h.eta().unwrap().value);
    }

    /// The strong spectral forest bound is strictly below the weak closed
    /// form whenever its discriminant is nonnegative.
    #[test]
    fn strong_spectral_bound_is_strictly_stronger(
        n in 3u64..500,
        k in 2u64..60,
        lam in 1i128..40,
    ) {
        prop_assume!(k < n);
        let bound = spectral_forest_bound(n, k, q_int(-lam)).unwrap();
        if let Some(strong) = &bound.strong {
            prop_assert!(strong.lt_q(&bound.weak));
        }
    }
}

/// Known closed-form spectra agree with the numeric eigensolver.
#[test]
fn known_spectra_match_numeric_eigenvalues() {
    let cases: Vec<FamilyGraphCase> = vec![
        FamilyGraphCase::spec(FamilySpec::Paley {
            field: FieldSpec::with_modulus(3, 2, vec![1, 0, 1]),
            complement: true,
        }),
        FamilyGraphCase::spec(FamilySpec::Paley {
            field: FieldSpec::with_modulus(5, 2, vec![1, 1, 1]),
            complement: true,
        }),
        FamilyGraphCase::spec(FamilySpec::GqNoncollinearity {
            field: FieldSpec::new(2, 1),
        }),
        FamilyGraphCase::spec(FamilySpec::GqNoncollinearity {
            field: FieldSpec::new(3, 1),
        }),
    ];
    for case in cases {
        let fg = case.build();
        let known = fg.known_spectrum.clone().expect("full spectrum attached");
        let total: u64 = known.iter().map(|(_, m)| m).sum();
        assert_eq!(total as usize, fg.n(), "multiplicities sum to n");
        let numeric = numeric_spectrum(&fg.graph).unwrap();
        // rebuild the full numeric list and compare as sorted multisets
        let mut expanded: Vec<f64> = Vec::new();
        for (value, mult) in &known {
            expanded.extend(std::iter::repeat_n(*value as f64, *mult as usize));
        }
        expanded.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut m = nalgebra_eigenvalues(&fg.graph);
        m.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(m.len(), expanded.len());
        for (a, b) in m.iter().zip(&expanded) {
            assert!((a - b).abs() < 1e-6, "eigenvalue {a} vs {b}");
        }
        assert!((numeric.lambda_min - *expanded.last().unwrap()).abs() < 1e-6);
    }
}

struct FamilyGraphCase {
    spec: FamilySpec,
}

impl FamilyGraphCase {
    fn spec(spec: FamilySpec) -> Self {
        FamilyGraphCase { spec }
    }
    fn build(&self) -> acyclic_core::families::FamilyGraph {
        generate(&self.spec).expect("family builds")
    }
}

fn nalgebra_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut m = nalgebra::DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        m[(u, v)] = 1.0;
        m[(v, u)] = 1.0;
    }
    m.symmetric_eigenvalues().iter().copied().collect()
}

/// Closed-form strongly-regular spectra agree with numerics on every
/// generated strongly-regular family graph.
#[test]
fn srg_closed_forms_match_numerics() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("K(5,2)", generate(&FamilySpec::Kneser { n: 5, k: 2 }).unwrap().graph),
        ("K(7,2)", generate(&FamilySpec::Kneser { n: 7, k: 2 }).unwrap().graph),
        (
            "K_2(4,2)",
            generate(&FamilySpec::QKneser {
                n: 4,
                k: 2,
                field: FieldSpec::new(2, 1),
            })
            .unwrap()
            .graph,
        ),
        ("X_(2,4)", generate(&FamilySpec::Hamming { m: 2, n: 4 }).unwrap().graph),
        ("OA(3,5)", {
            let oa = cyclic_orthogonal_array(3, 5).unwrap();
            acyclic_core::families::oa_block_complement_graph(&oa, None)
                .unwrap()
                .graph
        }),
    ];
    for (name, g) in graphs {
        let p = srg_parameters(&g).unwrap_or_else(|| panic!("{name} is strongly regular"));
        let closed = srg_spectrum(&p).unwrap();
        assert!(closed.exact, "{name} has integral eigenvalues");
        let numeric = numeric_spectrum(&g).unwrap();
        assert!((closed.lambda2 - numeric.lambda2).abs() < 1e-6, "{name} lambda2");
        assert!(
            (closed.lambda_min - numeric.lambda_min).abs() < 1e-6,
            "{name} lambda_min"
        );
        let summary = min_eigenvalue(&g).unwrap();
        assert!(summary.exact, "{name} should use the closed form");
    }
}

/// A bound-gap certificate implies enumeration finds only canonical maximum
/// forests (cross-check of the counting route on a searchable graph).
#[test]
fn bound_gap_certificates_survive_enumeration() {
    let fg = generate(&FamilySpec::Hamming { m: 2, n: 6 }).unwrap();
    let cert = certify_tau(&fg).unwrap();
    assert_eq!(cert.all_maximum_canonical, TriState::Yes);
    assert_eq!(cert.tau, Some(7));
    let mut all_canonical = true;
    let outcome = enumerate_maximum_forests(&fg.graph, 7, &Budget::default(), |w| {
        all_canonical &= is_canonical_forest(&fg.graph, w).unwrap();
        all_canonical
    });
    assert_eq!(outcome, EnumerationOutcome::Complete);
    assert!(all_canonical);
}

/// The quotient interlacing check accepts the explicit 5-path in the order-9
/// complement Paley graph (a tight induced subgraph, so the exact comparison
/// matters).
#[test]
fn interlacing_accepts_the_order9_path() {
    let (fg, path) = acyclic_core::constructions::paley_small_tree(3).unwrap();
    let spec = min_eigenvalue(&fg.graph).unwrap();
    assert!(spec.exact);
    assert!(
        acyclic_core::bounds::interlacing_subgraph_check(&fg.graph, &path, &spec).unwrap()
    );
}

/// Repeated solves are deterministic and their witnesses re-validate.
#[test]
fn solver_determinism() {
    let fg = generate(&FamilySpec::Kneser { n: 6, k: 2 }).unwrap();
    let a = max_induced_forest(&fg.graph, &Budget::default());
    let b = max_induced_forest(&fg.graph, &Budget::default());
    assert_eq!(a.value, b.value);
    assert_eq!(a.witness, b.witness);
    assert!(fg.graph.forest_check(&a.witness).is_forest);
    assert_eq!(a.witness.len(), a.value);
}

/// Orthogonal-array validation rejects any single-cell mutation.
#[test]
fn oa_single_cell_mutations_are_rejected() {
    let oa = cyclic_orthogonal_array(3, 3).unwrap();
    for r in 0..3 {
        for c in 0..9 {
            for delta in 1..3 {
                let mut bad = oa.clone();
                bad.cells[r][c] = (bad.cells[r][c] + delta) % 3;
                assert!(bad.validate().is_err(), "mutation at ({r},{c}) accepted");
            }
        }
    }
}
