//! Explicit extremal forests in Kneser and complement Paley graphs, the
//! Blokhuis description of maximum cocliques in complement Paley graphs of
//! square order, and the two-vertex-addition scan built on it.
//!
//! Every construction re-validates through `forest_check` (or independence
//! checks) before it is returned; nothing is trusted from formulas alone.

mod scan;

pub use scan::{
    default_scan_range, full_scan_range, paley_two_add_scan, scan_field_spec, scan_one, ScanHit,
    ScanReport,
};

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteField};
use crate::families::{
    kneser_graph, paley_graph, FamilyError, FamilyGraph, FieldSpec,
};
use crate::graph::GraphError;
use crate::vset::VertexSet;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("construction failed validation: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Looks up a vertex by label, which the family generators always attach.
fn vertex_of(fg: &FamilyGraph, label: &str) -> Result<usize, ConstructionError> {
    fg.graph.vertex_by_label(label).ok_or_else(|| {
        ConstructionError::VerificationFailed(format!("missing vertex labelled {label}"))
    })
}

/// The large forest in K(2k+1,k) for k > 3: all k-sets avoiding the element
/// 2k+1 (a perfect matching) together with the 2k-2 sets
/// {i, i+1, .., i+k-3} mod 2k-1 joined with {2k, 2k+1}. Validates to a
/// forest of order C(2k,k) + 2k - 2, which exceeds alpha + 1, so the maximum
/// forests of these graphs are not canonical.
pub fn kneser_odd_forest(k: u32) -> Result<(FamilyGraph, VertexSet), ConstructionError> {
    if k <= 3 {
        return Err(ConstructionError::InvalidParams(
            "the matched-pair forest needs k > 3".to_string(),
        ));
    }
    let n = 2 * k + 1;
    let fg = kneser_graph(n, k)?;
    let nv = fg.n();
    let mut forest = VertexSet::empty(nv);
    // F1: every k-set inside {1..2k}
    for v in 0..nv {
        let label = fg.graph.label(v).unwrap();
        if !label.contains(&format!("{}", n)) {
            forest.insert(v);
        }
    }
    // F2: gamma_i = {i, i+1, .., i+k-3 mod 2k-1} + {2k, 2k+1}
    let m = 2 * k - 1;
    for i in 1..=2 * k - 2 {
        let mut set: Vec<u32> = (0..k - 2).map(|j| (i + j - 1) % m + 1).collect();
        set.push(2 * k);
        set.push(2 * k + 1);
        set.sort_unstable();
        let label = crate::families::set_label_for(&set);
        forest.insert(vertex_of(&fg, &label)?);
    }

    let expected =
        num_integer::binomial(2 * k as u128, k as u128) as usize + 2 * k as usize - 2;
    if forest.len() != expected {
        return Err(ConstructionError::VerificationFailed(format!(
            "forest has {} vertices, expected {expected}",
            forest.len()
        )));
    }
    let fc = fg.graph.forest_check(&forest);
    if !fc.is_forest {
        return Err(ConstructionError::VerificationFailed(
            "vertex set induces a cycle".to_string(),
        ));
    }
    Ok((fg, forest))
}

/// The 23-vertex forest in K(7,3): all triples from {1..6} plus {1,2,7},
/// {1,3,7}, {2,3,7}. Meets the edge-count bound exactly.
pub fn k73_forest() -> Result<(FamilyGraph, VertexSet), ConstructionError> {
    let fg = kneser_graph(7, 3)?;
    let mut forest = VertexSet::empty(fg.n());
    for v in 0..fg.n() {
        if !fg.graph.label(v).unwrap().contains('7') {
            forest.insert(v);
        }
    }
    for label in ["{1,2,7}", "{1,3,7}", "{2,3,7}"] {
        forest.insert(vertex_of(&fg, label)?);
    }
    if forest.len() != 23 {
        return Err(ConstructionError::VerificationFailed(format!(
            "expected 23 vertices, found {}",
            forest.len()
        )));
    }
    let fc = fg.graph.forest_check(&forest);
    if !fc.is_forest {
        return Err(ConstructionError::VerificationFailed(
            "vertex set induces a cycle".to_string(),
        ));
    }
    Ok((fg, forest))
}

/// The 7-vertex forest in K(n,2) for n >= 5:
/// {1,2},{3,4},{1,3},{2,4},{1,4},{2,3},{1,5}.
pub fn kn2_forest7(n: u32) -> Result<(FamilyGraph, VertexSet), ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::InvalidParams(
            "the 7-vertex forest needs n >= 5".to_string(),
        ));
    }
    let fg = kneser_graph(n, 2)?;
    let mut forest = VertexSet::empty(fg.n());
    for label in [
        "{1,2}", "{3,4}", "{1,3}", "{2,4}", "{1,4}", "{2,3}", "{1,5}",
    ] {
        forest.insert(vertex_of(&fg, label)?);
    }
    let fc = fg.graph.forest_check(&forest);
    if forest.len() != 7 || !fc.is_forest {
        return Err(ConstructionError::VerificationFailed(
            "7-vertex set is not a forest".to_string(),
        ));
    }
    Ok((fg, forest))
}

/// Field presentations used for the small complement Paley graphs, chosen so
/// vertex labels match the usual explicit descriptions.
pub fn paper_field_spec(q: u32) -> Option<FieldSpec> {
    match q {
        3 => Some(FieldSpec::with_modulus(3, 2, vec![1, 0, 1])), // x^2+1
        5 => Some(FieldSpec::with_modulus(5, 2, vec![1, 1, 1])), // x^2+x+1
        7 => Some(FieldSpec::with_modulus(7, 2, vec![1, 0, 1])), // x^2+1
        _ => None,
    }
}

/// The small trees in complement Paley graphs of square order: the subfield
/// GF(q) plus two explicit vertices. Orders 5, 7, 9 for q = 3, 5, 7; a path
/// for q = 3 and trees for q = 5, 7.
pub fn paley_small_tree(q: u32) -> Result<(FamilyGraph, VertexSet), ConstructionError> {
    let spec = paper_field_spec(q).ok_or_else(|| {
        ConstructionError::InvalidParams(format!("no explicit tree recorded for q = {q}"))
    })?;
    let field = spec.build()?;
    let fg = paley_graph(&field, true)?;
    let mut set = fg
        .coclique_witness
        .clone()
        .expect("square-order complement carries the subfield witness");
    let extra: [&str; 2] = match q {
        3 => ["x+1", "x+2"],
        5 => ["x+2", "x+4"],
        7 => ["x+2", "x+5"],
        _ => unreachable!(),
    };
    for label in extra {
        set.insert(vertex_of(&fg, label)?);
    }
    let fc = fg.graph.forest_check(&set);
    if !fc.is_forest {
        return Err(ConstructionError::VerificationFailed(
            "subfield plus the two vertices induces a cycle".to_string(),
        ));
    }
    if fc.components != 1 {
        return Err(ConstructionError::VerificationFailed(
            "expected a single tree".to_string(),
        ));
    }
    if set.len() as u32 != q + 2 {
        return Err(ConstructionError::VerificationFailed(
            "tree has the wrong order".to_string(),
        ));
    }
    Ok((fg, set))
}

/// All maximum cocliques of the complement Paley graph on GF(q^2): the
/// distinct translates s*GF(q) + e with s a nonzero square. Deduplicated,
/// giving q(q+1)/2 sets of size q, each validated as independent.
pub fn blokhuis_sets(
    field: &FiniteField,
    fg: &FamilyGraph,
    q0: u32,
) -> Result<Vec<VertexSet>, ConstructionError> {
    let n = field.q() as usize;
    assert_eq!(fg.n(), n);
    let subfield = field.frobenius_fixed(q0);
    if subfield.len() as u32 != q0 {
        return Err(ConstructionError::VerificationFailed(
            "subfield has the wrong order".to_string(),
        ));
    }

    // distinct additive subgroups s * GF(q0) over nonzero squares s
    let mut subgroups: Vec<Vec<u32>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for s in field.quadratic_residues()? {
        let mut sub: Vec<u32> = subfield.iter().map(|&t| field.mul(s, t).0).collect();
        sub.sort_unstable();
        if seen.insert(sub.clone()) {
            subgroups.push(sub);
        }
    }

    // cosets of each subgroup, visited in element order
    let mut out = Vec::new();
    for sub in &subgroups {
        let mut covered = vec![false; n];
        for e in 0..n as u32 {
            if covered[e as usize] {
                continue;
            }
            let mut set = VertexSet::empty(n);
            for &x in sub {
                let y = field.add(field.element(x).unwrap(), field.element(e).unwrap());
                covered[y.0 as usize] = true;
                set.insert(y.0 as usize);
            }
            if set.len() as u32 != q0 || !fg.graph.is_independent(&set) {
                return Err(ConstructionError::VerificationFailed(
                    "translate is not a maximum coclique".to_string(),
                ));
            }
            out.push(set);
        }
    }
    let expected = (q0 as usize) * (q0 as usize + 1) / 2;
    if out.len() != expected {
        return Err(ConstructionError::VerificationFailed(format!(
            "expected {expected} distinct cocliques, found {}",
            out.len()
        )));
    }
    Ok(out)
}

/// Convenience wrapper: builds the graph for GF(q^2) (explicit presentation
/// for q = 3, 5, 7, default otherwise) and returns its Blokhuis cocliques.
pub fn blokhuis_independent_sets(
    q: u32,
) -> Result<(FamilyGraph, Vec<VertexSet>), ConstructionError> {
    let spec = scan_field_spec(q)?;
    let field = spec.build()?;
    let fg = paley_graph(&field, true)?;
    let sets = blokhuis_sets(&field, &fg, q)?;
    Ok((fg, sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{is_canonical_forest, max_independent_set, Budget};

    #[test]
    fn kneser_odd_forest_orders() {
        let (fg, forest) = kneser_odd_forest(4).unwrap();
        assert_eq!(fg.n(), 126);
        assert_eq!(forest.len(), 76);
        // exceeds alpha + 1 = C(8,3) + 1 = 57
        assert!(forest.len() > 57);
        let (fg5, forest5) = kneser_odd_forest(5).unwrap();
        assert_eq!(forest5.len(), 260);
        assert!(fg5.graph.forest_check(&forest5).is_forest);
        assert!(kneser_odd_forest(3).is_err());
        let _ = fg;
    }

    #[test]
    fn kneser_odd_forest_structure_claims() {
        // each F2 vertex is adjacent to at most one endpoint of each F1 edge;
        // consecutive gammas share exactly one F1 neighbour, others none
        for k in [4u32, 5] {
            let (fg, _) = kneser_odd_forest(k).unwrap();
            let n = 2 * k + 1;
            let m = 2 * k - 1;
            let gamma: Vec<usize> = (1..=2 * k - 2)
                .map(|i| {
                    let mut set: Vec<u32> = (0..k - 2).map(|j| (i + j - 1) % m + 1).collect();
                    set.push(2 * k);
                    set.push(2 * k + 1);
                    set.sort_unstable();
                    fg.graph
                        .vertex_by_label(&crate::families::set_label_for(&set))
                        .unwrap()
                })
                .collect();
            let f1: Vec<usize> = (0..fg.n())
                .filter(|&v| !fg.graph.label(v).unwrap().contains(&format!("{n}")))
                .collect();
            let f1_set = VertexSet::from_indices(fg.n(), &f1);
            // F1 edges
            let mut f1_edges = Vec::new();
            for &u in &f1 {
                for w in fg.graph.neighbors(u).intersection(&f1_set).iter() {
                    if w > u {
                        f1_edges.push((u, w));
                    }
                }
            }
            for &g1 in &gamma {
                for &(u, w) in &f1_edges {
                    let hits =
                        fg.graph.has_edge(g1, u) as usize + fg.graph.has_edge(g1, w) as usize;
                    assert!(hits <= 1);
                }
            }
            for (i, &gi) in gamma.iter().enumerate() {
                for (j, &gj) in gamma.iter().enumerate().skip(i + 1) {
                    let common = fg
                        .graph
                        .neighbors(gi)
                        .intersection(fg.graph.neighbors(gj))
                        .intersection(&f1_set)
                        .len();
                    if j == i + 1 {
                        assert_eq!(common, 1, "k={k} i={i} j={j}");
                    } else {
                        assert_eq!(common, 0, "k={k} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn k73_forest_is_extremal_and_not_canonical() {
        let (fg, forest) = k73_forest().unwrap();
        assert_eq!(forest.len(), 23);
        assert!(!is_canonical_forest(&fg.graph, &forest).unwrap());
    }

    #[test]
    fn kn2_forest7_for_small_n() {
        for n in [5u32, 6] {
            let (fg, forest) = kn2_forest7(n).unwrap();
            assert_eq!(forest.len(), 7);
            assert!(fg.graph.forest_check(&forest).is_forest);
            assert!(!is_canonical_forest(&fg.graph, &forest).unwrap());
        }
        assert!(kn2_forest7(4).is_err());
    }

    #[test]
    fn paley_small_trees() {
        for (q, order) in [(3u32, 5usize), (5, 7), (7, 9)] {
            let (fg, set) = paley_small_tree(q).unwrap();
            assert_eq!(set.len(), order);
            let fc = fg.graph.forest_check(&set);
            assert!(fc.is_forest);
            assert_eq!(fc.components, 1);
        }
        assert!(paley_small_tree(9).is_err());
    }

    #[test]
    fn paley_9_tree_is_a_path() {
        let (fg, set) = paley_small_tree(3).unwrap();
        let degrees: Vec<usize> = set.iter().map(|v| fg.graph.induced_degree(&set, v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
        assert!(degrees.iter().all(|&d| d <= 2));
    }

    #[test]
    fn blokhuis_sets_q3_are_exactly_the_maximum_cocliques() {
        let (fg, sets) = blokhuis_independent_sets(3).unwrap();
        assert_eq!(sets.len(), 6); // q(q+1)/2
        let alpha = max_independent_set(&fg.graph, &Budget::default());
        assert_eq!(alpha.value, 3);
        // exhaustively collect all maximum cocliques of the 9-vertex graph
        let mut all = Vec::new();
        for mask in 0u32..(1 << 9) {
            if mask.count_ones() != 3 {
                continue;
            }
            let s = VertexSet::from_indices(
                9,
                &(0..9).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
            );
            if fg.graph.is_independent(&s) {
                all.push(s.indices());
            }
        }
        let mut listed: Vec<Vec<usize>> = sets.iter().map(|s| s.indices()).collect();
        listed.sort();
        all.sort();
        assert_eq!(listed, all);
    }

    #[test]
    fn blokhuis_counts() {
        let (_, sets) = blokhuis_independent_sets(5).unwrap();
        assert_eq!(sets.len(), 15);
    }

    #[test]
    fn subfield_is_among_blokhuis_sets() {
        let (_, sets) = blokhuis_independent_sets(3).unwrap();
        assert!(sets.iter().any(|s| s.indices() == vec![0, 1, 2]));
    }
}
