//! Canonical forests: a forest F is canonical when some single vertex
//! deletion leaves an independent set. Equivalently, F is NOT canonical
//! exactly when it contains an induced path on four vertices or two disjoint
//! edges. Both characterizations are implemented; the deletion form is the
//! primary one and the structural form cross-checks it in debug builds.

use super::SearchError;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// True iff some v in F leaves F\{v} independent. Errors when F does not
/// induce a forest.
pub fn is_canonical_forest(g: &Graph, f: &VertexSet) -> Result<bool, SearchError> {
    let check = g.forest_check(f);
    if !check.is_forest {
        return Err(SearchError::NotAForest);
    }
    let by_deletion = canonical_by_deletion(g, f);
    debug_assert_eq!(
        by_deletion,
        !contains_p4_or_2k2(g, f),
        "the two canonicity characterizations disagree"
    );
    Ok(by_deletion)
}

fn canonical_by_deletion(g: &Graph, f: &VertexSet) -> bool {
    if f.len() <= 1 {
        return true;
    }
    // Only vertices covering every edge are worth deleting; with at most one
    // such try per edge endpoint this is quadratic at worst on forests.
    for v in f.iter() {
        let mut rest = f.clone();
        rest.remove(v);
        if g.is_independent(&rest) {
            return true;
        }
    }
    false
}

/// Structural characterization: an induced P4 or an induced pair of disjoint
/// edges. On a forest this reduces to component shape: two components with
/// edges give disjoint edges; a single edged component fails exactly when it
/// contains a path on four vertices, i.e. two adjacent vertices of degree
/// at least 2.
pub(crate) fn contains_p4_or_2k2(g: &Graph, f: &VertexSet) -> bool {
    let members: Vec<usize> = f.iter().collect();
    // component labels via repeated BFS over the induced subgraph
    let mut comp = vec![usize::MAX; g.n()];
    let mut ncomp = 0;
    for &start in &members {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut queue = vec![start];
        comp[start] = ncomp;
        while let Some(u) = queue.pop() {
            for w in g.neighbors(u).intersection(f).iter() {
                if comp[w] == usize::MAX {
                    comp[w] = ncomp;
                    queue.push(w);
                }
            }
        }
        ncomp += 1;
    }
    let mut comp_has_edge = vec![false; ncomp];
    for &u in &members {
        if g.induced_degree(f, u) > 0 {
            comp_has_edge[comp[u]] = true;
        }
    }
    if comp_has_edge.iter().filter(|&&b| b).count() >= 2 {
        return true; // two disjoint edges across components
    }
    // induced P4 inside one tree component: an edge whose endpoints both
    // have induced degree >= 2
    for &u in &members {
        if g.induced_degree(f, u) < 2 {
            continue;
        }
        for w in g.neighbors(u).intersection(f).iter() {
            if w > u && g.induced_degree(f, w) >= 2 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coclique_plus_vertex_is_canonical() {
        // star: center 0 adjacent to 1,2,3
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_canonical_forest(&g, &VertexSet::full(4)).unwrap());
    }

    #[test]
    fn p3_is_canonical() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_canonical_forest(&g, &VertexSet::full(3)).unwrap());
    }

    #[test]
    fn p4_is_not_canonical() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_canonical_forest(&g, &VertexSet::full(4)).unwrap());
    }

    #[test]
    fn two_disjoint_edges_are_not_canonical() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_canonical_forest(&g, &VertexSet::full(4)).unwrap());
    }

    #[test]
    fn single_edge_plus_isolated_is_canonical() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(is_canonical_forest(&g, &VertexSet::full(3)).unwrap());
    }

    #[test]
    fn rejects_non_forest() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_canonical_forest(&g, &VertexSet::full(3)).is_err());
    }

    #[test]
    fn characterizations_agree_on_all_subsets_of_a_tree() {
        // spider tree on 7 vertices
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (0, 6)]).unwrap();
        for mask in 0u32..(1 << 7) {
            let s = VertexSet::from_indices(
                7,
                &(0..7).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
            );
            if g.forest_check(&s).is_forest {
                assert_eq!(
                    canonical_by_deletion(&g, &s),
                    !contains_p4_or_2k2(&g, &s),
                    "mask {mask:b}"
                );
            }
        }
    }
}
