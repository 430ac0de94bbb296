//! Kneser graphs K(n,k): k-subsets of {1..n}, adjacent iff disjoint.

use super::{binom, expect_regular, FamilyError, FamilyGraph, FamilySpec};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// k-subsets of {1..n} in colexicographic order, i.e. ordered by the value of
/// their characteristic bitmask.
pub(crate) fn colex_ksubsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut sets: Vec<(u64, Vec<u32>)> = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(k as usize);
    fn rec(n: u32, k: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<(u64, Vec<u32>)>) {
        if cur.len() == k as usize {
            let mask = cur.iter().fold(0u64, |m, &e| m | 1 << (e - 1));
            out.push((mask, cur.clone()));
            return;
        }
        for e in start..=n {
            cur.push(e);
            rec(n, k, e + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut sets);
    sets.sort_by_key(|(mask, _)| *mask);
    sets.into_iter().map(|(_, s)| s).collect()
}

pub(crate) fn set_label(set: &[u32]) -> String {
    let parts: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Builds K(n,k) with colex vertex order. The coclique witness is the family
/// of all k-sets containing the element 1, of size C(n-1,k-1); the smallest
/// eigenvalue is -C(n-k-1,k-1).
pub fn kneser_graph(n: u32, k: u32) -> Result<FamilyGraph, FamilyError> {
    if k == 0 || n < 2 * k {
        return Err(FamilyError::InvalidParams(format!(
            "Kneser graph needs n >= 2k >= 2, got n={n}, k={k}"
        )));
    }
    if n > 63 {
        return Err(FamilyError::InvalidParams(
            "ground sets beyond 63 elements are not supported".to_string(),
        ));
    }
    let sets = colex_ksubsets(n, k);
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << (e - 1)))
        .collect();
    let nv = sets.len();
    let mut edges = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    let labels: Vec<String> = sets.iter().map(|s| set_label(s)).collect();
    let graph = Graph::new(nv, &edges)?.with_labels(labels)?;

    let mut witness = VertexSet::empty(nv);
    for (i, m) in masks.iter().enumerate() {
        if m & 1 == 1 {
            witness.insert(i);
        }
    }

    let fg = FamilyGraph {
        graph,
        spec: Some(FamilySpec::Kneser { n, k }),
        known_spectrum: None,
        known_lambda_min: Some(-(binom((n - k - 1) as u64, (k - 1) as u64) as i64)),
        coclique_witness: Some(witness),
        notes: Vec::new(),
    };
    expect_regular(&fg, binom((n - k) as u64, k as u64) as usize, "Kneser")?;
    fg.check_witness()?;
    let expected_witness = binom((n - 1) as u64, (k - 1) as u64) as usize;
    if fg.coclique_witness.as_ref().unwrap().len() != expected_witness {
        return Err(FamilyError::VerificationFailed(
            "witness size mismatch".to_string(),
        ));
    }
    Ok(fg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k42_is_a_perfect_matching() {
        let fg = kneser_graph(4, 2).unwrap();
        assert_eq!(fg.n(), 6);
        assert_eq!(fg.valency(), 1);
        assert_eq!(fg.graph.edge_count(), 3);
    }

    #[test]
    fn k52_is_petersen() {
        let fg = kneser_graph(5, 2).unwrap();
        assert_eq!(fg.n(), 10);
        assert_eq!(fg.valency(), 3);
        assert_eq!(fg.coclique_witness.as_ref().unwrap().len(), 4);
        assert_eq!(fg.known_lambda_min, Some(-2));
    }

    #[test]
    fn k73_parameters() {
        let fg = kneser_graph(7, 3).unwrap();
        assert_eq!(fg.n(), 35);
        assert_eq!(fg.valency(), 4);
        assert_eq!(fg.coclique_witness.as_ref().unwrap().len(), 15);
        assert_eq!(fg.known_lambda_min, Some(-3));
    }

    #[test]
    fn kneser_k1_is_complete() {
        let fg = kneser_graph(4, 1).unwrap();
        assert_eq!(fg.valency(), 3);
        assert_eq!(fg.n(), 4);
    }

    #[test]
    fn rejects_small_n() {
        assert!(kneser_graph(3, 2).is_err());
    }

    #[test]
    fn colex_order_is_stable() {
        let sets = colex_ksubsets(5, 2);
        assert_eq!(sets[0], vec![1, 2]);
        assert_eq!(sets[1], vec![1, 3]);
        assert_eq!(sets[2], vec![2, 3]);
        assert_eq!(sets[3], vec![1, 4]);
        let fg = kneser_graph(5, 2).unwrap();
        assert_eq!(fg.graph.label(0), Some("{1,2}"));
        assert_eq!(fg.graph.label(9), Some("{4,5}"));
    }
}
