//! q-Kneser graphs K_q(n,k): k-dimensional subspaces of GF(q)^n, adjacent iff
//! they intersect trivially.

use super::{expect_regular, FamilyError, FamilyGraph, FamilySpec, FieldSpec};
use crate::algebra::{gaussian_binomial, subspaces, FiniteField};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Builds K_q(n,k) with vertices in subspace enumeration order. The coclique
/// witness is the family of k-spaces containing the first standard basis
/// vector, of size (n-1 choose k-1)_q.
pub fn q_kneser_graph(n: u32, k: u32, field: &FiniteField) -> Result<FamilyGraph, FamilyError> {
    if k == 0 || n < 2 * k {
        return Err(FamilyError::InvalidParams(format!(
            "q-Kneser graph needs n >= 2k >= 2, got n={n}, k={k}"
        )));
    }
    let subs = subspaces(n as usize, k as usize, field)?;
    let nv = subs.len();
    let q = field.q() as u64;
    debug_assert_eq!(nv as u128, gaussian_binomial(n as u64, k as u64, q));

    let mut edges = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            if subs[i].meet_trivial(&subs[j], field)? {
                edges.push((i, j));
            }
        }
    }
    let labels: Vec<String> = subs.iter().map(|s| s.label()).collect();
    let graph = Graph::new(nv, &edges)?.with_labels(labels)?;

    let mut e1 = vec![0u32; n as usize];
    e1[0] = 1;
    let mut witness = VertexSet::empty(nv);
    for (i, s) in subs.iter().enumerate() {
        if s.contains_vector(&e1, field) {
            witness.insert(i);
        }
    }

    let fg = FamilyGraph {
        graph,
        spec: Some(FamilySpec::QKneser {
            n,
            k,
            field: FieldSpec::with_modulus(field.p(), field.d(), field.modulus().to_vec()),
        }),
        known_spectrum: None,
        known_lambda_min: None,
        coclique_witness: Some(witness),
        notes: Vec::new(),
    };
    // valency: subspaces meeting a fixed k-space trivially, q^{k^2} * (n-k choose k)_q
    let valency = (q as u128).pow(k * k) * gaussian_binomial((n - k) as u64, k as u64, q);
    expect_regular(&fg, valency as usize, "q-Kneser")?;
    fg.check_witness()?;
    let expected = gaussian_binomial((n - 1) as u64, (k - 1) as u64, q) as usize;
    if fg.coclique_witness.as_ref().unwrap().len() != expected {
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
    fn k2_4_2_parameters() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let fg = q_kneser_graph(4, 2, &f).unwrap();
        assert_eq!(fg.n(), 35);
        assert_eq!(fg.valency(), 16);
        assert_eq!(fg.coclique_witness.as_ref().unwrap().len(), 7);
    }

    #[test]
    fn k3_4_2_parameters() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let fg = q_kneser_graph(4, 2, &f).unwrap();
        assert_eq!(fg.n(), 130);
        assert_eq!(fg.coclique_witness.as_ref().unwrap().len(), 13);
    }

    #[test]
    fn k1_case_is_complete() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let fg = q_kneser_graph(2, 1, &f).unwrap();
        // 3 distinct 1-spaces of GF(2)^2, pairwise trivial meet
        assert_eq!(fg.n(), 3);
        assert_eq!(fg.valency(), 2);
    }

    #[test]
    fn rejects_small_n() {
        let f = FiniteField::new(2, 1, None).unwrap();
        assert!(q_kneser_graph(3, 2, &f).is_err());
    }
}
