//! Paley graphs and their complements on GF(q), q ≡ 1 (mod 4): vertices are
//! field elements, adjacency depends on whether the difference is a nonzero
//! square.

use super::{expect_regular, FamilyError, FamilyGraph, FamilySpec, FieldSpec};
use crate::algebra::FiniteField;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Builds the Paley graph on `field` (difference a nonzero square), or its
/// complement (difference a non-square) when `complement` is set. Vertices
/// follow field element order. For square orders q0^2 the spectrum
/// ((q0^2-1)/2, (q0-1)/2, -(q0+1)/2) is attached, and the complement carries
/// the subfield GF(q0) as its coclique witness.
pub fn paley_graph(field: &FiniteField, complement: bool) -> Result<FamilyGraph, FamilyError> {
    let q = field.q();
    if q % 4 != 1 {
        return Err(FamilyError::InvalidParams(format!(
            "Paley graphs need q = 1 mod 4 for a symmetric adjacency, got q={q}"
        )));
    }
    let n = q as usize;
    let mut square = vec![false; n];
    for e in field.quadratic_residues()? {
        square[e.0 as usize] = true;
    }
    let mut edges = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            let diff = field.sub(field.element(a).unwrap(), field.element(b).unwrap());
            let is_sq = square[diff.0 as usize];
            if is_sq != complement {
                edges.push((a as usize, b as usize));
            }
        }
    }
    let labels: Vec<String> = field
        .elements()
        .map(|e| field.element_label(e))
        .collect();
    let graph = Graph::new(n, &edges)?.with_labels(labels)?;

    let square_order = field.d().is_multiple_of(2);
    let q0 = if square_order {
        Some(field.p().pow(field.d() / 2))
    } else {
        None
    };

    let known_spectrum = q0.map(|q0| {
        let q0 = q0 as i64;
        let m = ((q0 * q0 - 1) / 2) as u64;
        vec![
            (((q0 * q0 - 1) / 2), 1u64),
            ((q0 - 1) / 2, m),
            (-(q0 + 1) / 2, m),
        ]
    });
    let known_lambda_min = q0.map(|q0| -((q0 as i64 + 1) / 2));

    let coclique_witness = if complement {
        q0.map(|q0| {
            let mut w = VertexSet::empty(n);
            for e in field.frobenius_fixed(q0) {
                w.insert(e.0 as usize);
            }
            w
        })
    } else {
        None
    };

    let fg = FamilyGraph {
        graph,
        spec: Some(FamilySpec::Paley {
            field: FieldSpec::with_modulus(field.p(), field.d(), field.modulus().to_vec()),
            complement,
        }),
        known_spectrum,
        known_lambda_min,
        coclique_witness,
        notes: Vec::new(),
    };
    expect_regular(&fg, (n - 1) / 2, "Paley")?;
    fg.check_witness()?;
    if let (Some(w), Some(q0)) = (&fg.coclique_witness, q0) {
        if w.len() != q0 as usize {
            return Err(FamilyError::VerificationFailed(
                "subfield witness has wrong size".to_string(),
            ));
        }
    }
    Ok(fg)
}
