//! Tensor powers of complete graphs: X_{m,n} has vertex set Z_n^m with two
//! sequences adjacent iff they differ at every coordinate.

use super::{expect_regular, FamilyError, FamilyGraph, FamilySpec};
use crate::graph::Graph;
use crate::vset::VertexSet;

fn digits(mut v: usize, m: u32, n: u32) -> Vec<u32> {
    // most significant coordinate first, matching lexicographic vertex order
    let mut out = vec![0u32; m as usize];
    for i in (0..m as usize).rev() {
        out[i] = (v % n as usize) as u32;
        v /= n as usize;
    }
    out
}

/// Builds X_{m,n} with vertices in lexicographic string order. Valency is
/// (n-1)^m, the smallest eigenvalue -(n-1)^(m-1); the coclique witness is the
/// set of strings with first coordinate 0.
pub fn hamming_tensor_graph(m: u32, n: u32) -> Result<FamilyGraph, FamilyError> {
    if m == 0 || n == 0 {
        return Err(FamilyError::InvalidParams(
            "tensor power needs m >= 1 and n >= 1".to_string(),
        ));
    }
    let nv = (n as u64).checked_pow(m).and_then(|v| {
        if v <= 1 << 22 {
            Some(v as usize)
        } else {
            None
        }
    });
    let nv = nv.ok_or_else(|| FamilyError::InvalidParams("n^m too large".to_string()))?;

    let strings: Vec<Vec<u32>> = (0..nv).map(|v| digits(v, m, n)).collect();
    let mut edges = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            if strings[i]
                .iter()
                .zip(&strings[j])
                .all(|(a, b)| a != b)
            {
                edges.push((i, j));
            }
        }
    }
    let labels: Vec<String> = strings
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|d| d.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let graph = Graph::new(nv, &edges)?.with_labels(labels)?;

    let witness_size = nv / n as usize; // n^(m-1)
    let witness = VertexSet::from_indices(nv, &(0..witness_size).collect::<Vec<_>>());

    let valency = (n as u64 - 1).pow(m) as usize;
    let lambda_min = -((n as i64 - 1).pow(m - 1));
    let fg = FamilyGraph {
        graph,
        spec: Some(FamilySpec::Hamming { m, n }),
        known_spectrum: None,
        known_lambda_min: Some(lambda_min),
        coclique_witness: Some(witness),
        notes: Vec::new(),
    };
    expect_regular(&fg, valency, "tensor power")?;
    fg.check_witness()?;
    Ok(fg)
}
