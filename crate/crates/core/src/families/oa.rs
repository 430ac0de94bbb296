//! Orthogonal arrays OA(m,n) and the complement of their block graphs:
//! vertices are columns, adjacent iff the columns disagree in every row.

use serde::{Deserialize, Serialize};

use super::{FamilyError, FamilyGraph, FamilySpec};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// An m x n^2 array over Z_n in which every pair of rows exhibits all n^2
/// ordered symbol pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalArray {
    pub m: u32,
    pub n: u32,
    pub cells: Vec<Vec<u32>>,
}

impl OrthogonalArray {
    /// Checks the defining property on every pair of rows.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let n = self.n as usize;
        let cols = n * n;
        if self.cells.len() != self.m as usize {
            return Err(FamilyError::VerificationFailed(
                "row count does not match m".to_string(),
            ));
        }
        for row in &self.cells {
            if row.len() != cols {
                return Err(FamilyError::VerificationFailed(
                    "row length does not match n^2".to_string(),
                ));
            }
            if row.iter().any(|&c| c >= self.n) {
                return Err(FamilyError::VerificationFailed(
                    "cell entry out of range".to_string(),
                ));
            }
        }
        for r in 0..self.m as usize {
            for s in r + 1..self.m as usize {
                let mut seen = vec![false; cols];
                for c in 0..cols {
                    let pair = self.cells[r][c] as usize * n + self.cells[s][c] as usize;
                    if seen[pair] {
                        return Err(FamilyError::VerificationFailed(format!(
                            "rows {r} and {s} repeat a symbol pair"
                        )));
                    }
                    seen[pair] = true;
                }
            }
        }
        Ok(())
    }
}

/// The cyclic construction over Z_n for prime n: columns are indexed by
/// (a,b), rows are a, b, and a + i*b for i = 1..m-2.
pub fn cyclic_orthogonal_array(m: u32, n: u32) -> Result<OrthogonalArray, FamilyError> {
    if !(3..=n + 1).contains(&m) {
        return Err(FamilyError::InvalidParams(format!(
            "cyclic array needs 3 <= m <= n+1, got m={m}, n={n}"
        )));
    }
    let is_prime = n >= 2 && (2..n).all(|f| !n.is_multiple_of(f));
    if !is_prime {
        return Err(FamilyError::InvalidParams(format!(
            "cyclic construction needs n prime, got n={n}"
        )));
    }
    let cols = (n * n) as usize;
    let mut cells = vec![vec![0u32; cols]; m as usize];
    for a in 0..n {
        for b in 0..n {
            let c = (a * n + b) as usize;
            cells[0][c] = a;
            cells[1][c] = b;
            for i in 1..=(m - 2) {
                cells[(i + 1) as usize][c] = (a + i * b) % n;
            }
        }
    }
    let oa = OrthogonalArray { m, n, cells };
    oa.validate()?;
    Ok(oa)
}

/// Complement of the block graph of an orthogonal array: n^2 column vertices,
/// adjacent iff no row gives them equal entries. The valency is taken from
/// the constructed graph, (n-1)(n+1-m); the smallest eigenvalue is m-n-1 and
/// the witness is the set of columns with first entry 0.
pub fn oa_block_complement_graph(
    oa: &OrthogonalArray,
    spec: Option<FamilySpec>,
) -> Result<FamilyGraph, FamilyError> {
    oa.validate()?;
    let n = oa.n as usize;
    let nv = n * n;
    let mut edges = Vec::new();
    for i in 0..nv {
        for j in i + 1..nv {
            if (0..oa.m as usize).all(|r| oa.cells[r][i] != oa.cells[r][j]) {
                edges.push((i, j));
            }
        }
    }
    let labels: Vec<String> = (0..nv)
        .map(|c| {
            let parts: Vec<String> = (0..oa.m as usize)
                .map(|r| oa.cells[r][c].to_string())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let graph = Graph::new(nv, &edges)?.with_labels(labels)?;

    let mut witness = VertexSet::empty(nv);
    for c in 0..nv {
        if oa.cells[0][c] == 0 {
            witness.insert(c);
        }
    }

    let computed_valency = graph.regularity().ok_or_else(|| {
        FamilyError::VerificationFailed("block complement is not regular".to_string())
    })?;
    let expected = (n - 1) * (n + 1 - oa.m as usize);
    let mut notes = Vec::new();
    if computed_valency != expected {
        return Err(FamilyError::VerificationFailed(format!(
            "block complement valency {computed_valency}, expected (n-1)(n+1-m) = {expected}"
        )));
    }
    notes.push(format!(
        "valency computed from the disagree-everywhere adjacency is (n-1)(n+1-m) = \
         {computed_valency}; m(n-1) is the valency of the block graph itself, i.e. of \
         this graph's complement"
    ));

    let fg = FamilyGraph {
        graph,
        spec,
        known_spectrum: None,
        known_lambda_min: Some(oa.m as i64 - oa.n as i64 - 1),
        coclique_witness: Some(witness),
        notes,
    };
    fg.check_witness()?;
    if fg.coclique_witness.as_ref().unwrap().len() != n {
        return Err(FamilyError::VerificationFailed(
            "witness column set has wrong size".to_string(),
        ));
    }
    Ok(fg)
}
