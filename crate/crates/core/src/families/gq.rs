//! Generalized quadrangles and their non-collinearity graphs. The built-in
//! model is the symplectic quadrangle W(q): points are the 1-spaces of
//! GF(q)^4, lines the 2-spaces that are totally isotropic under the
//! alternating form x1*y2 - x2*y1 + x3*y4 - x4*y3.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{FamilyError, FamilyGraph, FamilySpec};
use crate::algebra::{FieldElement, FiniteField};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A point-line geometry with generalized-quadrangle parameters (s,t):
/// lines of s+1 points, t+1 lines per point, two points on at most one
/// common line, and for P not on L a unique point of L collinear with P.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncidenceStructure {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
    pub s: u32,
    pub t: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_labels: Option<Vec<String>>,
}

impl IncidenceStructure {
    /// Derives (s,t) from raw lines and checks uniformity; the quadrangle
    /// axioms are checked separately by [`IncidenceStructure::verify_gq`].
    pub fn from_lines(points: usize, lines: Vec<Vec<usize>>) -> Result<Self, FamilyError> {
        let line_size = lines
            .first()
            .map(|l| l.len())
            .ok_or_else(|| FamilyError::VerificationFailed("no lines".to_string()))?;
        if line_size < 2 {
            return Err(FamilyError::VerificationFailed(
                "lines need at least 2 points".to_string(),
            ));
        }
        let mut degree = vec![0usize; points];
        for l in &lines {
            if l.len() != line_size {
                return Err(FamilyError::VerificationFailed(
                    "line sizes are not uniform".to_string(),
                ));
            }
            for &p in l {
                if p >= points {
                    return Err(FamilyError::VerificationFailed(
                        "line references a missing point".to_string(),
                    ));
                }
                degree[p] += 1;
            }
        }
        let point_degree = degree[0];
        if degree.iter().any(|&d| d != point_degree) {
            return Err(FamilyError::VerificationFailed(
                "points lie on different numbers of lines".to_string(),
            ));
        }
        if point_degree < 1 {
            return Err(FamilyError::VerificationFailed(
                "isolated point".to_string(),
            ));
        }
        Ok(IncidenceStructure {
            points,
            lines,
            s: (line_size - 1) as u32,
            t: (point_degree - 1) as u32,
            point_labels: None,
        })
    }

    fn collinearity(&self) -> Vec<VertexSet> {
        let mut coll = vec![VertexSet::empty(self.points); self.points];
        for l in &self.lines {
            for &p in l {
                for &q in l {
                    if p != q {
                        coll[p].insert(q);
                    }
                }
            }
        }
        coll
    }

    /// Exhaustively checks the quadrangle axioms.
    pub fn verify_gq(&self) -> Result<(), FamilyError> {
        // two distinct points lie on at most one common line
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for l in &self.lines {
            for i in 0..l.len() {
                for j in i + 1..l.len() {
                    let key = (l[i].min(l[j]), l[i].max(l[j]));
                    if !seen.insert(key) {
                        return Err(FamilyError::VerificationFailed(format!(
                            "points {} and {} lie on two lines",
                            key.0, key.1
                        )));
                    }
                }
            }
        }
        // the regulus axiom: for P not on L, exactly one point of L is
        // collinear with P
        let coll = self.collinearity();
        for (li, l) in self.lines.iter().enumerate() {
            let on_line: BTreeSet<usize> = l.iter().copied().collect();
            for p in 0..self.points {
                if on_line.contains(&p) {
                    continue;
                }
                let hits = l.iter().filter(|&&x| coll[p].contains(x)).count();
                if hits != 1 {
                    return Err(FamilyError::VerificationFailed(format!(
                        "point {p} sees {hits} points of line {li}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn alternating_form(f: &FiniteField, x: &[FieldElement; 4], y: &[FieldElement; 4]) -> FieldElement {
    let t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    let t2 = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
    f.add(t1, t2)
}

fn normalize(f: &FiniteField, v: &[FieldElement; 4]) -> [FieldElement; 4] {
    let lead = v.iter().find(|e| e.0 != 0).expect("nonzero vector");
    let inv = f.inv(*lead).expect("nonzero leading coordinate");
    [
        f.mul(v[0], inv),
        f.mul(v[1], inv),
        f.mul(v[2], inv),
        f.mul(v[3], inv),
    ]
}

/// Builds W(q). Points are normalized representatives (first nonzero
/// coordinate scaled to 1) enumerated in lexicographic coordinate order;
/// lines are the totally isotropic 2-spaces. All quadrangle invariants are
/// verified before returning.
pub fn symplectic_gq(field: &FiniteField) -> Result<IncidenceStructure, FamilyError> {
    let q = field.q() as u64;
    // enumerate projective points in lexicographic order
    let mut points: Vec<[FieldElement; 4]> = Vec::new();
    let mut index: HashMap<[u32; 4], usize> = HashMap::new();
    for raw in 0..q.pow(4) {
        let mut v = [field.zero(); 4];
        let mut rest = raw;
        for i in (0..4).rev() {
            v[i] = field.element((rest % q) as u32).unwrap();
            rest /= q;
        }
        if v.iter().all(|e| e.0 == 0) {
            continue;
        }
        let lead = v.iter().find(|e| e.0 != 0).unwrap();
        if lead.0 != 1 {
            continue;
        }
        index.insert([v[0].0, v[1].0, v[2].0, v[3].0], points.len());
        points.push(v);
    }
    let expected_points = ((q.pow(4) - 1) / (q - 1)) as usize;
    if points.len() != expected_points {
        return Err(FamilyError::VerificationFailed(
            "projective point count mismatch".to_string(),
        ));
    }

    // totally isotropic 2-spaces, deduplicated by their point sets
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if alternating_form(field, &points[i], &points[j]).0 != 0 {
                continue;
            }
            let mut line: Vec<usize> = vec![i, j];
            for lam in field.elements() {
                if lam.0 == 0 {
                    continue;
                }
                // p_i + lam * p_j
                let mut w = [field.zero(); 4];
                for c in 0..4 {
                    w[c] = f_add_mul(field, points[i][c], lam, points[j][c]);
                }
                let nw = normalize(field, &w);
                line.push(index[&[nw[0].0, nw[1].0, nw[2].0, nw[3].0]]);
            }
            line.sort_unstable();
            line.dedup();
            lines.insert(line);
        }
    }

    let labels: Vec<String> = points
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(|e| field.element_label(*e)).collect();
            format!("[{}]", parts.join(":"))
        })
        .collect();

    let mut gq = IncidenceStructure::from_lines(points.len(), lines.into_iter().collect())?;
    gq.point_labels = Some(labels);
    if gq.s != field.q() || gq.t != field.q() {
        return Err(FamilyError::VerificationFailed(format!(
            "expected parameters ({q},{q}), got ({},{})",
            gq.s, gq.t
        )));
    }
    gq.verify_gq()?;
    Ok(gq)
}

#[inline]
fn f_add_mul(
    f: &FiniteField,
    a: FieldElement,
    lam: FieldElement,
    b: FieldElement,
) -> FieldElement {
    f.add(a, f.mul(lam, b))
}

/// Non-collinearity graph of a verified quadrangle: vertices are points,
/// adjacent iff not collinear. Valency s^2 t, distinct eigenvalues
/// {s^2 t, t, -s}; the witness coclique is the point set of the first line.
pub fn gq_noncollinearity_graph(
    gq: &IncidenceStructure,
    spec: Option<FamilySpec>,
) -> Result<FamilyGraph, FamilyError> {
    gq.verify_gq()?;
    let n = gq.points;
    let coll = gq.collinearity();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !coll[u].contains(v) {
                edges.push((u, v));
            }
        }
    }
    let mut graph = Graph::new(n, &edges)?;
    if let Some(labels) = &gq.point_labels {
        graph = graph.with_labels(labels.clone())?;
    }

    let witness = VertexSet::from_indices(n, &gq.lines[0]);
    let (s, t) = (gq.s as i64, gq.t as i64);

    // multiplicities from the trace identities:
    //   m_t + m_{-s} = n - 1,  s^2 t + t*m_t - s*m_{-s} = 0
    let n_i = n as i64;
    let mt_num = s * (n_i - 1) - s * s * t;
    let mt_den = s + t;
    if mt_num % mt_den != 0 {
        return Err(FamilyError::VerificationFailed(
            "non-integral eigenvalue multiplicity".to_string(),
        ));
    }
    let m_t = (mt_num / mt_den) as u64;
    let m_ms = (n_i - 1) as u64 - m_t;
    let known_spectrum = Some(vec![(s * s * t, 1), (t, m_t), (-s, m_ms)]);

    let fg = FamilyGraph {
        graph,
        spec,
        known_spectrum,
        known_lambda_min: Some(-s),
        coclique_witness: Some(witness),
        notes: Vec::new(),
    };
    super::expect_regular(&fg, (s * s * t) as usize, "GQ non-collinearity")?;
    fg.check_witness()?;
    if fg.coclique_witness.as_ref().unwrap().len() != gq.s as usize + 1 {
        return Err(FamilyError::VerificationFailed(
            "line witness has wrong size".to_string(),
        ));
    }
    Ok(fg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w2_is_the_15_point_quadrangle() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let gq = symplectic_gq(&f).unwrap();
        assert_eq!(gq.points, 15);
        assert_eq!(gq.lines.len(), 15);
        assert_eq!((gq.s, gq.t), (2, 2));
    }

    #[test]
    fn w3_parameters() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let gq = symplectic_gq(&f).unwrap();
        assert_eq!(gq.points, 40);
        assert!(gq.lines.iter().all(|l| l.len() == 4));
    }

    #[test]
    fn w4_parameters() {
        let f = FiniteField::new(2, 2, None).unwrap();
        let gq = symplectic_gq(&f).unwrap();
        assert_eq!(gq.points, 85);
        assert_eq!((gq.s, gq.t), (4, 4));
    }

    #[test]
    fn w2_noncollinearity_graph() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let gq = symplectic_gq(&f).unwrap();
        let fg = gq_noncollinearity_graph(&gq, None).unwrap();
        assert_eq!(fg.n(), 15);
        assert_eq!(fg.valency(), 8);
        assert_eq!(fg.known_spectrum, Some(vec![(8, 1), (2, 5), (-2, 9)]));
    }

    #[test]
    fn line_witness_is_a_coclique() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let gq = symplectic_gq(&f).unwrap();
        let fg = gq_noncollinearity_graph(&gq, None).unwrap();
        let w = fg.coclique_witness.as_ref().unwrap();
        assert_eq!(w.len(), 4);
        assert!(fg.graph.is_independent(w));
    }

    #[test]
    fn broken_geometry_is_rejected() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let mut gq = symplectic_gq(&f).unwrap();
        gq.lines[0] = gq.lines[1].clone(); // duplicated line: pairs repeat
        assert!(gq_noncollinearity_graph(&gq, None).is_err());
    }
}
