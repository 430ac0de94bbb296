//! Enumeration of k-dimensional subspaces of GF(q)^n by their unique reduced
//! row-echelon representatives, plus Gaussian binomial counts.

use super::{AlgebraError, FieldElement, FiniteField};

/// A subspace stored as a k x n basis matrix in reduced row-echelon form:
/// nonzero rows, strictly increasing pivots, pivot columns reduced to the
/// standard basis. RREF is the canonical representative, so equality of
/// subspaces is equality of matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// True iff the stacked bases have full rank dim(A)+dim(B).
    pub fn meet_trivial(&self, other: &Subspace, f: &FiniteField) -> Result<bool, AlgebraError> {
        if self.ambient != other.ambient {
            return Err(AlgebraError::AmbientMismatch);
        }
        let mut stack: Vec<Vec<u32>> = self.rows.clone();
        stack.extend(other.rows.iter().cloned());
        let rank = rref_in_place(&mut stack, f);
        Ok(rank == self.dim() + other.dim())
    }

    /// Membership test for a row vector of element indices.
    pub fn contains_vector(&self, v: &[u32], f: &FiniteField) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut stack: Vec<Vec<u32>> = self.rows.clone();
        stack.push(v.to_vec());
        rref_in_place(&mut stack, f) == self.dim()
    }

    /// Compact label like "<1,0,0,0;0,1,0,0>".
    pub fn label(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("<{}>", rows.join(";"))
    }
}

/// Gauss-Jordan elimination over the field; rows hold element indices.
/// Returns the rank; the matrix is left in RREF with zero rows removed.
pub(crate) fn rref_in_place(mat: &mut Vec<Vec<u32>>, f: &FiniteField) -> usize {
    let ncols = match mat.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(pivot_row, src);
        let inv = f
            .inv(FieldElement(mat[pivot_row][col]))
            .expect("pivot is nonzero");
        for c in 0..ncols {
            mat[pivot_row][c] = f.mul(FieldElement(mat[pivot_row][c]), inv).0;
        }
        for r in 0..mat.len() {
            if r != pivot_row && mat[r][col] != 0 {
                let factor = FieldElement(mat[r][col]);
                for c in 0..ncols {
                    let sub = f.mul(factor, FieldElement(mat[pivot_row][c]));
                    mat[r][c] = f.sub(FieldElement(mat[r][c]), sub).0;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == mat.len() {
            break;
        }
    }
    mat.retain(|r| r.iter().any(|&c| c != 0));
    pivot_row
}

/// All k-dimensional subspaces of GF(q)^n in a fixed deterministic order:
/// pivot-column patterns in lexicographic order, then free entries counted
/// lexicographically in row-major position order.
pub fn subspaces(
    n: usize,
    k: usize,
    f: &FiniteField,
) -> Result<Vec<Subspace>, AlgebraError> {
    if k > n {
        return Err(AlgebraError::DimensionTooLarge { k, n });
    }
    if k == 0 {
        return Ok(vec![Subspace {
            ambient: n,
            rows: Vec::new(),
        }]);
    }
    let q = f.q() as u64;
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // free positions: entries right of the row's pivot in non-pivot columns
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = q.checked_pow(free.len() as u32).expect("free-entry count");
        for counter in 0..total {
            let mut rows = vec![vec![0u32; n]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            // last free position varies fastest
            let mut rest = counter;
            for &(r, c) in free.iter().rev() {
                rows[r][c] = (rest % q) as u32;
                rest /= q;
            }
            out.push(Subspace { ambient: n, rows });
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Exact Gaussian binomial: the number of k-dimensional subspaces of an
/// n-dimensional space over GF(q). Partial products along
/// prod_{i=1..k} (q^(n-k+i)-1)/(q^i-1) are themselves Gaussian binomials,
/// so the division is exact at every step.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> u128 {
    assert!(q >= 2, "Gaussian binomial requires q >= 2");
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        let num = (q as u128).checked_pow((n - k + i) as u32).expect("overflow") - 1;
        let den = (q as u128).pow(i as u32) - 1;
        result = result.checked_mul(num).expect("overflow") / den;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(5, 0, 2), 1);
        assert_eq!(gaussian_binomial(2, 3, 2), 0);
    }

    #[test]
    fn enumeration_count_matches_gaussian_binomial() {
        for q in [2u32, 3] {
            let f = FiniteField::new(q, 1, None).unwrap();
            for n in 0..=5usize {
                for k in 0..=n {
                    let subs = subspaces(n, k, &f).unwrap();
                    assert_eq!(
                        subs.len() as u128,
                        gaussian_binomial(n as u64, k as u64, q as u64),
                        "n={n} k={k} q={q}"
                    );
                    // all distinct RREF representatives
                    let set: std::collections::HashSet<_> = subs.iter().cloned().collect();
                    assert_eq!(set.len(), subs.len());
                }
            }
        }
    }

    #[test]
    fn zero_space() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let subs = subspaces(4, 0, &f).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].dim(), 0);
    }

    #[test]
    fn k_larger_than_n_is_an_error() {
        let f = FiniteField::new(2, 1, None).unwrap();
        assert!(subspaces(2, 3, &f).is_err());
    }

    #[test]
    fn meet_trivial_cases() {
        let f = FiniteField::new(2, 1, None).unwrap();
        let e12 = Subspace {
            ambient: 4,
            rows: vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
        };
        let e34 = Subspace {
            ambient: 4,
            rows: vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        };
        assert!(e12.meet_trivial(&e34, &f).unwrap());
        assert!(!e12.meet_trivial(&e12, &f).unwrap());
    }

    #[test]
    fn count_of_disjoint_2_spaces_in_f2_4() {
        // valency of the q-Kneser graph K_2(4,2)
        let f = FiniteField::new(2, 1, None).unwrap();
        let subs = subspaces(4, 2, &f).unwrap();
        let e12 = &subs
            .iter()
            .find(|s| s.rows() == [vec![1, 0, 0, 0], vec![0, 1, 0, 0]])
            .unwrap();
        let cnt = subs
            .iter()
            .filter(|s| e12.meet_trivial(s, &f).unwrap())
            .count();
        assert_eq!(cnt, 16);
    }

    #[test]
    fn containment() {
        let f = FiniteField::new(3, 1, None).unwrap();
        let s = Subspace {
            ambient: 3,
            rows: vec![vec![1, 0, 2], vec![0, 1, 1]],
        };
        assert!(s.contains_vector(&[1, 1, 0], &f)); // row0 + row1 = (1,1,3)=(1,1,0)
        assert!(!s.contains_vector(&[0, 0, 1], &f));
    }
}
