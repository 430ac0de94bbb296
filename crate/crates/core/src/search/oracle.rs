//! Exhaustive subset enumeration, the independent check against which the
//! branch-and-bound solvers are validated. Deliberately shares no code with
//! them: adjacency is re-packed into plain u32 masks and every subset is
//! tested from scratch.

use super::SearchError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Independent,
    Forest,
}

/// Maximum size of a vertex subset satisfying the predicate, by enumerating
/// all 2^n subsets. Limited to n <= 24.
pub fn brute_force_oracle(g: &Graph, predicate: Predicate) -> Result<usize, SearchError> {
    let n = g.n();
    if n > 24 {
        return Err(SearchError::TooLargeForOracle(n));
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| {
            let mut r = 0u32;
            for u in g.neighbors(v).iter() {
                r |= 1 << u;
            }
            r
        })
        .collect();

    let mut best = 0usize;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = match predicate {
            Predicate::Independent => is_independent_mask(&rows, mask),
            Predicate::Forest => is_forest_mask(&rows, mask),
        };
        if ok {
            best = size;
        }
    }
    Ok(best)
}

#[inline]
fn is_independent_mask(rows: &[u32], mask: u32) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if rows[v] & mask != 0 {
            return false;
        }
    }
    true
}

fn is_forest_mask(rows: &[u32], mask: u32) -> bool {
    let mut parent = [-1i32; 24];
    fn find(parent: &[i32; 24], mut v: usize) -> usize {
        while parent[v] >= 0 {
            v = parent[v] as usize;
        }
        v
    }
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // neighbours of u inside the subset with index above u
        let mut nb = rows[u] & mask & !((1u32 << (u + 1)) - 1);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let (ru, rv) = (find(&parent, u), find(&parent, v));
            if ru == rv {
                return false;
            }
            let (big, small) = if parent[ru] <= parent[rv] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            parent[big] += parent[small];
            parent[small] = big as i32;
        }
    }
    true
}
