//! Branch-and-bound maximum independent set. The upper bound at each node is
//! a greedy clique cover of the candidate set (each clique contributes at
//! most one vertex); when the graph is strongly regular the exact ratio bound
//! caps the whole search.

use super::{Budget, BudgetClock, SolveResult};
use crate::bounds::{q_floor, ratio_bound, srg_parameters, srg_spectrum};
use crate::graph::Graph;
use crate::vset::VertexSet;

struct MisSearch<'g> {
    g: &'g Graph,
    current: Vec<usize>,
    best: usize,
    best_witness: VertexSet,
    cap: usize,
    nodes: u64,
    clock: BudgetClock,
    aborted: bool,
}

impl MisSearch<'_> {
    fn clique_cover_bound(&self, cands: &VertexSet) -> usize {
        // classes are cliques: v may join a class only if adjacent to all of it
        let mut classes: Vec<VertexSet> = Vec::new();
        'outer: for v in cands.iter() {
            for cl in classes.iter_mut() {
                if cl.is_subset(self.g.neighbors(v)) {
                    cl.insert(v);
                    continue 'outer;
                }
            }
            classes.push(VertexSet::singleton(self.g.n(), v));
        }
        classes.len()
    }

    fn rec(&mut self, cands: &VertexSet) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.clock.exhausted(self.nodes) {
            self.aborted = true;
            return;
        }
        if cands.is_empty() {
            if self.current.len() > self.best {
                self.best = self.current.len();
                self.best_witness = VertexSet::from_indices(self.g.n(), &self.current);
            }
            return;
        }
        let ub = self.current.len() + self.clique_cover_bound(cands);
        if ub.min(self.cap) <= self.best {
            return;
        }
        // branch on the candidate of maximum degree within the candidate set
        let v = cands
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_len(cands), usize::MAX - v))
            .unwrap();
        // include
        let mut inc = cands.clone();
        inc.remove(v);
        inc.subtract(self.g.neighbors(v));
        self.current.push(v);
        self.rec(&inc);
        self.current.pop();
        // exclude
        let mut exc = cands.clone();
        exc.remove(v);
        self.rec(&exc);
    }
}

/// Exact maximum coclique. Exhausting the budget returns the best coclique
/// found with `optimal = false`.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> SolveResult {
    let cap = srg_parameters(g)
        .and_then(|p| {
            let spec = srg_spectrum(&p).ok()?;
            let (_, _, lmin) = spec.exact_q()?;
            let bound = ratio_bound(p.n, p.k, lmin).ok()?;
            Some(q_floor(&bound) as usize)
        })
        .unwrap_or(g.n());

    let mut search = MisSearch {
        g,
        current: Vec::new(),
        best: 0,
        best_witness: VertexSet::empty(g.n()),
        cap,
        nodes: 0,
        clock: BudgetClock::new(budget),
        aborted: false,
    };
    search.rec(&VertexSet::full(g.n()));
    debug_assert!(g.is_independent(&search.best_witness));
    SolveResult {
        value: search.best,
        witness: search.best_witness,
        nodes_explored: search.nodes,
        seconds: search.clock.elapsed(),
        optimal: !search.aborted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{brute_force_oracle, Predicate};

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for b in 2..=5u8 {
            for a in 1..b {
                pairs.push((a, b));
            }
        }
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn petersen_alpha_is_4() {
        let r = max_independent_set(&petersen(), &Budget::default());
        assert_eq!(r.value, 4);
        assert!(r.optimal);
        assert_eq!(
            r.value,
            brute_force_oracle(&petersen(), Predicate::Independent).unwrap()
        );
    }

    #[test]
    fn kneser_7_3_alpha_is_15() {
        // the star family of one ground element, of size C(6,2)
        let fg = crate::families::kneser_graph(7, 3).unwrap();
        let r = max_independent_set(&fg.graph, &Budget::default());
        assert_eq!(r.value, 15);
        assert!(r.optimal);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = petersen();
        let r = max_independent_set(&g, &Budget::nodes(1));
        assert!(!r.optimal);
        assert!(g.is_independent(&r.witness));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(4, &[]).unwrap();
        let r = max_independent_set(&g, &Budget::default());
        assert_eq!(r.value, 4);
    }
}
