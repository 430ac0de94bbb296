//! Branch-and-bound maximum induced forest.
//!
//! State is a rollback-able union-find over the partial forest plus a
//! candidate bitmask. Each node filters candidates that would close a cycle,
//! force-includes candidates that can never lie on a cycle, and prunes with
//! current size + remaining candidates, capped by the global spectral and
//! edge-count bounds when an exact smallest eigenvalue is available.

use super::union_find::UndoUnionFind;
use super::{Budget, BudgetClock, SolveResult};
use crate::bounds::{
    edge_forest_bound, q_floor, spectral_forest_bound, srg_parameters, srg_spectrum, Q,
};
use crate::families::FamilyGraph;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationOutcome {
    /// Every maximum forest was visited.
    Complete,
    /// The callback requested an early stop.
    StoppedByCallback,
    BudgetExhausted,
}

enum Mode<'cb> {
    Solve,
    /// Collect every forest of exactly the given (known-optimal) size.
    Enumerate {
        target: usize,
        callback: &'cb mut dyn FnMut(&VertexSet) -> bool,
    },
}

struct ForestBnb<'g, 'cb> {
    g: &'g Graph,
    uf: UndoUnionFind,
    forest: Vec<usize>,
    in_forest: VertexSet,
    best: usize,
    best_witness: VertexSet,
    cap: usize,
    nodes: u64,
    clock: BudgetClock,
    aborted: bool,
    stopped: bool,
    mode: Mode<'cb>,
}

impl ForestBnb<'_, '_> {
    /// True iff adding `w` to the current forest joins two vertices of one
    /// component.
    fn closes_cycle(&self, w: usize) -> bool {
        let mut roots = [usize::MAX; 64];
        let mut k = 0usize;
        let mut spill: Vec<usize> = Vec::new();
        for x in self.g.neighbors(w).iter() {
            if !self.in_forest.contains(x) {
                continue;
            }
            let r = self.uf.find(x);
            if roots[..k].contains(&r) || spill.contains(&r) {
                return true;
            }
            if k < roots.len() {
                roots[k] = r;
                k += 1;
            } else {
                spill.push(r);
            }
        }
        false
    }

    fn include(&mut self, w: usize) {
        for x in self.g.neighbors(w).iter() {
            if self.in_forest.contains(x) {
                let joined = self.uf.union(w, x);
                debug_assert!(joined, "inclusion must not close a cycle");
            }
        }
        self.in_forest.insert(w);
        self.forest.push(w);
    }

    fn record(&mut self) {
        let size = self.forest.len();
        match &mut self.mode {
            Mode::Solve => {
                if size > self.best {
                    self.best = size;
                    self.best_witness = VertexSet::from_indices(self.g.n(), &self.forest);
                }
            }
            Mode::Enumerate { target, callback } => {
                debug_assert!(size <= *target, "enumeration target below the true optimum");
                if size == *target {
                    let witness = VertexSet::from_indices(self.g.n(), &self.forest);
                    if !callback(&witness) {
                        self.stopped = true;
                    }
                }
            }
        }
    }

    fn rec(&mut self, mut cands: VertexSet) {
        if self.aborted || self.stopped {
            return;
        }
        self.nodes += 1;
        if self.clock.exhausted(self.nodes) {
            self.aborted = true;
            return;
        }
        let uf_mark = self.uf.time();
        let stack_mark = self.forest.len();

        // propagate: drop cycle-closers, force in vertices that can never lie
        // on a cycle (at most one neighbour among forest and candidates)
        loop {
            let mut changed = false;
            let closers: Vec<usize> = cands
                .iter()
                .filter(|&w| self.closes_cycle(w))
                .collect();
            for w in closers {
                cands.remove(w);
                changed = true;
            }
            let avail = self.in_forest.union(&cands);
            let forced: Vec<usize> = cands
                .iter()
                .filter(|&w| self.g.neighbors(w).intersection_len(&avail) <= 1)
                .collect();
            for w in forced {
                cands.remove(w);
                self.include(w);
                changed = true;
            }
            if !changed {
                break;
            }
        }

        let ub = (self.forest.len() + cands.len()).min(self.cap);
        let prune = match &self.mode {
            Mode::Solve => ub <= self.best,
            Mode::Enumerate { target, .. } => ub < *target,
        };
        if prune || cands.is_empty() {
            if !prune {
                self.record();
            }
            // unwind propagation includes
            while self.forest.len() > stack_mark {
                let w = self.forest.pop().unwrap();
                self.in_forest.remove(w);
            }
            self.uf.rollback(uf_mark);
            return;
        }

        // branch on the highest-degree candidate in the remaining graph,
        // ties to the lowest index
        let v = cands
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_len(&cands), usize::MAX - v))
            .unwrap();
        let mut rest = cands.clone();
        rest.remove(v);

        let t_v = self.uf.time();
        self.include(v);
        self.rec(rest.clone());
        let w = self.forest.pop().unwrap();
        debug_assert_eq!(w, v);
        self.in_forest.remove(v);
        self.uf.rollback(t_v);

        self.rec(rest);

        while self.forest.len() > stack_mark {
            let w = self.forest.pop().unwrap();
            self.in_forest.remove(w);
        }
        self.uf.rollback(uf_mark);
    }
}

/// Greedy maximal forest in vertex index order; the initial incumbent.
fn greedy_forest(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut uf = UndoUnionFind::new(n);
    let mut chosen = VertexSet::empty(n);
    for v in 0..n {
        let mut roots: Vec<usize> = Vec::new();
        let mut ok = true;
        for x in g.neighbors(v).intersection(&chosen).iter() {
            let r = uf.find(x);
            if roots.contains(&r) {
                ok = false;
                break;
            }
            roots.push(r);
        }
        if ok {
            for x in g.neighbors(v).intersection(&chosen).iter() {
                uf.union(v, x);
            }
            chosen.insert(v);
        }
    }
    debug_assert!(g.forest_check(&chosen).is_forest);
    chosen
}

/// Integer cap on forest order from exact bound inputs: the smaller of the
/// floored spectral bound and the floored edge bound (with c = 1).
pub fn forest_cap_exact(n: u64, k: u64, lambda_min: Q) -> Option<usize> {
    if k < 2 {
        return None;
    }
    let sb = spectral_forest_bound(n, k, lambda_min).ok()?;
    let eb = edge_forest_bound(n, k, 1).ok()?;
    let cap = sb.cap().min(q_floor(&eb));
    usize::try_from(cap).ok()
}

fn auto_cap(g: &Graph) -> Option<usize> {
    let p = srg_parameters(g)?;
    let spec = srg_spectrum(&p).ok()?;
    let (_, _, lmin) = spec.exact_q()?;
    forest_cap_exact(p.n, p.k, lmin)
}

/// Cap for a family graph, preferring the family's exact smallest eigenvalue.
pub fn family_forest_cap(fg: &FamilyGraph) -> Option<usize> {
    let k = fg.graph.regularity()?;
    match fg.known_lambda_min {
        Some(l) => forest_cap_exact(fg.n() as u64, k as u64, Q::from_integer(l as i128)),
        None => auto_cap(&fg.graph),
    }
}

fn solve(g: &Graph, budget: &Budget, cap: Option<usize>) -> SolveResult {
    let n = g.n();
    let cap = cap.unwrap_or(n).min(n);
    let incumbent = greedy_forest(g);
    let mut bnb = ForestBnb {
        g,
        uf: UndoUnionFind::new(n),
        forest: Vec::new(),
        in_forest: VertexSet::empty(n),
        best: incumbent.len(),
        best_witness: incumbent,
        cap,
        nodes: 0,
        clock: BudgetClock::new(budget),
        aborted: false,
        stopped: false,
        mode: Mode::Solve,
    };
    if bnb.best < cap {
        bnb.rec(VertexSet::full(n));
    }
    debug_assert!(g.forest_check(&bnb.best_witness).is_forest);
    SolveResult {
        value: bnb.best,
        witness: bnb.best_witness,
        nodes_explored: bnb.nodes,
        seconds: bnb.clock.elapsed(),
        optimal: !bnb.aborted,
    }
}

/// Exact maximum induced forest. A global cap is derived from closed-form
/// strongly-regular eigenvalues when available.
pub fn max_induced_forest(g: &Graph, budget: &Budget) -> SolveResult {
    solve(g, budget, auto_cap(g))
}

/// Same solver with an explicit order cap (callers with exact family
/// eigenvalues can prune harder).
pub fn max_induced_forest_capped(g: &Graph, budget: &Budget, cap: Option<usize>) -> SolveResult {
    solve(g, budget, cap)
}

/// Family-aware entry point.
pub fn max_induced_forest_family(fg: &FamilyGraph, budget: &Budget) -> SolveResult {
    solve(&fg.graph, budget, family_forest_cap(fg))
}

/// Visits every induced forest of exactly `tau` vertices, where `tau` must be
/// the known maximum. The callback returns `false` to stop early.
pub fn enumerate_maximum_forests(
    g: &Graph,
    tau: usize,
    budget: &Budget,
    mut callback: impl FnMut(&VertexSet) -> bool,
) -> EnumerationOutcome {
    let n = g.n();
    let mut bnb = ForestBnb {
        g,
        uf: UndoUnionFind::new(n),
        forest: Vec::new(),
        in_forest: VertexSet::empty(n),
        best: 0,
        best_witness: VertexSet::empty(n),
        cap: n,
        nodes: 0,
        clock: BudgetClock::new(budget),
        aborted: false,
        stopped: false,
        mode: Mode::Enumerate {
            target: tau,
            callback: &mut callback,
        },
    };
    bnb.rec(VertexSet::full(n));
    if bnb.stopped {
        EnumerationOutcome::StoppedByCallback
    } else if bnb.aborted {
        EnumerationOutcome::BudgetExhausted
    } else {
        EnumerationOutcome::Complete
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
    fn petersen_tau_is_7() {
        let g = petersen();
        let r = max_induced_forest(&g, &Budget::default());
        assert_eq!(r.value, 7);
        assert!(r.optimal);
        assert_eq!(r.value, brute_force_oracle(&g, Predicate::Forest).unwrap());
        let fc = g.forest_check(&r.witness);
        assert!(fc.is_forest);
        assert_eq!(r.witness.len(), 7);
    }

    #[test]
    fn cycle_tau() {
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = Graph::new(5, &edges).unwrap();
        let r = max_induced_forest(&g, &Budget::default());
        assert_eq!(r.value, 4);
    }

    #[test]
    fn edgeless_graph_is_its_own_forest() {
        let g = Graph::new(6, &[]).unwrap();
        let r = max_induced_forest(&g, &Budget::default());
        assert_eq!(r.value, 6);
    }

    #[test]
    fn enumeration_visits_each_maximum_forest_once() {
        let edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        let g = Graph::new(4, &edges).unwrap();
        // C4: maximum forests are the 4 three-vertex paths
        let mut seen = Vec::new();
        let outcome = enumerate_maximum_forests(&g, 3, &Budget::default(), |w| {
            seen.push(w.indices());
            true
        });
        assert_eq!(outcome, EnumerationOutcome::Complete);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn enumeration_early_stop() {
        let g = petersen();
        let mut count = 0;
        let outcome = enumerate_maximum_forests(&g, 7, &Budget::default(), |_| {
            count += 1;
            false
        });
        assert_eq!(outcome, EnumerationOutcome::StoppedByCallback);
        assert_eq!(count, 1);
    }

    #[test]
    fn budget_abort_reports_best_found() {
        let g = petersen();
        let r = max_induced_forest_capped(&g, &Budget::nodes(2), None);
        assert!(!r.optimal);
        assert!(g.forest_check(&r.witness).is_forest);
    }
}
