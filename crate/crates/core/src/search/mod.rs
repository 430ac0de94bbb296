//! Exact solvers for maximum cocliques and maximum induced forests,
//! canonical-forest classification, and the search-free certification
//! pipeline for graphs too large to solve exactly.

mod canonical;
mod certify;
mod forest;
mod mis;
mod oracle;
mod union_find;

pub use canonical::is_canonical_forest;
pub use certify::{
    certify_tau, classify_maximum_forests, verify_certificate, AlphaProof, CanonicalProof,
    NoncanonicalProof, TauCertificate, TriState,
};
pub use forest::{
    enumerate_maximum_forests, family_forest_cap, forest_cap_exact, max_induced_forest,
    max_induced_forest_capped, max_induced_forest_family, EnumerationOutcome,
};
pub use mis::max_independent_set;
pub use oracle::{brute_force_oracle, Predicate};
pub use union_find::UndoUnionFind;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::GraphError;
use crate::vset::VertexSet;

#[derive(Debug, Error, PartialEq)]
pub enum SearchError {
    #[error("graph too large for exhaustive enumeration ({0} vertices, limit 24)")]
    TooLargeForOracle(usize),
    #[error("vertex set does not induce a forest")]
    NotAForest,
    #[error("classification requires a regular graph with at least one edge")]
    NotRegularWithEdge,
    #[error("certification requires a coclique witness meeting the ratio bound: {0}")]
    BadWitness(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Resource limits for a single solve. Exhausting the budget never produces a
/// wrong value, only `optimal = false` (or an unknown classification).
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }

    pub fn seconds(secs: u64) -> Budget {
        Budget {
            max_time: Duration::from_secs(secs),
            ..Budget::default()
        }
    }
}

pub(crate) struct BudgetClock {
    start: Instant,
    deadline: Duration,
    max_nodes: u64,
}

impl BudgetClock {
    pub(crate) fn new(budget: &Budget) -> Self {
        BudgetClock {
            start: Instant::now(),
            deadline: budget.max_time,
            max_nodes: budget.max_nodes,
        }
    }

    /// Cheap check, intended to be called with a node counter.
    #[inline]
    pub(crate) fn exhausted(&self, nodes: u64) -> bool {
        if nodes > self.max_nodes {
            return true;
        }
        // polling the clock is comparatively expensive
        nodes.is_multiple_of(4096) && self.start.elapsed() > self.deadline
    }

    pub(crate) fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

/// Result of an exact solve.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub seconds: f64,
    /// True only when the search space was exhausted.
    pub optimal: bool,
}
