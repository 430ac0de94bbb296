//! Immutable simple graphs with bitset adjacency rows, plus the vertex-subset
//! predicates used throughout: independence, forest checking with a cycle
//! certificate, regularity, common non-neighbourhoods and the eta statistic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    IdenticalVertices(usize),
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
}

/// An undirected simple graph. Construction is the only mutation point: the
/// adjacency is symmetric, loop-free and immutable afterwards, so graphs can
/// be shared freely across worker threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Outcome of testing whether a vertex subset induces a forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestCheck {
    pub is_forest: bool,
    /// Connected components of the induced subgraph. Only meaningful when
    /// `is_forest` holds; the check aborts at the first cycle.
    pub components: usize,
    /// An induced edge lying on a cycle, when one exists.
    pub cycle_edge: Option<(usize, usize)>,
}

/// Maximum over edges (a,b) of the number of vertices adjacent to neither
/// endpoint, with an edge attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eta {
    pub value: usize,
    pub witness_edge: (usize, usize),
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// must be in range and distinct.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph {
            n,
            rows,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// All edges (u,v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Vertex index carrying the given label, if labels are attached.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    #[inline]
    fn assert_set(&self, s: &VertexSet) {
        assert_eq!(
            s.capacity(),
            self.n,
            "vertex set capacity does not match graph order"
        );
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.assert_set(s);
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Number of edges of the subgraph induced by `s`.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        self.assert_set(s);
        s.iter().map(|v| self.rows[v].intersection_len(s)).sum::<usize>() / 2
    }

    /// Degree of `v` inside the subgraph induced by `s`.
    pub fn induced_degree(&self, s: &VertexSet, v: usize) -> usize {
        self.rows[v].intersection_len(s)
    }

    /// Tests acyclicity of the subgraph induced by `s` with incremental
    /// union-find, aborting at the first cycle and reporting the closing edge.
    pub fn forest_check(&self, s: &VertexSet) -> ForestCheck {
        self.assert_set(s);
        let mut parent: Vec<i32> = vec![-1; self.n];
        fn find(parent: &[i32], mut v: usize) -> usize {
            while parent[v] >= 0 {
                v = parent[v] as usize;
            }
            v
        }
        let mut components = s.len();
        for u in s.iter() {
            let row = self.rows[u].intersection(s);
            for v in row.iter() {
                if v <= u {
                    continue;
                }
                let (ru, rv) = (find(&parent, u), find(&parent, v));
                if ru == rv {
                    return ForestCheck {
                        is_forest: false,
                        components: 0,
                        cycle_edge: Some((u, v)),
                    };
                }
                // union by size; sizes stored negated
                let (big, small) = if parent[ru] <= parent[rv] {
                    (ru, rv)
                } else {
                    (rv, ru)
                };
                parent[big] += parent[small];
                parent[small] = big as i32;
                components -= 1;
            }
        }
        ForestCheck {
            is_forest: true,
            components,
            cycle_edge: None,
        }
    }

    /// The common valency when the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == k) {
            Some(k)
        } else {
            None
        }
    }

    /// Vertices adjacent to neither `a` nor `b` (and distinct from both).
    /// Defined for non-adjacent pairs as well.
    pub fn common_nonneighbors(&self, a: usize, b: usize) -> Result<VertexSet, GraphError> {
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange { v: a, n: self.n });
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange { v: b, n: self.n });
        }
        if a == b {
            return Err(GraphError::IdenticalVertices(a));
        }
        let mut closed = self.rows[a].union(&self.rows[b]);
        closed.insert(a);
        closed.insert(b);
        Ok(closed.complement())
    }

    /// eta(G) = max over adjacent pairs (a,b) of |common_nonneighbors(a,b)|.
    pub fn eta(&self) -> Result<Eta, GraphError> {
        let mut best: Option<Eta> = None;
        for a in 0..self.n {
            for b in self.rows[a].iter() {
                if b <= a {
                    continue;
                }
                let mut count = self.n;
                for (wa, wb) in self.rows[a].words().iter().zip(self.rows[b].words()) {
                    count -= (wa | wb).count_ones() as usize;
                }
                // a and b are adjacent, so each already sits in the other's
                // row; subtract nothing further.
                let improves = best.as_ref().is_none_or(|e| count > e.value);
                if improves {
                    best = Some(Eta {
                        value: count,
                        witness_edge: (a, b),
                    });
                }
            }
        }
        best.ok_or(GraphError::EdgelessGraph)
    }

    /// Relabels vertices: vertex v of the result is vertex `perm[v]` of self.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (inv[u], inv[v]))
            .collect();
        let g = Graph::new(self.n, &edges).expect("permutation preserves validity");
        match &self.labels {
            Some(ls) => {
                let labels = perm.iter().map(|&old| ls[old].clone()).collect();
                g.with_labels(labels).expect("label count preserved")
            }
            None => g,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // Kneser K(5,2): 2-subsets of {1..5}, adjacent iff disjoint.
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
    fn build_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn empty_graph_components() {
        let g = Graph::new(3, &[]).unwrap();
        let fc = g.forest_check(&VertexSet::full(3));
        assert!(fc.is_forest);
        assert_eq!(fc.components, 3);
    }

    #[test]
    fn petersen_is_cubic_and_cyclic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.regularity(), Some(3));
        let fc = g.forest_check(&VertexSet::full(10));
        assert!(!fc.is_forest);
        let (u, v) = fc.cycle_edge.unwrap();
        assert!(g.has_edge(u, v));
    }

    #[test]
    fn petersen_star_family_is_independent() {
        // 2-sets containing the element 1, listed in the colex vertex order
        // used by the builder above: {1,2},{1,3},{1,4},{1,5}.
        let g = petersen();
        let star = VertexSet::from_indices(10, &[0, 1, 3, 6]);
        assert!(g.is_independent(&star));
        assert!(!g.is_independent(&VertexSet::from_indices(10, &[0, 9])));
        assert!(g.is_independent(&VertexSet::empty(10)));
        // a coclique plus one vertex induces a forest (a star)
        let mut plus = star.clone();
        plus.insert(9);
        let fc = g.forest_check(&plus);
        assert!(fc.is_forest);
    }

    #[test]
    fn independent_set_has_singleton_components() {
        let g = petersen();
        let star = VertexSet::from_indices(10, &[0, 1, 3, 6]);
        let fc = g.forest_check(&star);
        assert!(fc.is_forest);
        assert_eq!(fc.components, 4);
    }

    #[test]
    fn k2_is_not_independent_in_full() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(!g.is_independent(&VertexSet::full(2)));
    }

    #[test]
    fn path_is_not_regular() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.regularity(), None);
    }

    #[test]
    fn common_nonneighbors_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(g.common_nonneighbors(0, 1).unwrap().is_empty());
        assert_eq!(
            g.common_nonneighbors(1, 1),
            Err(GraphError::IdenticalVertices(1))
        );
    }

    #[test]
    fn petersen_eta_is_four() {
        // For disjoint 2-sets γ, δ the pairs meeting both are the four
        // transversals, so every edge attains 4.
        let g = petersen();
        let eta = g.eta().unwrap();
        assert_eq!(eta.value, 4);
        let (a, b) = eta.witness_edge;
        assert!(g.has_edge(a, b));
        assert_eq!(g.common_nonneighbors(a, b).unwrap().len(), 4);
    }

    #[test]
    fn eta_errors_on_edgeless() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.eta(), Err(GraphError::EdgelessGraph));
    }

    #[test]
    fn forest_edge_identity() {
        let g = petersen();
        let s = VertexSet::from_indices(10, &[0, 1, 3, 6, 9]);
        let fc = g.forest_check(&s);
        if fc.is_forest {
            assert_eq!(g.induced_edge_count(&s), s.len() - fc.components);
        }
    }
}
