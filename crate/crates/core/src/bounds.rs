//! Upper bounds and spectral machinery: the ratio bound on cocliques, the
//! spectral and edge-count bounds on induced forests, the quotient
//! interlacing check, strongly-regular parameter detection with closed-form
//! eigenvalues, and the eta-based bound on non-canonical forests.
//!
//! Bound values stay exact rationals (or quadratic surds) whenever the inputs
//! are exact; flooring to an integer cap happens once, with a 1e-9 slack
//! subtracted first when the value came from floating point.

use nalgebra::DMatrix;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vset::VertexSet;

pub type Q = Ratio<i128>;

/// Largest graph the dense symmetric eigensolver accepts.
pub const MAX_NUMERIC_N: usize = 2000;

/// Absolute error bound promised by the numeric eigensolve path.
pub const NUMERIC_TOL: f64 = 1e-6;

/// Slack subtracted before flooring floating-point bound values.
pub const FLOOR_SLACK: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("ratio bound undefined: valency equals the smallest eigenvalue")]
    RatioUndefined,
    #[error("edge bound requires valency at least 2")]
    DegreeTooSmall,
    #[error("infeasible strongly-regular parameters")]
    InfeasibleSrg,
    #[error("subset must be nonempty and proper")]
    BadSubset,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph too large for the numeric eigensolver ({0} vertices)")]
    TooLargeForNumeric(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn q_int(x: i128) -> Q {
    Q::from_integer(x)
}

pub fn q_to_f64(q: &Q) -> f64 {
    q.to_f64().expect("rational fits in f64")
}

pub fn q_floor(q: &Q) -> i128 {
    q.floor().to_integer()
}

pub fn floor_with_slack(x: f64) -> i128 {
    (x - FLOOR_SLACK).floor() as i128
}

/// Exact value a + b*sqrt(d) with rational a, b >= 0 and integer d >= 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Surd {
    pub a: Q,
    pub b: Q,
    pub d: i128,
}

impl Surd {
    pub fn to_f64(&self) -> f64 {
        q_to_f64(&self.a) + q_to_f64(&self.b) * (self.d as f64).sqrt()
    }

    /// Exact comparison of a + b*sqrt(d) against a rational t.
    pub fn cmp_q(&self, t: &Q) -> std::cmp::Ordering {
        debug_assert!(!self.b.is_negative() && self.d >= 0);
        let rhs = t - self.a; // compare b*sqrt(d) vs rhs
        if rhs.is_negative() {
            return std::cmp::Ordering::Greater;
        }
        // both sides nonnegative: square exactly
        let lhs_sq = self.b * self.b * q_int(self.d);
        let rhs_sq = rhs * rhs;
        lhs_sq.cmp(&rhs_sq)
    }

    pub fn lt_q(&self, t: &Q) -> bool {
        self.cmp_q(t) == std::cmp::Ordering::Less
    }

    pub fn gt_q(&self, t: &Q) -> bool {
        self.cmp_q(t) == std::cmp::Ordering::Greater
    }

    /// Exact floor, anchored by a float estimate and corrected by exact
    /// comparisons.
    pub fn floor(&self) -> i128 {
        let mut est = self.to_f64().floor() as i128;
        while self.cmp_q(&q_int(est)) == std::cmp::Ordering::Less {
            est -= 1;
        }
        while self.cmp_q(&q_int(est + 1)) != std::cmp::Ordering::Less {
            est += 1;
        }
        est
    }
}

/// Summary of the spectrum: largest, second-largest and smallest eigenvalue.
/// When `exact` holds the values are integers computed in closed form and
/// `tolerance` is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSummary {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda_min: f64,
    pub exact: bool,
    pub tolerance: f64,
}

impl SpectrumSummary {
    pub fn exact_q(&self) -> Option<(Q, Q, Q)> {
        if !self.exact {
            return None;
        }
        let conv = |x: f64| {
            let twice = (x * 2.0).round();
            debug_assert_eq!(twice, x * 2.0, "exact spectra are half-integers");
            Q::new(twice as i128, 2)
        };
        Some((
            conv(self.lambda1),
            conv(self.lambda2),
            conv(self.lambda_min),
        ))
    }
}

/// Parameters (n, k : a, c) of a strongly-regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    pub c: u64,
}

impl SrgParams {
    /// Standard counting identity k(k-a-1) = (n-k-1)c.
    pub fn feasible(&self) -> bool {
        self.k * (self.k - self.a - 1) == (self.n - self.k - 1) * self.c
    }
}

/// Detects strongly-regular structure by exhaustive common-neighbour counts.
/// Complete and edgeless graphs are excluded (their spectra do not follow the
/// two-root quadratic).
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    let k = g.regularity()?;
    if k == 0 || k == n - 1 {
        return None;
    }
    let mut a: Option<usize> = None;
    let mut c: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection_len(g.neighbors(v));
            let slot = if g.has_edge(u, v) { &mut a } else { &mut c };
            match slot {
                Some(x) if *x != common => return None,
                Some(_) => {}
                None => *slot = Some(common),
            }
        }
    }
    let params = SrgParams {
        n: n as u64,
        k: k as u64,
        a: a? as u64,
        c: c? as u64,
    };
    params.feasible().then_some(params)
}

fn integer_sqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&cand| cand * cand == x)
}

/// Closed-form eigenvalues of a strongly-regular graph. The two non-valency
/// eigenvalues are the roots of x^2 - (a-c)x - (k-c); lambda2 is the larger
/// root and lambda_min the smaller. Conference-type parameter sets (the
/// discriminant not a perfect square) fall back to a floating-point square
/// root with `exact` unset.
pub fn srg_spectrum(p: &SrgParams) -> Result<SpectrumSummary, BoundsError> {
    if !p.feasible() || p.k <= p.a {
        return Err(BoundsError::InfeasibleSrg);
    }
    let amc = p.a as i128 - p.c as i128;
    let disc = (amc * amc + 4 * (p.k as i128 - p.c as i128)) as u64;
    if let Some(s) = integer_sqrt(disc) {
        // monic integer quadratic: rational roots are integers
        let theta = (amc + s as i128) / 2;
        let tau = (amc - s as i128) / 2;
        debug_assert_eq!((amc + s as i128) % 2, 0);
        Ok(SpectrumSummary {
            lambda1: p.k as f64,
            lambda2: theta as f64,
            lambda_min: tau as f64,
            exact: true,
            tolerance: 0.0,
        })
    } else {
        // conference case: multiplicities force 2k + (n-1)(a-c) = 0
        if 2 * p.k as i128 + (p.n as i128 - 1) * amc != 0 {
            return Err(BoundsError::InfeasibleSrg);
        }
        let s = (disc as f64).sqrt();
        Ok(SpectrumSummary {
            lambda1: p.k as f64,
            lambda2: (amc as f64 + s) / 2.0,
            lambda_min: (amc as f64 - s) / 2.0,
            exact: false,
            tolerance: 1e-12,
        })
    }
}

/// Dense symmetric eigensolve; the fallback when no closed form applies.
pub fn numeric_spectrum(g: &Graph) -> Result<SpectrumSummary, BoundsError> {
    let n = g.n();
    if n > MAX_NUMERIC_N {
        return Err(BoundsError::TooLargeForNumeric(n));
    }
    if n == 0 {
        return Err(BoundsError::BadSubset);
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        m[(u, v)] = 1.0;
        m[(v, u)] = 1.0;
    }
    let mut eigs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(SpectrumSummary {
        lambda1: eigs[0],
        lambda2: if n > 1 { eigs[1] } else { eigs[0] },
        lambda_min: *eigs.last().unwrap(),
        exact: false,
        tolerance: NUMERIC_TOL,
    })
}

/// Smallest eigenvalue (with the rest of the summary): closed form via
/// strongly-regular parameters when they exist, numeric otherwise.
pub fn min_eigenvalue(g: &Graph) -> Result<SpectrumSummary, BoundsError> {
    if let Some(p) = srg_parameters(g) {
        if let Ok(s) = srg_spectrum(&p) {
            return Ok(s);
        }
    }
    numeric_spectrum(g)
}

/// Coclique ratio bound n(-lambda)/(k-lambda), exact.
pub fn ratio_bound(n: u64, k: u64, lambda_min: Q) -> Result<Q, BoundsError> {
    let kq = q_int(k as i128);
    if kq <= lambda_min {
        return Err(BoundsError::RatioUndefined);
    }
    Ok(q_int(n as i128) * (-lambda_min) / (kq - lambda_min))
}

/// Spectral upper bound on the order of an induced forest in a k-regular
/// graph with smallest eigenvalue lambda.
#[derive(Clone, Debug)]
pub struct SpectralForestBound {
    /// (n(2-λ) + sqrt(n²(2-λ)² - 8n(k-λ))) / (2(k-λ)); absent when the
    /// discriminant is negative.
    pub strong: Option<Surd>,
    /// The weaker closed form -nλ/(k-λ) + 2n/(k-λ), always defined.
    pub weak: Q,
}

impl SpectralForestBound {
    /// Integer cap implied by the bound (exact flooring).
    pub fn cap(&self) -> i128 {
        match &self.strong {
            Some(s) => s.floor(),
            None => q_floor(&self.weak),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.strong {
            Some(s) => s.to_f64(),
            None => q_to_f64(&self.weak),
        }
    }
}

pub fn spectral_forest_bound(
    n: u64,
    k: u64,
    lambda_min: Q,
) -> Result<SpectralForestBound, BoundsError> {
    let nq = q_int(n as i128);
    let kq = q_int(k as i128);
    if kq <= lambda_min {
        return Err(BoundsError::RatioUndefined);
    }
    let two = q_int(2);
    let gap = kq - lambda_min;
    let weak = nq * (two - lambda_min) / gap;
    let disc = nq * nq * (two - lambda_min) * (two - lambda_min) - q_int(8) * nq * gap;
    if disc.is_negative() {
        return Ok(SpectralForestBound { strong: None, weak });
    }
    // integerize the radicand: sqrt(p/q) = sqrt(p*q)/q
    let (dn, dd) = (*disc.numer(), *disc.denom());
    let radicand = dn.checked_mul(dd).expect("discriminant in range");
    let denom = two * gap;
    let strong = Surd {
        a: nq * (two - lambda_min) / denom,
        b: Q::new(1, 1) / (denom * q_int(dd)),
        d: radicand,
    };
    debug_assert!(strong.lt_q(&weak), "strong spectral bound beats the weak form");
    Ok(SpectralForestBound {
        strong: Some(strong),
        weak,
    })
}

/// Floating-point analogue for numeric spectra.
pub fn spectral_forest_bound_f64(n: f64, k: f64, lambda_min: f64) -> (Option<f64>, f64) {
    let gap = k - lambda_min;
    let weak = n * (2.0 - lambda_min) / gap;
    let disc = n * n * (2.0 - lambda_min) * (2.0 - lambda_min) - 8.0 * n * gap;
    if disc < 0.0 {
        (None, weak)
    } else {
        (Some((n * (2.0 - lambda_min) + disc.sqrt()) / (2.0 * gap)), weak)
    }
}

/// Edge-count bound (nk - 2c)/(2k - 2) on a forest with c components in a
/// k-regular graph on n vertices; c defaults to 1 at call sites.
pub fn edge_forest_bound(n: u64, k: u64, c: u64) -> Result<Q, BoundsError> {
    if k < 2 {
        return Err(BoundsError::DegreeTooSmall);
    }
    Ok(Q::new(
        (n * k) as i128 - 2 * c as i128,
        (2 * k - 2) as i128,
    ))
}

/// Quotient-matrix interlacing check for an induced subgraph: verifies
/// lambda2 >= (2m'n - k n'^2) / (n'(n - n')) >= lambda_min, with tolerance
/// slack for numeric spectra.
pub fn interlacing_subgraph_check(
    g: &Graph,
    s: &VertexSet,
    spec: &SpectrumSummary,
) -> Result<bool, BoundsError> {
    let n = g.n();
    let ns = s.len();
    if ns == 0 || ns == n {
        return Err(BoundsError::BadSubset);
    }
    let k = g.regularity().ok_or(BoundsError::NotRegular)?;
    let m = g.induced_edge_count(s);
    let middle = Q::new(
        2 * (m as i128) * (n as i128) - (k as i128) * (ns as i128) * (ns as i128),
        (ns as i128) * (n as i128 - ns as i128),
    );
    if let Some((_, l2, lmin)) = spec.exact_q() {
        Ok(l2 >= middle && middle >= lmin)
    } else {
        let mid = q_to_f64(&middle);
        Ok(spec.lambda2 + spec.tolerance >= mid && mid >= spec.lambda_min - spec.tolerance)
    }
}

/// Order bound 2 + 2*eta(G) on any non-canonical induced forest.
pub fn noncanonical_forest_bound(g: &Graph) -> Result<usize, GraphError> {
    Ok(2 + 2 * g.eta()?.value)
}

/// For a strongly-regular graph, 1 + 2(n - 2k + a) < alpha forces every
/// maximum induced forest to be canonical.
pub fn srg_canonical_test(p: &SrgParams, alpha: u64) -> bool {
    let bound = 1 + 2 * (p.n as i128 - 2 * p.k as i128 + p.a as i128);
    bound < alpha as i128
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn petersen_srg_and_spectrum() {
        let g = petersen();
        let p = srg_parameters(&g).unwrap();
        assert_eq!(
            p,
            SrgParams {
                n: 10,
                k: 3,
                a: 0,
                c: 1
            }
        );
        let s = srg_spectrum(&p).unwrap();
        assert!(s.exact);
        assert_eq!((s.lambda1, s.lambda2, s.lambda_min), (3.0, 1.0, -2.0));
    }

    #[test]
    fn srg_spectrum_closed_forms() {
        // order-81 complement Paley parameters
        let s = srg_spectrum(&SrgParams {
            n: 81,
            k: 40,
            a: 19,
            c: 20,
        })
        .unwrap();
        assert_eq!((s.lambda2, s.lambda_min), (4.0, -5.0));
        // 3x3 rook-type parameters
        let s = srg_spectrum(&SrgParams {
            n: 9,
            k: 4,
            a: 1,
            c: 2,
        })
        .unwrap();
        assert_eq!((s.lambda2, s.lambda_min), (1.0, -2.0));
    }

    #[test]
    fn conference_parameters_are_inexact() {
        // order-13 Paley parameters
        let s = srg_spectrum(&SrgParams {
            n: 13,
            k: 6,
            a: 2,
            c: 3,
        })
        .unwrap();
        assert!(!s.exact);
        let r = 13f64.sqrt();
        assert!((s.lambda2 - (-1.0 + r) / 2.0).abs() < 1e-9);
        assert!((s.lambda_min - (-1.0 - r) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_srg_rejected() {
        assert_eq!(
            srg_spectrum(&SrgParams {
                n: 10,
                k: 3,
                a: 1,
                c: 1
            })
            .unwrap_err(),
            BoundsError::InfeasibleSrg
        );
    }

    #[test]
    fn path_is_not_srg() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(srg_parameters(&g).is_none());
    }

    #[test]
    fn complete_graph_uses_numeric_path() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(srg_parameters(&g).is_none());
        let s = min_eigenvalue(&g).unwrap();
        assert!((s.lambda_min - -1.0).abs() < 1e-9);
        assert!((s.lambda1 - 3.0).abs() < 1e-9);
    }

    #[test]
    fn ratio_bound_values() {
        // generalized-quadrangle inputs with s=t=2: alpha <= s+1
        let v = ratio_bound(15, 8, q_int(-2)).unwrap();
        assert_eq!(v, q_int(3));
        let v = ratio_bound(10, 3, q_int(-2)).unwrap();
        assert_eq!(v, q_int(4));
        assert_eq!(
            ratio_bound(10, 3, q_int(3)).unwrap_err(),
            BoundsError::RatioUndefined
        );
    }

    #[test]
    fn spectral_forest_bound_exact_window() {
        // (9, 4, -2): 3 + sqrt(6), strictly between 5 and 6
        let b = spectral_forest_bound(9, 4, q_int(-2)).unwrap();
        let s = b.strong.as_ref().unwrap();
        assert!(s.gt_q(&q_int(5)));
        assert!(s.lt_q(&q_int(6)));
        assert_eq!(b.cap(), 5);
        assert!((s.to_f64() - (3.0 + 6f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn spectral_forest_bound_petersen() {
        let b = spectral_forest_bound(10, 3, q_int(-2)).unwrap();
        assert_eq!(b.cap(), 7);
        let f = b.strong.as_ref().unwrap().to_f64();
        assert!((7.0..8.0).contains(&f));
    }

    #[test]
    fn edge_bound_closed_form_for_odd_kneser_parameters() {
        // for n = C(2k+1,k) vertices and valency k+1 the bound is
        // (k+1)/(2k) * C(2k+1,k) - 1/k
        for k in [4u64, 5] {
            let n = num_integer::binomial(2 * k + 1, k);
            let got = edge_forest_bound(n, k + 1, 1).unwrap();
            let expected = Q::new(((k + 1) * n) as i128, (2 * k) as i128)
                - Q::new(1, k as i128);
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn strong_bound_strictly_below_weak() {
        for (n, k, l) in [(9u64, 4u64, -2i128), (10, 3, -2), (35, 4, -3), (49, 24, -4)] {
            let b = spectral_forest_bound(n, k, q_int(l)).unwrap();
            if let Some(s) = &b.strong {
                assert!(s.lt_q(&b.weak));
            }
        }
    }

    #[test]
    fn edge_forest_bound_values() {
        assert_eq!(edge_forest_bound(35, 4, 1).unwrap(), q_int(23));
        let b = edge_forest_bound(9, 4, 1).unwrap();
        assert_eq!(b, Q::new(34, 6));
        assert_eq!(q_floor(&b), 5);
        assert_eq!(
            edge_forest_bound(4, 1, 1).unwrap_err(),
            BoundsError::DegreeTooSmall
        );
    }

    #[test]
    fn interlacing_on_petersen_coclique() {
        let g = petersen();
        let spec = min_eigenvalue(&g).unwrap();
        // maximum coclique: middle term hits lambda_min exactly
        let s = VertexSet::from_indices(10, &[0, 1, 3, 6]);
        assert!(interlacing_subgraph_check(&g, &s, &spec).unwrap());
        let single = VertexSet::singleton(10, 0);
        assert!(interlacing_subgraph_check(&g, &single, &spec).unwrap());
        assert_eq!(
            interlacing_subgraph_check(&g, &VertexSet::empty(10), &spec).unwrap_err(),
            BoundsError::BadSubset
        );
    }

    #[test]
    fn noncanonical_bound_petersen() {
        assert_eq!(noncanonical_forest_bound(&petersen()).unwrap(), 10);
    }

    #[test]
    fn canonical_test_cases() {
        // Petersen: 1+2(10-6+0) = 9, alpha 4 -> inconclusive
        assert!(!srg_canonical_test(
            &SrgParams {
                n: 10,
                k: 3,
                a: 0,
                c: 1
            },
            4
        ));
        assert!(!srg_canonical_test(
            &SrgParams {
                n: 81,
                k: 40,
                a: 19,
                c: 20
            },
            9
        ));
        // pair-graph parameters on 17 points: 1+2(136-210+78) = 9 < 16
        assert!(srg_canonical_test(
            &SrgParams {
                n: 136,
                k: 105,
                a: 78,
                c: 91
            },
            16
        ));
    }

    #[test]
    fn surd_floor_is_exact() {
        let s = Surd {
            a: q_int(3),
            b: Q::new(1, 1),
            d: 6,
        };
        assert_eq!(s.floor(), 5);
        let t = Surd {
            a: q_int(0),
            b: Q::new(1, 1),
            d: 49,
        };
        assert_eq!(t.floor(), 7);
    }
}
