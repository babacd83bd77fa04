//! Centrality measures over the patched feature graph.
//!
//! Shortest-path measures read an edge of weight `w` as a distance `1/w`:
//! a heavier dependency is a closer one. Spectral measures use the weighted
//! adjacency matrix with a node's score fed by its in-neighbours.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::featgraph::{is_reserved, FeatureGraph, PATCH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Measure {
    DegreeIn,
    DegreeOut,
    Harmonic,
    Closeness,
    Betweenness,
    Eigenvector,
    Katz,
}

impl Measure {
    pub const ALL: [Measure; 7] = [
        Measure::DegreeIn,
        Measure::DegreeOut,
        Measure::Harmonic,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Eigenvector,
        Measure::Katz,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::DegreeIn => "degree-in",
            Measure::DegreeOut => "degree-out",
            Measure::Harmonic => "harmonic",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Eigenvector => "eigenvector",
            Measure::Katz => "katz",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown centrality measure `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum CentralityError {
    #[error("Katz attenuation {beta} is not below the inverse spectral radius")]
    BetaTooLarge { beta: f64 },
}

/// Tunables for the parametrised measures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CentralityParams {
    /// Opsahl's tuning exponent for betweenness.
    pub alpha: f64,
    /// Katz attenuation; `None` picks `0.85 / λ̂`.
    pub beta: Option<f64>,
    pub eigen_iters: usize,
    pub eigen_tol: f64,
}

impl Default for CentralityParams {
    fn default() -> Self {
        CentralityParams {
            alpha: 0.5,
            beta: None,
            eigen_iters: 1000,
            eigen_tol: 1e-10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralityVector {
    pub measure: Measure,
    pub entries: BTreeMap<String, f64>,
    /// Set by iterative measures; `false` means the last iterate was returned.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

/// Weighted digraph in adjacency-matrix form, nodes in name order.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseGraph {
    pub names: Vec<String>,
    /// `w[i][j] > 0` iff there is an edge `i → j`.
    pub w: Vec<Vec<f64>>,
}

impl DenseGraph {
    pub fn from_feature_graph(g: &FeatureGraph) -> Self {
        let names: Vec<String> = g.nodes.keys().cloned().collect();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let n = names.len();
        let mut w = vec![vec![0.0; n]; n];
        for ((s, t), weight) in &g.edges {
            let value = weight.to_f64().unwrap_or(f64::MAX);
            w[index[s.as_str()]][index[t.as_str()]] = value;
        }
        DenseGraph { names, w }
    }

    pub fn from_matrix(names: Vec<String>, w: Vec<Vec<f64>>) -> Self {
        assert_eq!(names.len(), w.len());
        DenseGraph { names, w }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    fn vector(&self, measure: Measure, scores: Vec<f64>, converged: Option<bool>) -> CentralityVector {
        CentralityVector {
            measure,
            entries: self
                .names
                .iter()
                .zip(scores)
                .filter(|(n, _)| n.as_str() != PATCH)
                .map(|(n, s)| (n.clone(), s))
                .collect(),
            converged,
        }
    }

    /// Single-source shortest distances under `len(w) = 1 / w^exp`.
    fn dijkstra(&self, s: usize, exp: f64) -> Vec<f64> {
        let n = self.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        dist[s] = 0.0;
        for _ in 0..n {
            let Some(u) = (0..n)
                .filter(|&v| !done[v] && dist[v].is_finite())
                .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
            else {
                break;
            };
            done[u] = true;
            for v in 0..n {
                let w = self.w[u][v];
                if w > 0.0 && !done[v] {
                    let d = dist[u] + edge_length(w, exp);
                    if d < dist[v] {
                        dist[v] = d;
                    }
                }
            }
        }
        dist
    }
}

fn edge_length(w: f64, exp: f64) -> f64 {
    1.0 / w.powf(exp)
}

/// Relative tolerance under which two path lengths count as equal.
const TIE_EPS: f64 = 1e-9;

fn same_length(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_EPS * a.abs().max(b.abs()).max(1.0)
}

pub fn degree(g: &DenseGraph, direction: Direction) -> CentralityVector {
    let n = g.len();
    let scores = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| match direction {
                    Direction::In => g.w[j][i] > 0.0,
                    Direction::Out => g.w[i][j] > 0.0,
                })
                .count() as f64
        })
        .collect();
    let measure = match direction {
        Direction::In => Measure::DegreeIn,
        Direction::Out => Measure::DegreeOut,
    };
    g.vector(measure, scores, None)
}

pub fn closeness_newman(g: &DenseGraph) -> CentralityVector {
    let scores = (0..g.len())
        .map(|i| {
            let total: f64 = g
                .dijkstra(i, 1.0)
                .iter()
                .enumerate()
                .filter(|&(j, d)| j != i && d.is_finite())
                .map(|(_, d)| d)
                .sum();
            if total > 0.0 {
                1.0 / total
            } else {
                0.0
            }
        })
        .collect();
    g.vector(Measure::Closeness, scores, None)
}

pub fn harmonic(g: &DenseGraph) -> CentralityVector {
    let scores = (0..g.len())
        .map(|i| {
            g.dijkstra(i, 1.0)
                .iter()
                .enumerate()
                .filter(|&(j, d)| j != i && d.is_finite() && *d > 0.0)
                .map(|(_, d)| 1.0 / d)
                .sum()
        })
        .collect();
    g.vector(Measure::Harmonic, scores, None)
}

/// Betweenness with Opsahl's weighted distances `1 / w^alpha`, accumulated
/// over ordered source/target pairs with the endpoints excluded.
pub fn betweenness_opsahl(g: &DenseGraph, alpha: f64) -> CentralityVector {
    let n = g.len();
    let mut score = vec![0.0; n];
    for s in 0..n {
        // Brandes: settle nodes in distance order, counting tied paths
        let mut dist = vec![f64::INFINITY; n];
        let mut sigma = vec![0.0f64; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        dist[s] = 0.0;
        sigma[s] = 1.0;
        while let Some(u) = (0..n)
            .filter(|&v| !done[v] && dist[v].is_finite())
            .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
        {
            done[u] = true;
            order.push(u);
            for v in 0..n {
                let w = g.w[u][v];
                if w <= 0.0 || done[v] {
                    continue;
                }
                let d = dist[u] + edge_length(w, alpha);
                if dist[v].is_finite() && same_length(d, dist[v]) {
                    sigma[v] += sigma[u];
                    preds[v].push(u);
                } else if d < dist[v] {
                    dist[v] = d;
                    sigma[v] = sigma[u];
                    preds[v] = vec![u];
                }
            }
        }
        let mut delta = vec![0.0; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    g.vector(Measure::Betweenness, score, None)
}

/// Multiplies by `Aᵀ + I`: entry `i` collects its in-neighbours' values.
fn shifted_transpose_mul(g: &DenseGraph, x: &[f64]) -> Vec<f64> {
    let n = g.len();
    let mut y = x.to_vec();
    for (j, row) in g.w.iter().enumerate() {
        for i in 0..n {
            if row[i] > 0.0 {
                y[i] += row[i] * x[j];
            }
        }
    }
    y
}

fn l2_normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Power iteration on the in-neighbour adjacency. The identity shift leaves
/// the eigenvectors unchanged and keeps periodic graphs from oscillating.
pub fn eigenvector(g: &DenseGraph, iters: usize, tol: f64) -> CentralityVector {
    let n = g.len();
    if n == 0 {
        return g.vector(Measure::Eigenvector, Vec::new(), Some(true));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut converged = false;
    for _ in 0..iters.max(1) {
        let mut y = shifted_transpose_mul(g, &x);
        l2_normalize(&mut y);
        let diff = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = y;
        if diff < tol {
            converged = true;
            break;
        }
    }
    g.vector(Measure::Eigenvector, x, Some(converged))
}

/// Upper bound on the spectral radius after `iters` power steps
/// (Collatz–Wielandt bound of the shifted matrix, minus the shift).
pub fn spectral_radius_bound(g: &DenseGraph, iters: usize) -> f64 {
    let n = g.len();
    if n == 0 || is_acyclic(g) {
        return 0.0;
    }
    let mut x = vec![1.0; n];
    for _ in 0..iters {
        let mut y = shifted_transpose_mul(g, &x);
        l2_normalize(&mut y);
        x = y;
    }
    let y = shifted_transpose_mul(g, &x);
    let bound = x
        .iter()
        .zip(&y)
        .map(|(a, b)| b / a)
        .fold(1.0, f64::max);
    bound - 1.0
}

fn is_acyclic(g: &DenseGraph) -> bool {
    let n = g.len();
    let mut indegree: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| g.w[i][j] > 0.0).count())
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop() {
        seen += 1;
        for v in 0..n {
            if g.w[u][v] > 0.0 {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(v);
                }
            }
        }
    }
    seen == n
}

/// Default attenuation: `0.85 / λ̂`, or `0.85 / max w` when the graph is
/// acyclic enough that λ̂ vanishes.
pub fn auto_beta(g: &DenseGraph) -> f64 {
    let lambda = spectral_radius_bound(g, 100);
    if lambda > 1e-9 {
        return 0.85 / lambda;
    }
    let max_w = g.w.iter().flatten().copied().fold(0.0, f64::max);
    if max_w > 0.0 {
        0.85 / max_w
    } else {
        0.85
    }
}

/// Solves `(I − β Aᵀ) k = 1`. The system has a non-negative solution exactly
/// when `β ρ(A) < 1`, which is how divergence is detected.
pub fn katz(g: &DenseGraph, beta: Option<f64>) -> Result<CentralityVector, CentralityError> {
    let n = g.len();
    let beta = beta.unwrap_or_else(|| auto_beta(g));
    let mut m = vec![vec![0.0; n + 1]; n];
    for i in 0..n {
        m[i][i] = 1.0;
        for j in 0..n {
            m[i][j] -= beta * g.w[j][i];
        }
        m[i][n] = 1.0;
    }
    let k = gauss_solve(m).ok_or(CentralityError::BetaTooLarge { beta })?;
    if k.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(CentralityError::BetaTooLarge { beta });
    }
    Ok(g.vector(Measure::Katz, k, None))
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
fn gauss_solve(mut m: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let n = m.len();
    let scale = m
        .iter()
        .flat_map(|r| r[..n].iter())
        .fold(1.0f64, |a, v| a.max(v.abs()));
    for col in 0..n {
        let pivot = (col..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col].abs() <= 1e-12 * scale {
            return None;
        }
        m.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                for c in col..=n {
                    m[row][c] -= f * m[col][c];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|c| m[row][c] * x[c]).sum();
        x[row] = (m[row][n] - s) / m[row][row];
    }
    Some(x)
}

pub fn compute(
    g: &DenseGraph,
    measure: Measure,
    params: &CentralityParams,
) -> Result<CentralityVector, CentralityError> {
    Ok(match measure {
        Measure::DegreeIn => degree(g, Direction::In),
        Measure::DegreeOut => degree(g, Direction::Out),
        Measure::Harmonic => harmonic(g),
        Measure::Closeness => closeness_newman(g),
        Measure::Betweenness => betweenness_opsahl(g, params.alpha),
        Measure::Eigenvector => eigenvector(g, params.eigen_iters, params.eigen_tol),
        Measure::Katz => katz(g, params.beta)?,
    })
}

/// Feature names by descending score, ties by name; `G` and `PATCH` omitted.
pub fn rank(v: &CentralityVector) -> Vec<String> {
    let mut items: Vec<(&String, f64)> = v
        .entries
        .iter()
        .filter(|(n, _)| !is_reserved(n))
        .map(|(n, s)| (n, *s))
        .collect();
    items.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    items.into_iter().map(|(n, _)| n.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::featgraph::GLOBAL;

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> DenseGraph {
        let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let mut w = vec![vec![0.0; n]; n];
        for &(s, t, x) in edges {
            w[s][t] = x;
        }
        DenseGraph::from_matrix(names, w)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn degree_counts_edges() {
        let g = graph(3, &[(0, 1, 2.0)]);
        let din = degree(&g, Direction::In);
        assert_eq!(din.entries["b"], 1.0);
        assert_eq!(din.entries["a"], 0.0);
        assert_eq!(din.entries["c"], 0.0);
        assert_eq!(degree(&g, Direction::Out).entries["a"], 1.0);
    }

    #[test]
    fn closeness_examples() {
        let g = graph(2, &[(0, 1, 1.0)]);
        let c = closeness_newman(&g);
        assert_eq!((c.entries["a"], c.entries["b"]), (1.0, 0.0));
        let g = graph(3, &[(0, 1, 2.0), (1, 2, 1.0)]);
        assert!(close(closeness_newman(&g).entries["a"], 0.5));
        let g = graph(2, &[]);
        assert_eq!(closeness_newman(&g).entries["a"], 0.0);
    }

    #[test]
    fn harmonic_examples() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0)]);
        assert!(close(harmonic(&g).entries["a"], 1.5));
        assert_eq!(harmonic(&graph(1, &[])).entries["a"], 0.0);
    }

    #[test]
    fn betweenness_examples() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0)]);
        let b = betweenness_opsahl(&g, 0.5);
        assert!(close(b.entries["b"], 1.0));
        assert_eq!(b.entries["a"], 0.0);
        let star = graph(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]);
        assert!(betweenness_opsahl(&star, 0.5).entries.values().all(|&v| v == 0.0));
    }

    #[test]
    fn betweenness_splits_over_tied_paths() {
        // a→b→d and a→c→d tie, so b and c each carry half
        let g = graph(4, &[(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)]);
        let b = betweenness_opsahl(&g, 0.0);
        assert!(close(b.entries["b"], 0.5));
        assert!(close(b.entries["c"], 0.5));
    }

    #[test]
    fn eigenvector_symmetric_cycles() {
        let g = graph(2, &[(0, 1, 1.0), (1, 0, 1.0)]);
        let v = eigenvector(&g, 1000, 1e-10);
        assert_eq!(v.converged, Some(true));
        assert!(close(v.entries["a"], 1.0 / 2f64.sqrt()));
        assert!(close(v.entries["b"], 1.0 / 2f64.sqrt()));
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]);
        let v = eigenvector(&g, 1000, 1e-10);
        assert!(close(v.entries["a"], v.entries["c"]));
    }

    #[test]
    fn katz_examples() {
        let empty = graph(3, &[]);
        let k = katz(&empty, Some(0.7)).unwrap();
        assert!(k.entries.values().all(|&v| close(v, 1.0)));
        let g = graph(2, &[(0, 1, 1.0)]);
        let k = katz(&g, Some(0.5)).unwrap();
        assert!(close(k.entries["a"], 1.0));
        assert!(close(k.entries["b"], 1.5));
        let cycle = graph(2, &[(0, 1, 1.0), (1, 0, 1.0)]);
        assert!(katz(&cycle, Some(1.0)).is_err());
        assert!(katz(&cycle, Some(2.0)).is_err());
        assert!(katz(&cycle, Some(0.99)).is_ok());
        assert!(katz(&cycle, None).is_ok());
    }

    #[test]
    fn spectral_bound_is_an_upper_bound() {
        let cycle = graph(3, &[(0, 1, 2.0), (1, 2, 2.0), (2, 0, 2.0)]);
        let r = spectral_radius_bound(&cycle, 100);
        assert!(r >= 2.0 - 1e-9 && r < 2.0 + 1e-6);
        assert_eq!(spectral_radius_bound(&graph(3, &[(0, 1, 1.0)]), 100), 0.0);
    }

    #[test]
    fn rank_orders_and_breaks_ties() {
        let mk = |pairs: &[(&str, f64)]| CentralityVector {
            measure: Measure::Harmonic,
            entries: pairs.iter().map(|(n, s)| (n.to_string(), *s)).collect(),
            converged: None,
        };
        assert_eq!(rank(&mk(&[("a", 0.5), ("b", 0.9)])), vec!["b", "a"]);
        assert_eq!(rank(&mk(&[("b", 0.5), ("a", 0.5)])), vec!["a", "b"]);
        assert_eq!(rank(&mk(&[("a", 0.1), (GLOBAL, 9.0)])), vec!["a"]);
    }

    #[test]
    fn patch_never_in_entries() {
        let names = vec![GLOBAL.to_string(), PATCH.to_string(), "x".to_string()];
        let w = vec![
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0],
        ];
        let g = DenseGraph::from_matrix(names, w);
        for m in Measure::ALL {
            let v = compute(&g, m, &CentralityParams::default()).unwrap();
            assert!(!v.entries.contains_key(PATCH), "{m}");
            assert!(v.entries.values().all(|s| s.is_finite()));
        }
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.as_str().parse::<Measure>().unwrap(), m);
        }
    }
}
