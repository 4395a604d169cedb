//! Checks against concrete graphs.
//!
//! Everything the feasibility chain infers from an intersection array can be
//! measured directly on a real graph: distance partitions, local graphs,
//! second-largest eigenvalues, maximum cocliques. This module does exactly
//! that, so the inequalities the chain trusts can be validated empirically
//! on graphs that are known to exist.

use crate::array::{derive_parameters, IntersectionArray};
use crate::feasibility::{self, Outcome};
use crate::poly::decimal_string;
use crate::spectral::{self, TridiagonalMatrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::VecDeque;
use thiserror::Error;

pub mod catalog;

/// Hard cap on the exact maximum-coclique search.
pub const COCLIQUE_SEARCH_CAP: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {v} is unreachable from vertex {from}")]
    Disconnected { from: usize, v: usize },
    #[error("{n} vertices exceeds the exact search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not distance-regular")]
    NotDistanceRegular,
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, OracleError> {
        if n == 0 {
            return Err(OracleError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(OracleError::VertexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(OracleError::SelfLoop { v: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] == w[1]) {
                let v = list
                    .windows(2)
                    .find(|w| w[0] == w[1])
                    .map(|w| w[0])
                    .unwrap();
                return Err(OracleError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Common degree, when one exists.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        if self.adj.iter().all(|l| l.len() == k) {
            Some(k)
        } else {
            None
        }
    }

    pub fn is_connected(&self) -> bool {
        bfs_distances(self, 0).iter().all(|d| d.is_some())
    }
}

fn bfs_distances(g: &Graph, from: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Vertices grouped by distance from x: element i holds the vertices at
/// distance exactly i. Errors if some vertex is unreachable.
pub fn distance_partition(g: &Graph, x: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.vertex_count();
    if x >= n {
        return Err(OracleError::VertexOutOfRange { index: x, n });
    }
    let dist = bfs_distances(g, x);
    if let Some(v) = dist.iter().position(|d| d.is_none()) {
        return Err(OracleError::Disconnected { from: x, v });
    }
    let ecc = dist.iter().map(|d| d.unwrap()).max().unwrap() as usize;
    let mut layers = vec![Vec::new(); ecc + 1];
    for (v, d) in dist.iter().enumerate() {
        layers[d.unwrap() as usize].push(v);
    }
    Ok(layers)
}

/// Check distance-regularity by brute-force counting and extract the
/// intersection array. Returns `None` for graphs that are not connected,
/// not regular, or fail any of the counting conditions.
pub fn verify_distance_regular(g: &Graph) -> Option<IntersectionArray> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let k = g.regular_degree()?;
    if k == 0 {
        return None;
    }

    let dist: Vec<Vec<Option<u32>>> = (0..n).map(|x| bfs_distances(g, x)).collect();
    if dist.iter().any(|row| row.iter().any(|d| d.is_none())) {
        return None;
    }
    let ecc = |x: usize| dist[x].iter().map(|d| d.unwrap()).max().unwrap();
    let d = ecc(0) as usize;
    if d == 0 || (1..n).any(|x| ecc(x) as usize != d) {
        return None;
    }

    let mut b: Vec<Option<u32>> = vec![None; d + 1];
    let mut c: Vec<Option<u32>> = vec![None; d + 1];
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y].unwrap();
            let mut further = 0u32;
            let mut closer = 0u32;
            for &z in g.neighbors(y) {
                let dz = dist[x][z].unwrap();
                if dz == i + 1 {
                    further += 1;
                } else if dz + 1 == i {
                    closer += 1;
                }
            }
            match b[i as usize] {
                None => b[i as usize] = Some(further),
                Some(v) if v == further => {}
                Some(_) => return None,
            }
            if i > 0 {
                match c[i as usize] {
                    None => c[i as usize] = Some(closer),
                    Some(v) if v == closer => {}
                    Some(_) => return None,
                }
            }
        }
    }

    if b[d] != Some(0) {
        return None;
    }
    let bvec: Vec<u32> = b[..d].iter().map(|v| v.unwrap()).collect();
    let cvec: Vec<u32> = c[1..=d].iter().map(|v| v.unwrap()).collect();
    IntersectionArray::new(bvec, cvec).ok()
}

/// Subgraph induced on the neighbors of x, with vertices renumbered in
/// ascending neighbor order.
pub fn local_graph(g: &Graph, x: usize) -> Graph {
    let nbrs = g.neighbors(x);
    let mut edges = Vec::new();
    for (i, &u) in nbrs.iter().enumerate() {
        for (j, &v) in nbrs.iter().enumerate().skip(i + 1) {
            if g.is_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(nbrs.len().max(1), &edges).unwrap()
}

/// A set of pairwise non-adjacent vertices, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocliqueWitness {
    vertices: Vec<usize>,
}

impl CocliqueWitness {
    fn new(g: &Graph, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                assert!(!g.is_edge(u, v), "witness contains the edge {u}-{v}");
            }
        }
        CocliqueWitness { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Exact maximum coclique via branch and bound on the complement graph,
/// with greedy-coloring bounds. Exact but exponential in the worst case,
/// hence the vertex cap.
pub fn max_coclique(g: &Graph) -> Result<CocliqueWitness, OracleError> {
    max_coclique_capped(g, COCLIQUE_SEARCH_CAP)
}

pub fn max_coclique_capped(g: &Graph, cap: usize) -> Result<CocliqueWitness, OracleError> {
    let n = g.vertex_count();
    if n > cap || n > 128 {
        return Err(OracleError::TooLarge {
            n,
            cap: cap.min(128),
        });
    }
    // coclique in g = clique in the complement
    let mut masks = vec![0u128; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.is_edge(u, v) {
                masks[u] |= 1u128 << v;
            }
        }
    }
    let all = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(&masks, all, &mut current, &mut best);
    Ok(CocliqueWitness::new(g, best))
}

fn expand_clique(masks: &[u128], cand: u128, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Color the candidates greedily; a clique can use each color at most
    // once, so color counts bound what this branch can still achieve.
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = cand;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            let bit = 1u128 << v;
            avail &= !bit;
            uncolored &= !bit;
            order.push((v, color));
            avail &= !masks[v];
        }
    }
    let mut cand = cand;
    for (v, color) in order.into_iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        expand_clique(masks, cand & masks[v], current, best);
        current.pop();
        cand &= !(1u128 << v);
    }
}

/// All adjacency eigenvalues, descending, via a dense symmetric
/// eigensolver. Numeric, not exact; used as an independent measurement.
pub fn adjacency_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let m = DMatrix::from_fn(n, n, |i, j| if g.is_edge(i, j) { 1.0 } else { 0.0 });
    let mut eigs: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    eigs
}

/// Second largest adjacency eigenvalue; `None` on fewer than two vertices.
/// For a disconnected regular graph this equals the degree, so the
/// Terwilliger bound comparison needs no separate connectivity case.
pub fn second_largest_eigenvalue(g: &Graph) -> Option<f64> {
    if g.vertex_count() < 2 {
        return None;
    }
    Some(adjacency_spectrum(g)[1])
}

/// Numeric spectrum of an intersection matrix, descending. The matrix is
/// conjugated to a symmetric tridiagonal form first (off-diagonal entries
/// sqrt(b_i c_{i+1})), which preserves the eigenvalues.
pub fn tridiagonal_numeric_spectrum(m: &TridiagonalMatrix) -> Vec<f64> {
    let n = m.order();
    let sym = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            m.diag()[i] as f64
        } else if j == i + 1 {
            (m.sup()[i] as f64 * m.sub()[i] as f64).sqrt()
        } else if i == j + 1 {
            (m.sup()[j] as f64 * m.sub()[j] as f64).sqrt()
        } else {
            0.0
        }
    });
    let mut eigs: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    eigs
}

/// Parse an edge list: one "u v" pair per line, 0-indexed vertices,
/// '#' starts a comment, blank lines are skipped. The vertex count is one
/// more than the largest index seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, OracleError> {
    let mut edges = Vec::new();
    let mut max_index = 0usize;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next()) {
            (None, _) => continue,
            (Some(a), Some(b)) => (a, b),
            (Some(_), None) => {
                return Err(OracleError::Parse {
                    line: line_no,
                    message: "expected two vertex indices".to_string(),
                })
            }
        };
        if parts.next().is_some() {
            return Err(OracleError::Parse {
                line: line_no,
                message: "expected exactly two vertex indices".to_string(),
            });
        }
        let parse = |s: &str| -> Result<usize, OracleError> {
            s.parse().map_err(|_| OracleError::Parse {
                line: line_no,
                message: format!("invalid vertex index '{}'", s),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        max_index = max_index.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(OracleError::Parse {
            line: 0,
            message: "edge list contains no edges".to_string(),
        });
    }
    Graph::from_edges(max_index + 1, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Coclique forces c_2 - 1 >= (c(a_1+1) - b_0)/C(c,2).
    KoolenPark,
    /// lambda_2 of every local graph is at most -b_1/(theta_d+1) - 1.
    Terwilliger,
    /// A connected k-regular graph that is neither complete nor an odd
    /// cycle has a coclique of at least ceil(v/k) vertices.
    Brooks,
}

impl Lemma {
    pub fn label(&self) -> &'static str {
        match self {
            Lemma::KoolenPark => "koolen-park",
            Lemma::Terwilliger => "terwilliger",
            Lemma::Brooks => "brooks",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    pub vertex: usize,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug)]
pub struct LemmaReport {
    pub array: IntersectionArray,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Violated)
    }

    pub fn counts(&self, lemma: Lemma) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut violated = 0;
        let mut inapplicable = 0;
        for c in self.checks.iter().filter(|c| c.lemma == lemma) {
            match c.outcome {
                Outcome::Pass => pass += 1,
                Outcome::Violated => violated += 1,
                Outcome::Inapplicable => inapplicable += 1,
            }
        }
        (pass, violated, inapplicable)
    }
}

/// Measure, on every local graph of a distance-regular graph, the three
/// inequalities the feasibility chain relies on. The graph's own
/// intersection array supplies the parameters; the measurements come from
/// the adjacency structure directly.
pub fn validate_lemmas(g: &Graph) -> Result<LemmaReport, OracleError> {
    let arr = verify_distance_regular(g).ok_or(OracleError::NotDistanceRegular)?;
    let dp = derive_parameters(&arr);
    let sp = spectral::spectrum(&arr, &dp).expect("distance-regular spectra are simple");
    let bound = feasibility::terwilliger_bound(&arr, &dp, &sp);
    // numeric slack for the eigensolver side of the comparison
    let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    let enclosure_width = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000_000u64));

    let mut checks = Vec::new();
    for x in 0..g.vertex_count() {
        let local = local_graph(g, x);
        let v = local.vertex_count();

        match (&bound, v >= 2) {
            (Some(b), true) => {
                let lam2 = second_largest_eigenvalue(&local).unwrap();
                let (blo, _bhi) = b.enclosure(&enclosure_width);
                let lam2_rat = BigRational::from_float(lam2).expect("finite eigenvalue");
                let ok = lam2_rat <= &blo + &tol;
                checks.push(LemmaCheck {
                    lemma: Lemma::Terwilliger,
                    vertex: x,
                    outcome: if ok { Outcome::Pass } else { Outcome::Violated },
                    detail: format!(
                        "lambda_2 = {} <= B = {}",
                        decimal_string(&lam2_rat, 6, false),
                        b.display_string()
                    ),
                });
            }
            (None, _) => checks.push(LemmaCheck {
                lemma: Lemma::Terwilliger,
                vertex: x,
                outcome: Outcome::Inapplicable,
                detail: "no bound (d = 1 or theta_d = -1)".to_string(),
            }),
            (Some(_), false) => checks.push(LemmaCheck {
                lemma: Lemma::Terwilliger,
                vertex: x,
                outcome: Outcome::Inapplicable,
                detail: "local graph has a single vertex".to_string(),
            }),
        }

        let brooks = match local.regular_degree() {
            Some(k) if k >= 1 && k + 1 < v && local.is_connected() => {
                if k == 2 && v % 2 == 1 {
                    LemmaCheck {
                        lemma: Lemma::Brooks,
                        vertex: x,
                        outcome: Outcome::Inapplicable,
                        detail: format!("local graph is the odd cycle C_{}", v),
                    }
                } else {
                    let alpha = max_coclique(&local)?.size();
                    let needed = (v + k - 1) / k;
                    LemmaCheck {
                        lemma: Lemma::Brooks,
                        vertex: x,
                        outcome: if alpha >= needed {
                            Outcome::Pass
                        } else {
                            Outcome::Violated
                        },
                        detail: format!("alpha = {} >= ceil({}/{}) = {}", alpha, v, k, needed),
                    }
                }
            }
            Some(k) => LemmaCheck {
                lemma: Lemma::Brooks,
                vertex: x,
                outcome: Outcome::Inapplicable,
                detail: if k + 1 >= v {
                    "local graph is complete".to_string()
                } else if k == 0 {
                    "local graph has no edges".to_string()
                } else {
                    "local graph is disconnected".to_string()
                },
            },
            None => LemmaCheck {
                lemma: Lemma::Brooks,
                vertex: x,
                outcome: Outcome::Inapplicable,
                detail: "local graph is not regular".to_string(),
            },
        };
        checks.push(brooks);

        let alpha = max_coclique(&local)?.size();
        if arr.d() >= 2 && alpha >= 2 {
            let step = feasibility::koolen_park_test(&arr, &dp, alpha as u64);
            checks.push(LemmaCheck {
                lemma: Lemma::KoolenPark,
                vertex: x,
                outcome: step.outcome,
                detail: step.detail,
            });
        } else {
            checks.push(LemmaCheck {
                lemma: Lemma::KoolenPark,
                vertex: x,
                outcome: Outcome::Inapplicable,
                detail: format!("max coclique {} too small or d = 1", alpha),
            });
        }
    }

    Ok(LemmaReport { array: arr, checks })
}
