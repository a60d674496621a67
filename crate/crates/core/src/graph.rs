//! Immutable labelled simple graphs.
//!
//! Vertices are the indices `0..n`. Neighbor lists are kept sorted so that
//! adjacency queries are a binary search.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::condition::{self, ConditionError};
use crate::Rational;

/// A vertex label.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: missing vertex count")]
    MissingOrder { line: usize },
    #[error("empty input: no vertex count line")]
    Empty,
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range [0, {n})")]
    OutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
}

#[derive(Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabelledGraph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl LabelledGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        LabelledGraph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        LabelledGraph {
            adjacency,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    fn from_raw_adjacency(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        let mut total = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        LabelledGraph {
            adjacency,
            edge_count: total / 2,
        }
    }

    /// Parses the plain-text graph format: a vertex count line followed by
    /// `u v` edge lines. `#` starts a comment line; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut n: Option<usize> = None;
        let mut adjacency: Vec<Vec<Vertex>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || ParseError::Malformed {
                line,
                text: raw.to_string(),
            };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(ParseError::MissingOrder { line });
                    }
                    let order = fields[0].parse::<usize>().map_err(|_| malformed())?;
                    n = Some(order);
                    adjacency = vec![Vec::new(); order];
                }
                Some(order) => {
                    if fields.len() != 2 {
                        return Err(malformed());
                    }
                    let u = fields[0].parse::<usize>().map_err(|_| malformed())?;
                    let v = fields[1].parse::<usize>().map_err(|_| malformed())?;
                    for w in [u, v] {
                        if w >= order {
                            return Err(ParseError::OutOfRange {
                                line,
                                vertex: w,
                                n: order,
                            });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop { line, vertex: u });
                    }
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        if n.is_none() {
            return Err(ParseError::Empty);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Canonical text form: order line, then edges `u v` with `u < v` in
    /// lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// Unchecked adjacency test; panics on out-of-range indices.
    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Checked adjacency test. A vertex is never adjacent to itself.
    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        Ok(u != v && self.has_edge(u, v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        Self::from_edges(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adjacency)
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// The non-adjacent pair with the smallest degree sum, ties broken by
    /// the lexicographically smallest pair. `None` for complete graphs.
    pub fn min_nonadjacent_degree_sum(&self) -> Option<(Vertex, Vertex, usize)> {
        let n = self.n();
        let mut best: Option<(Vertex, Vertex, usize)> = None;
        for u in 0..n {
            let du = self.degree(u);
            // Early exit: no pair starting at u can beat the best sum.
            if let Some((_, _, s)) = best {
                if du >= s {
                    continue;
                }
            }
            let mut neighbors = self.adjacency[u].iter().peekable();
            for v in (u + 1)..n {
                while neighbors.next_if(|&&w| w < v).is_some() {}
                if neighbors.next_if_eq(&&v).is_some() {
                    continue;
                }
                let sum = du + self.degree(v);
                if best.is_none_or(|(_, _, s)| sum < s) {
                    best = Some((u, v, sum));
                }
            }
        }
        best
    }
}

impl FromStr for LabelledGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Random graph on `n` vertices in which every non-adjacent pair meets the
/// degree-sum threshold for max degree `r`.
///
/// Starts from an Erdős–Rényi graph with a seed-chosen edge probability and
/// repeatedly joins the worst violating pair until no violation remains.
pub fn random_condition_graph(
    n: usize,
    r: usize,
    seed: u64,
) -> Result<LabelledGraph, ConditionError> {
    let bound = condition::threshold::<i64>(n, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p: f64 = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut adjacency = vec![vec![false; n]; n];
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        adjacency[u][v] = true;
        adjacency[v][u] = true;
        degree[u] += 1;
        degree[v] += 1;
    }
    let meets = |sum: usize| Rational::from_integer(sum as i64) >= bound;
    loop {
        let mut worst: Option<(usize, usize, usize)> = None;
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacency[u][v] {
                    continue;
                }
                let sum = degree[u] + degree[v];
                if !meets(sum) && worst.is_none_or(|(_, _, s)| sum < s) {
                    worst = Some((u, v, sum));
                }
            }
        }
        let Some((u, v, _)) = worst else { break };
        adjacency[u][v] = true;
        adjacency[v][u] = true;
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Ok(LabelledGraph::from_edges(n, edges).expect("generated edges are in range"))
}
