//! Labelled trees on `0..n` with mutable edge structure.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{LabelledGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum TreeError {
    #[error("tree on {n} vertices needs {} edges, found {found}", n.saturating_sub(1))]
    EdgeCount { n: usize, found: usize },
    #[error("edge ({0}, {1}) closes a cycle")]
    Cycle(Vertex, Vertex),
    #[error("vertex {0} is not reachable from vertex 0")]
    Disconnected(Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(Vertex, Vertex),
    #[error("edge ({0}, {1}) is not in the tree")]
    MissingEdge(Vertex, Vertex),
}

/// An edge structure on `0..n` that is meant to be a spanning tree.
///
/// Construction only rules out loops, duplicates and bad indices; use
/// [`DegreeTree::check_tree`] to confirm connectivity and acyclicity.
#[derive(Clone, PartialEq, Eq)]
pub struct DegreeTree {
    adjacency: Vec<Vec<Vertex>>,
}

impl fmt::Debug for DegreeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeTree({}, {:?})", self.n(), self.edges())
    }
}

impl DegreeTree {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, TreeError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut tree = DegreeTree {
            adjacency: vec![Vec::new(); n],
        };
        for (u, v) in edges {
            tree.insert_edge(u, v)?;
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Neighbors of `v` in insertion order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let set: BTreeSet<(Vertex, Vertex)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        set.into_iter().collect()
    }

    /// Tree edges absent from `g`, sorted.
    pub fn foreign_edges(&self, g: &LabelledGraph) -> Vec<(Vertex, Vertex)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect()
    }

    /// Number of tree edges absent from `g`.
    pub fn foreign_count(&self, g: &LabelledGraph) -> usize {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .count()
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), TreeError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(TreeError::OutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(TreeError::SelfLoop(u));
        }
        if self.adjacency[u].contains(&v) {
            return Err(TreeError::Duplicate(u.min(v), u.max(v)));
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), TreeError> {
        let missing = || TreeError::MissingEdge(u.min(v), u.max(v));
        if u >= self.n() || v >= self.n() {
            return Err(missing());
        }
        let iu = self.adjacency[u].iter().position(|&w| w == v).ok_or_else(missing)?;
        let iv = self.adjacency[v].iter().position(|&w| w == u).ok_or_else(missing)?;
        self.adjacency[u].swap_remove(iu);
        self.adjacency[v].swap_remove(iv);
        Ok(())
    }

    /// Confirms the structure is a spanning tree of `0..n`.
    pub fn check_tree(&self) -> Result<(), TreeError> {
        let n = self.n();
        let found = self.edge_count();
        if n == 0 || found != n - 1 {
            return Err(TreeError::EdgeCount { n, found });
        }
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if w == parent[v] {
                    continue;
                }
                if seen[w] {
                    return Err(TreeError::Cycle(v.min(w), v.max(w)));
                }
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(TreeError::Disconnected(v)),
            None => Ok(()),
        }
    }

    pub fn is_tree(&self) -> bool {
        self.check_tree().is_ok()
    }

    /// Edge list in the graph file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
