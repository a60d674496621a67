//! Edge-exchange search for a spanning tree of `G` with an exact degree
//! vector.
//!
//! Start from any tree realizing the sequence. While some tree edge `uv` is
//! missing from `G`, split the tree there, orient both halves away from `u`
//! and `v`, and look for a vertex `w` on one side whose child `y` is a graph
//! neighbor of that side's root while `w` itself is a graph neighbor of the
//! other root. Dropping `uv` and `wy` and adding the two graph edges keeps
//! every degree and strictly lowers the number of foreign edges. When no such
//! `w` exists the counts collected along the way form an
//! [`InfeasibilityWitness`].

mod forest;
mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use forest::{compute_cut_sets, orient_forest, CutAnalysis, RootedForest, Side};
pub use witness::{build_witness, InequalityChain, InfeasibilityWitness, SideBound, WitnessError};

use crate::arboreal::{realize_tree, ArborealSequence};
use crate::graph::{LabelledGraph, Vertex};
use crate::tree::{DegreeTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {graph} vertices but the sequence has {sequence}")]
    DimensionMismatch { graph: usize, sequence: usize },
    #[error("({0}, {1}) is not a tree edge")]
    NotATreeEdge(Vertex, Vertex),
    #[error("vertex {0} is unreachable from both roots")]
    Unreachable(Vertex),
    #[error("stale exchange: {0}")]
    StaleExchange(TreeError),
    #[error("exchange did not lower the foreign-edge count ({before} -> {after})")]
    PotentialNotDecreasing { before: usize, after: usize },
    #[error("witness requested while an exchange is available")]
    CandidatePresent,
}

/// One rewiring step: drop the foreign edge and the tree edge `(w, y)`, add
/// `(root, y)` and `(other root, w)`. `side` names the component holding
/// `w` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exchange {
    pub side: Side,
    pub drop_foreign: (Vertex, Vertex),
    pub drop_tree: (Vertex, Vertex),
    pub add_1: (Vertex, Vertex),
    pub add_2: (Vertex, Vertex),
}

impl Exchange {
    /// Both added edges lie in `g` and both dropped edges lie in `t`.
    pub fn is_valid(&self, g: &LabelledGraph, t: &DegreeTree) -> bool {
        let (a1, b1) = self.add_1;
        let (a2, b2) = self.add_2;
        let (fu, fv) = self.drop_foreign;
        let (w, y) = self.drop_tree;
        g.has_edge(a1, b1)
            && g.has_edge(a2, b2)
            && t.has_edge(fu, fv)
            && t.has_edge(w, y)
            && !t.has_edge(a1, b1)
            && !t.has_edge(a2, b2)
    }
}

/// Applies `x` to a copy of `t`.
pub fn apply_exchange(t: &DegreeTree, x: &Exchange) -> Result<DegreeTree, SolverError> {
    let mut next = t.clone();
    next.remove_edge(x.drop_foreign.0, x.drop_foreign.1)
        .and_then(|_| next.remove_edge(x.drop_tree.0, x.drop_tree.1))
        .and_then(|_| next.insert_edge(x.add_1.0, x.add_1.1))
        .and_then(|_| next.insert_edge(x.add_2.0, x.add_2.1))
        .map_err(SolverError::StaleExchange)?;
    Ok(next)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeRecord {
    pub drop_foreign: (Vertex, Vertex),
    pub drop_tree: (Vertex, Vertex),
    pub add_1: (Vertex, Vertex),
    pub add_2: (Vertex, Vertex),
    pub phi_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found {
        tree: DegreeTree,
        trace: Vec<ExchangeRecord>,
    },
    Stalled {
        witness: Box<InfeasibilityWitness>,
        trace: Vec<ExchangeRecord>,
    },
}

impl SolveOutcome {
    pub fn tree(&self) -> Option<&DegreeTree> {
        match self {
            SolveOutcome::Found { tree, .. } => Some(tree),
            SolveOutcome::Stalled { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&InfeasibilityWitness> {
        match self {
            SolveOutcome::Found { .. } => None,
            SolveOutcome::Stalled { witness, .. } => Some(witness),
        }
    }

    pub fn trace(&self) -> &[ExchangeRecord] {
        match self {
            SolveOutcome::Found { trace, .. } | SolveOutcome::Stalled { trace, .. } => trace,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found { .. })
    }
}

/// Searches for a spanning tree of `g` whose degree at vertex `i` is
/// `seq[i]`.
///
/// Success is guaranteed when `g` meets the degree-sum threshold for
/// `r = seq.max_degree()`; otherwise the search runs until it stalls.
pub fn find_spanning_tree(
    g: &LabelledGraph,
    seq: &ArborealSequence,
) -> Result<SolveOutcome, SolverError> {
    if g.n() != seq.n() {
        return Err(SolverError::DimensionMismatch {
            graph: g.n(),
            sequence: seq.n(),
        });
    }
    let r = seq.max_degree();
    let mut tree = realize_tree(seq);
    let mut phi = tree.foreign_count(g);
    let mut trace = Vec::new();
    loop {
        let Some((u, v)) = tree.foreign_edges(g).first().copied() else {
            return Ok(SolveOutcome::Found { tree, trace });
        };
        let forest = orient_forest(&tree, u, v)?;
        let cuts = compute_cut_sets(g, &forest);
        let Some(exchange) = cuts.candidate else {
            let witness = build_witness(g, &tree, &forest, &cuts, r)?;
            debug_assert_eq!(witness.validate(g), Ok(()));
            return Ok(SolveOutcome::Stalled {
                witness: Box::new(witness),
                trace,
            });
        };
        debug_assert!(exchange.is_valid(g, &tree));
        tree = apply_exchange(&tree, &exchange)?;
        debug_assert_eq!(tree.degrees(), seq.degrees());
        debug_assert!(tree.is_tree());
        let after = tree.foreign_count(g);
        if after >= phi {
            return Err(SolverError::PotentialNotDecreasing { before: phi, after });
        }
        phi = after;
        trace.push(ExchangeRecord {
            drop_foreign: exchange.drop_foreign,
            drop_tree: exchange.drop_tree,
            add_1: exchange.add_1,
            add_2: exchange.add_2,
            phi_after: phi,
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum VerifyError {
    #[error("tree has {tree} vertices, graph has {graph}, sequence has {sequence}")]
    OrderMismatch {
        tree: usize,
        graph: usize,
        sequence: usize,
    },
    #[error("not a spanning tree: {0}")]
    NotATree(TreeError),
    #[error("edge ({0}, {1}) not in G")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("degree mismatch at vertex {vertex}: expected {expected}, found {found}")]
    DegreeMismatch {
        vertex: Vertex,
        expected: usize,
        found: usize,
    },
}

/// Independent post-check of a claimed solution.
pub fn verify_tree(
    g: &LabelledGraph,
    t: &DegreeTree,
    seq: &ArborealSequence,
) -> Result<(), VerifyError> {
    if t.n() != g.n() || t.n() != seq.n() {
        return Err(VerifyError::OrderMismatch {
            tree: t.n(),
            graph: g.n(),
            sequence: seq.n(),
        });
    }
    t.check_tree().map_err(VerifyError::NotATree)?;
    if let Some(&(u, v)) = t.foreign_edges(g).first() {
        return Err(VerifyError::EdgeNotInGraph(u, v));
    }
    for vertex in 0..t.n() {
        let (expected, found) = (seq.degree(vertex), t.degree(vertex));
        if expected != found {
            return Err(VerifyError::DegreeMismatch {
                vertex,
                expected,
                found,
            });
        }
    }
    Ok(())
}
