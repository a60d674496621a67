//! Exhaustive ground truth by enumerating every labelled tree with a given
//! degree vector.
//!
//! Trees with degree vector `d` correspond to the distinct rearrangements of
//! the word in which vertex `i` appears `d_i - 1` times, so walking those
//! rearrangements in lexicographic order visits each tree exactly once.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::arboreal::ArborealSequence;
use crate::graph::{LabelledGraph, Vertex};
use crate::prufer;
use crate::tree::DegreeTree;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle infeasible at this size: {total} candidate trees exceed the budget of {budget}")]
    BudgetExceeded { total: BigUint, budget: u64 },
    #[error("graph has {graph} vertices but the sequence has {sequence}")]
    DimensionMismatch { graph: usize, sequence: usize },
}

/// `(n - 2)! / prod (d_i - 1)!`, the number of labelled trees with degree
/// vector `seq`.
pub fn count_trees(seq: &ArborealSequence) -> BigUint {
    let factorial = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    let denominator = seq
        .degrees()
        .iter()
        .fold(BigUint::one(), |acc, &d| acc * factorial(d - 1));
    factorial(seq.n() - 2) / denominator
}

/// Rearranges `word` into its lexicographic successor. Returns `false` when
/// `word` is already the last arrangement.
pub fn next_permutation<T: Ord>(word: &mut [T]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Cursor over all labelled trees with a fixed degree vector.
#[derive(Debug, Clone)]
pub struct TreeEnumeration {
    n: usize,
    word: Vec<Vertex>,
    total: BigUint,
    done: bool,
    degree: Vec<usize>,
    edges: Vec<(Vertex, Vertex)>,
}

impl TreeEnumeration {
    pub fn new(seq: &ArborealSequence) -> Self {
        TreeEnumeration {
            n: seq.n(),
            word: seq.canonical_word(),
            total: count_trees(seq),
            done: false,
            degree: vec![0; seq.n()],
            edges: Vec::with_capacity(seq.n()),
        }
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// The Prüfer word of the next tree to be produced.
    pub fn current_word(&self) -> Option<&[Vertex]> {
        (!self.done).then_some(self.word.as_slice())
    }

    fn advance(&mut self) {
        if !next_permutation(&mut self.word) {
            self.done = true;
        }
    }

    /// Moves to the next tree all of whose edges pass `accept` and returns
    /// its edges. Decoding stops at the first rejected edge.
    pub fn next_accepted<F>(&mut self, mut accept: F) -> Option<&[(Vertex, Vertex)]>
    where
        F: FnMut(Vertex, Vertex) -> bool,
    {
        while !self.done {
            let ok = prufer::decode_filtered(
                &self.word,
                self.n,
                &mut self.degree,
                &mut self.edges,
                &mut accept,
            );
            self.advance();
            if ok {
                return Some(&self.edges);
            }
        }
        None
    }
}

impl Iterator for TreeEnumeration {
    type Item = DegreeTree;

    fn next(&mut self) -> Option<DegreeTree> {
        let n = self.n;
        let edges = self.next_accepted(|_, _| true)?.to_vec();
        Some(DegreeTree::from_edges(n, edges).expect("decoded word is a tree"))
    }
}

fn guard(g: &LabelledGraph, seq: &ArborealSequence, budget: u64) -> Result<TreeEnumeration, OracleError> {
    if g.n() != seq.n() {
        return Err(OracleError::DimensionMismatch {
            graph: g.n(),
            sequence: seq.n(),
        });
    }
    let cursor = TreeEnumeration::new(seq);
    if cursor.total().to_u64().is_none_or(|t| t > budget) {
        return Err(OracleError::BudgetExceeded {
            total: cursor.total().clone(),
            budget,
        });
    }
    Ok(cursor)
}

/// The first enumerated tree contained in `g`, or `None` when no spanning
/// tree of `g` has degree vector `seq`.
pub fn oracle_find(
    g: &LabelledGraph,
    seq: &ArborealSequence,
    budget: u64,
) -> Result<Option<DegreeTree>, OracleError> {
    let mut cursor = guard(g, seq, budget)?;
    let n = seq.n();
    Ok(cursor
        .next_accepted(|a, b| g.has_edge(a, b))
        .map(|edges| DegreeTree::from_edges(n, edges.iter().copied()).expect("decoded word is a tree")))
}

/// Number of spanning trees of `g` with degree vector `seq`.
pub fn oracle_count(g: &LabelledGraph, seq: &ArborealSequence, budget: u64) -> Result<u64, OracleError> {
    let mut cursor = guard(g, seq, budget)?;
    let mut count = 0;
    while cursor.next_accepted(|a, b| g.has_edge(a, b)).is_some() {
        count += 1;
    }
    Ok(count)
}
