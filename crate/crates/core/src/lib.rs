//! Spanning trees with a prescribed degree at every labelled vertex.
//!
//! Given a graph `G` on `0..n` and an arboreal sequence `d` (positive,
//! summing to `2(n - 1)`), [`find_spanning_tree`] looks for a spanning tree
//! of `G` in which vertex `i` has degree exactly `d[i]`. It starts from a
//! tree built by Prüfer decoding and swaps out edges missing from `G` one
//! exchange at a time. If every non-adjacent pair of `G` has degree sum at
//! least [`condition::threshold`]`(n, max d)` the search always succeeds;
//! otherwise it may stop with an [`InfeasibilityWitness`].
//!
//! ```
//! use ore_trees::{find_spanning_tree, verify_tree, ArborealSequence, LabelledGraph};
//!
//! let g = LabelledGraph::complete(4);
//! let seq: ArborealSequence = "2,2,1,1".parse().unwrap();
//! let out = find_spanning_tree(&g, &seq).unwrap();
//! assert!(verify_tree(&g, out.tree().unwrap(), &seq).is_ok());
//! ```

pub mod arboreal;
pub mod batch;
pub mod condition;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod prufer;
pub mod solver;
pub mod tree;

use num_bigint::BigInt;
use num_rational::Ratio;

/// Exact threshold values at machine width.
pub type Rational = Ratio<i64>;
/// Exact threshold values without overflow.
pub type BigRational = Ratio<BigInt>;

pub use arboreal::{realize_tree, validate_arboreal, ArborealError, ArborealSequence};
pub use condition::{check_condition, threshold, ConditionError, ConditionReport};
pub use extremal::{build_extremal, extremal_worst_sum, ExtremalParams};
pub use graph::{random_condition_graph, LabelledGraph, Vertex};
pub use oracle::{count_trees, oracle_count, oracle_find, OracleError};
pub use solver::{
    find_spanning_tree, verify_tree, InfeasibilityWitness, SolveOutcome, SolverError, VerifyError,
};
pub use tree::DegreeTree;
