//! The certificate emitted when no exchange exists at a split.
//!
//! With `w` ranging over one component, an empty `A_s ∩ B_s` gives
//! `|A_s| + |B_s| <= n_s`. Every vertex has at most `r - 1` children, so
//! `(r - 1)|A_s| >= d_s(s)`, and `d_s(s) <= n_s - 1` since there are no loops.
//! Combining the three per side and summing gives
//! `(r - 1)(d(u) + d(v)) <= (2r - 3)n - 2(r - 2)`, which for `r = 3` is
//! `2(d(u) + d(v)) <= 3n - 2`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::forest::{compute_cut_sets, intersection, orient_forest, CutAnalysis, RootedForest, Side};
use super::SolverError;
use crate::condition::{meets_threshold, ratio_literal, threshold};
use crate::graph::{LabelledGraph, Vertex};
use crate::tree::DegreeTree;

/// The evaluated inequalities for one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideBound {
    pub side: Side,
    pub n_s: i64,
    pub a_size: i64,
    pub b_size: i64,
    /// Graph neighbors of this side's root inside the component.
    pub own_root: i64,
    /// Graph neighbors of the other root inside the component.
    pub other_root: i64,
    /// `(r - 1)|A_s|`, must be `>= own_root`.
    pub scaled_a: i64,
    /// `(r - 1)(own_root + other_root)`.
    pub combined_lhs: i64,
    /// `(2r - 3)n_s - (r - 2)`.
    pub combined_rhs: i64,
}

impl SideBound {
    fn new(side: Side, f: &RootedForest, c: &CutAnalysis, r: i64) -> Self {
        let own_root = c.own_root_count(side) as i64;
        let other_root = c.other_root_count(side) as i64;
        let n_s = f.size(side) as i64;
        SideBound {
            side,
            n_s,
            a_size: c.a(side).len() as i64,
            b_size: c.b(side).len() as i64,
            own_root,
            other_root,
            scaled_a: (r - 1) * c.a(side).len() as i64,
            combined_lhs: (r - 1) * (own_root + other_root),
            combined_rhs: (2 * r - 3) * n_s - (r - 2),
        }
    }

    fn check(&self, r: i64) -> Result<(), WitnessError> {
        let fail = |what: &'static str| Err(WitnessError::Inequality { side: Some(self.side), what });
        if self.a_size + self.b_size > self.n_s {
            return fail("|A_s| + |B_s| <= n_s");
        }
        if self.scaled_a != (r - 1) * self.a_size || self.scaled_a < self.own_root {
            return fail("(r - 1)|A_s| >= d_s(s)");
        }
        if self.own_root > self.n_s - 1 {
            return fail("d_s(s) <= n_s - 1");
        }
        // (r-1)|A|+(r-1)|B| <= (r-1)n_s, then add (r-2)(d_s(s) <= n_s - 1).
        if self.own_root + (r - 1) * self.other_root > (r - 1) * self.n_s {
            return fail("d_s(s) + (r - 1)d_s(t) <= (r - 1)n_s");
        }
        if self.combined_lhs != (r - 1) * (self.own_root + self.other_root)
            || self.combined_rhs != (2 * r - 3) * self.n_s - (r - 2)
            || self.combined_lhs > self.combined_rhs
        {
            return fail("(r - 1)(d_s(s) + d_s(t)) <= (2r - 3)n_s - (r - 2)");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityChain {
    pub side_u: SideBound,
    pub side_v: SideBound,
    /// `(r - 1)(d(u) + d(v))`.
    pub final_lhs: i64,
    /// `(2r - 3)n - 2(r - 2)`.
    pub final_rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub n: usize,
    pub n_u: usize,
    pub n_v: usize,
    /// Out-degree cap plus one; the max entry of the sequence, at least 2.
    pub r: usize,
    pub degree_u: usize,
    pub degree_v: usize,
    pub d_u_of_u: usize,
    pub d_u_of_v: usize,
    pub d_v_of_v: usize,
    pub d_v_of_u: usize,
    pub a_u: usize,
    pub b_u: usize,
    pub a_v: usize,
    pub b_v: usize,
    pub chain: InequalityChain,
    /// Degree-sum threshold for `(n, r)` as `p/q`, when defined.
    pub threshold: Option<String>,
    /// True when `d(u) + d(v)` meets the threshold. The chain rules this
    /// out, so a true value means the witness is inconsistent.
    pub contradicts_threshold: bool,
    /// The tree at failure, including the foreign edge `(u, v)`.
    pub tree: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("stored tree is invalid: {0}")]
    BadTree(String),
    #[error("({0}, {1}) is a graph edge, not a foreign edge")]
    NotForeign(Vertex, Vertex),
    #[error("stored {0} does not match the recomputed value")]
    CountMismatch(&'static str),
    #[error("an exchange exists on side {0:?}")]
    ExchangeExists(Side),
    #[error("a vertex has more than r - 1 children")]
    OutDegree,
    #[error("inequality violated ({side:?}): {what}")]
    Inequality { side: Option<Side>, what: &'static str },
}

/// Assembles the witness for a split with no available exchange.
pub fn build_witness(
    g: &LabelledGraph,
    t: &DegreeTree,
    f: &RootedForest,
    c: &CutAnalysis,
    r: usize,
) -> Result<InfeasibilityWitness, SolverError> {
    if c.candidate.is_some() {
        return Err(SolverError::CandidatePresent);
    }
    let (u, v) = f.removed_edge;
    let n = f.n();
    let r = r.max(2);
    let ri = r as i64;
    let side_u = SideBound::new(Side::U, f, c, ri);
    let side_v = SideBound::new(Side::V, f, c, ri);
    let (degree_u, degree_v) = (g.degree(u), g.degree(v));
    let final_lhs = (ri - 1) * (degree_u + degree_v) as i64;
    let final_rhs = (2 * ri - 3) * n as i64 - 2 * (ri - 2);
    let bound = threshold::<i64>(n, r).ok();
    let contradicts_threshold = bound
        .as_ref()
        .is_some_and(|b| meets_threshold(degree_u + degree_v, b));
    Ok(InfeasibilityWitness {
        u,
        v,
        n,
        n_u: f.n_u,
        n_v: f.n_v,
        r,
        degree_u,
        degree_v,
        d_u_of_u: c.d_u_of_u,
        d_u_of_v: c.d_u_of_v,
        d_v_of_v: c.d_v_of_v,
        d_v_of_u: c.d_v_of_u,
        a_u: c.a_u.len(),
        b_u: c.b_u.len(),
        a_v: c.a_v.len(),
        b_v: c.b_v.len(),
        chain: InequalityChain {
            side_u,
            side_v,
            final_lhs,
            final_rhs,
        },
        threshold: bound.as_ref().map(ratio_literal),
        contradicts_threshold,
        tree: t.edges(),
    })
}

impl InfeasibilityWitness {
    /// Re-derives every count from the stored tree and `g`, then re-checks
    /// each inequality.
    pub fn validate(&self, g: &LabelledGraph) -> Result<(), WitnessError> {
        let (u, v) = (self.u, self.v);
        if g.n() != self.n {
            return Err(WitnessError::CountMismatch("n"));
        }
        let tree = DegreeTree::from_edges(self.n, self.tree.iter().copied())
            .map_err(|e| WitnessError::BadTree(e.to_string()))?;
        tree.check_tree().map_err(|e| WitnessError::BadTree(e.to_string()))?;
        if g.has_edge(u, v) {
            return Err(WitnessError::NotForeign(u, v));
        }
        let forest = orient_forest(&tree, u, v).map_err(|e| WitnessError::BadTree(e.to_string()))?;
        let cuts = compute_cut_sets(g, &forest);
        let expected = build_witness(g, &tree, &forest, &CutAnalysis { candidate: None, ..cuts.clone() }, self.r)
            .map_err(|e| WitnessError::BadTree(e.to_string()))?;

        let fields: [(&'static str, usize, usize); 15] = [
            ("n_u", self.n_u, expected.n_u),
            ("n_v", self.n_v, expected.n_v),
            ("degree_u", self.degree_u, expected.degree_u),
            ("degree_v", self.degree_v, expected.degree_v),
            ("d_u(u)", self.d_u_of_u, expected.d_u_of_u),
            ("d_u(v)", self.d_u_of_v, expected.d_u_of_v),
            ("d_v(v)", self.d_v_of_v, expected.d_v_of_v),
            ("d_v(u)", self.d_v_of_u, expected.d_v_of_u),
            ("|A_u|", self.a_u, expected.a_u),
            ("|B_u|", self.b_u, expected.b_u),
            ("|A_v|", self.a_v, expected.a_v),
            ("|B_v|", self.b_v, expected.b_v),
            ("r", self.r, expected.r),
            ("n", self.n, self.n_u + self.n_v),
            ("contradicts_threshold", self.contradicts_threshold as usize, expected.contradicts_threshold as usize),
        ];
        for (name, stored, derived) in fields {
            if stored != derived {
                return Err(WitnessError::CountMismatch(name));
            }
        }
        if self.chain != expected.chain {
            return Err(WitnessError::CountMismatch("inequality chain"));
        }
        if self.threshold != expected.threshold {
            return Err(WitnessError::CountMismatch("threshold"));
        }
        if self.b_u != self.d_u_of_v || self.b_v != self.d_v_of_u {
            return Err(WitnessError::CountMismatch("|B_s| = d_s(t)"));
        }
        if self.degree_u != self.d_u_of_u + self.d_v_of_u || self.degree_v != self.d_v_of_v + self.d_u_of_v {
            return Err(WitnessError::CountMismatch("degree split"));
        }
        for side in [Side::U, Side::V] {
            if !intersection(&cuts, side).is_empty() {
                return Err(WitnessError::ExchangeExists(side));
            }
        }
        if forest.max_out_degree() + 1 > self.r {
            return Err(WitnessError::OutDegree);
        }

        let r = self.r as i64;
        self.chain.side_u.check(r)?;
        self.chain.side_v.check(r)?;
        let chain = &self.chain;
        if chain.final_lhs != chain.side_u.combined_lhs + chain.side_v.combined_lhs
            || chain.final_rhs != chain.side_u.combined_rhs + chain.side_v.combined_rhs
            || chain.final_lhs > chain.final_rhs
        {
            return Err(WitnessError::Inequality {
                side: None,
                what: "(r - 1)(d(u) + d(v)) <= (2r - 3)n - 2(r - 2)",
            });
        }
        if r == 3 && (chain.final_lhs != 2 * (self.degree_u + self.degree_v) as i64
            || chain.final_rhs != 3 * (self.n_u + self.n_v) as i64 - 2)
        {
            return Err(WitnessError::Inequality {
                side: None,
                what: "2(d(u) + d(v)) <= 3(n_u + n_v) - 2",
            });
        }
        if self.contradicts_threshold {
            return Err(WitnessError::Inequality {
                side: None,
                what: "d(u) + d(v) below threshold",
            });
        }
        Ok(())
    }
}
