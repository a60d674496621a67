//! Splitting a tree at an edge and orienting both halves away from their
//! roots, then reading off the cut sets that drive the exchange.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Exchange, SolverError};
use crate::graph::{LabelledGraph, Vertex};
use crate::tree::DegreeTree;

/// Which half of a split tree a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    U,
    V,
}

/// `T - uv` with both components oriented outward from `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    pub removed_edge: (Vertex, Vertex),
    pub side: Vec<Side>,
    /// `None` exactly at the two roots.
    pub parent: Vec<Option<Vertex>>,
    /// Sorted child lists.
    pub children: Vec<Vec<Vertex>>,
    pub n_u: usize,
    pub n_v: usize,
}

impl RootedForest {
    pub fn root(&self, side: Side) -> Vertex {
        match side {
            Side::U => self.removed_edge.0,
            Side::V => self.removed_edge.1,
        }
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn size(&self, side: Side) -> usize {
        match side {
            Side::U => self.n_u,
            Side::V => self.n_v,
        }
    }

    /// Largest child count over all vertices.
    pub fn max_out_degree(&self) -> usize {
        self.children.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Removes `(u, v)` from `t` and orients each component away from its root
/// by breadth-first search.
pub fn orient_forest(t: &DegreeTree, u: Vertex, v: Vertex) -> Result<RootedForest, SolverError> {
    if !t.has_edge(u, v) {
        return Err(SolverError::NotATreeEdge(u, v));
    }
    let n = t.n();
    let mut side = vec![None; n];
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut sizes = [0usize; 2];
    for (slot, (root, label)) in [(u, Side::U), (v, Side::V)].into_iter().enumerate() {
        side[root] = Some(label);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            sizes[slot] += 1;
            for &y in t.neighbors(x) {
                if side[y].is_some() || (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                side[y] = Some(label);
                parent[y] = Some(x);
                children[x].push(y);
                queue.push_back(y);
            }
        }
    }
    let side = side
        .into_iter()
        .enumerate()
        .map(|(x, s)| s.ok_or(SolverError::Unreachable(x)))
        .collect::<Result<Vec<_>, _>>()?;
    for list in &mut children {
        list.sort_unstable();
    }
    Ok(RootedForest {
        removed_edge: (u, v),
        side,
        parent,
        children,
        n_u: sizes[0],
        n_v: sizes[1],
    })
}

/// The sets `A_s`, `B_s` for both sides and the local degree counts.
///
/// `a_u` holds the parents of `u`'s graph neighbors inside `T_u`; `b_u`
/// holds the vertices of `T_u` adjacent to `v`. The `v` side mirrors this.
/// `d_u_of_v` counts the graph neighbors of `v` inside `T_u`, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutAnalysis {
    pub a_u: Vec<Vertex>,
    pub b_u: Vec<Vertex>,
    pub a_v: Vec<Vertex>,
    pub b_v: Vec<Vertex>,
    pub d_u_of_u: usize,
    pub d_u_of_v: usize,
    pub d_v_of_v: usize,
    pub d_v_of_u: usize,
    pub candidate: Option<Exchange>,
}

impl CutAnalysis {
    pub fn a(&self, side: Side) -> &[Vertex] {
        match side {
            Side::U => &self.a_u,
            Side::V => &self.a_v,
        }
    }

    pub fn b(&self, side: Side) -> &[Vertex] {
        match side {
            Side::U => &self.b_u,
            Side::V => &self.b_v,
        }
    }

    /// Graph neighbors of the side's own root inside its component.
    pub fn own_root_count(&self, side: Side) -> usize {
        match side {
            Side::U => self.d_u_of_u,
            Side::V => self.d_v_of_v,
        }
    }

    /// Graph neighbors of the other root inside this side's component.
    pub fn other_root_count(&self, side: Side) -> usize {
        match side {
            Side::U => self.d_u_of_v,
            Side::V => self.d_v_of_u,
        }
    }
}

fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn intersection(c: &CutAnalysis, side: Side) -> Vec<Vertex> {
    sorted_intersection(c.a(side), c.b(side))
}

pub fn compute_cut_sets(g: &LabelledGraph, f: &RootedForest) -> CutAnalysis {
    let (u, v) = f.removed_edge;
    let mut a_u = Vec::new();
    let mut b_u = Vec::new();
    let mut a_v = Vec::new();
    let mut b_v = Vec::new();
    for &y in g.neighbors(u) {
        match f.side[y] {
            Side::U => a_u.push(f.parent[y].expect("u has no loop, so y is not a root")),
            Side::V => b_v.push(y),
        }
    }
    for &x in g.neighbors(v) {
        match f.side[x] {
            Side::U => b_u.push(x),
            Side::V => a_v.push(f.parent[x].expect("v has no loop, so x is not a root")),
        }
    }
    let d_u_of_u = a_u.len();
    let d_v_of_u = b_v.len();
    let d_u_of_v = b_u.len();
    let d_v_of_v = a_v.len();
    for set in [&mut a_u, &mut b_u, &mut a_v, &mut b_v] {
        set.sort_unstable();
        set.dedup();
    }
    let mut analysis = CutAnalysis {
        a_u,
        b_u,
        a_v,
        b_v,
        d_u_of_u,
        d_u_of_v,
        d_v_of_v,
        d_v_of_u,
        candidate: None,
    };
    analysis.candidate = [Side::U, Side::V].into_iter().find_map(|side| {
        let root = f.root(side);
        let other = match side {
            Side::U => v,
            Side::V => u,
        };
        let w = *intersection(&analysis, side).first()?;
        let y = *f.children[w].iter().find(|&&y| g.has_edge(root, y))?;
        Some(Exchange {
            side,
            drop_foreign: (u, v),
            drop_tree: (w, y),
            add_1: (root, y),
            add_2: (other, w),
        })
    });
    analysis
}
