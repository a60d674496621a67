//! Tight families: the complete graph on `X ∪ Y ∪ Z` with every `X`–`Y`
//! edge removed, where `|X| = |Y| = k` and `|Z| = 2k(r - 2) + 2`.
//!
//! Degree `r` on every `x` and `y` with leaves on `Z` is arboreal, yet any
//! such tree minus its `Z` leaves would span the disconnected `G[X ∪ Y]`.

use num_rational::Ratio;
use thiserror::Error;

use crate::arboreal::{validate_arboreal, ArborealSequence};
use crate::graph::{LabelledGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("r must be at least 3, got {0}")]
    RTooSmall(usize),
}

/// Layout: `x_i` at `i`, `y_i` at `k + i`, `z_j` at `2k + j` (all 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub k: usize,
    pub r: usize,
}

impl ExtremalParams {
    pub fn new(k: usize, r: usize) -> Result<Self, ExtremalError> {
        if k < 1 {
            return Err(ExtremalError::KTooSmall);
        }
        if r < 3 {
            return Err(ExtremalError::RTooSmall(r));
        }
        Ok(ExtremalParams { k, r })
    }

    pub fn z_count(&self) -> usize {
        2 * self.k * (self.r - 2) + 2
    }

    pub fn n(&self) -> usize {
        2 * self.k * (self.r - 1) + 2
    }

    pub fn x(&self, i: usize) -> Vertex {
        i
    }

    pub fn y(&self, i: usize) -> Vertex {
        self.k + i
    }

    pub fn z(&self, j: usize) -> Vertex {
        2 * self.k + j
    }

    pub fn xs(&self) -> impl Iterator<Item = Vertex> {
        0..self.k
    }

    pub fn ys(&self) -> impl Iterator<Item = Vertex> {
        self.k..2 * self.k
    }

    pub fn is_x(&self, v: Vertex) -> bool {
        v < self.k
    }

    pub fn is_y(&self, v: Vertex) -> bool {
        (self.k..2 * self.k).contains(&v)
    }

    pub fn graph(&self) -> LabelledGraph {
        let n = self.n();
        let edges = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !(self.is_x(a) && self.is_y(b)));
        LabelledGraph::from_edges(n, edges).expect("layout indices are in range")
    }

    /// `r` on `X ∪ Y`, `1` on `Z`.
    pub fn bad_sequence(&self) -> ArborealSequence {
        let degrees: Vec<i64> = (0..self.n())
            .map(|v| if v < 2 * self.k { self.r as i64 } else { 1 })
            .collect();
        validate_arboreal(&degrees).expect("sum is 2(n - 1) by construction")
    }

    /// `2((k - 1) + |Z|)`, the degree sum of every non-adjacent pair.
    pub fn worst_sum(&self) -> usize {
        2 * ((self.k - 1) + self.z_count())
    }
}

pub fn build_extremal(k: usize, r: usize) -> Result<(LabelledGraph, ArborealSequence), ExtremalError> {
    let params = ExtremalParams::new(k, r)?;
    Ok((params.graph(), params.bad_sequence()))
}

/// Closed form `2k(2r - 3) + 2`.
pub fn extremal_worst_sum(k: usize, r: usize) -> Result<u64, ExtremalError> {
    ExtremalParams::new(k, r)?;
    let (k, r) = (k as u64, r as u64);
    Ok(2 * k * (2 * r - 3) + 2)
}

/// Amount by which the threshold exceeds the worst sum; `1 / (r - 1)`.
pub fn extremal_gap(k: usize, r: usize) -> Result<Ratio<i64>, ExtremalError> {
    let params = ExtremalParams::new(k, r)?;
    let bound = crate::condition::threshold::<i64>(params.n(), r).expect("n >= r + 1 for k >= 1");
    Ok(bound - Ratio::from_integer(extremal_worst_sum(k, r)? as i64))
}
