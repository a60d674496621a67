//! Ensemble runs: generate condition-satisfying graphs, sample sequences,
//! solve and verify each instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arboreal::{validate_arboreal, ArborealSequence};
use crate::graph::random_condition_graph;
use crate::solver::{find_spanning_tree, verify_tree, SolveOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Max-degree parameters, cycled by instance index.
    pub r_values: Vec<usize>,
    pub instances: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub n: usize,
    pub r: usize,
    pub sequence: String,
    pub solved: bool,
    pub verified: bool,
    pub exchanges: usize,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub instances: usize,
    pub solved: usize,
    pub verified: usize,
    pub max_exchanges: usize,
    /// Every run used at most `n - 1` exchanges.
    pub exchange_bound_held: bool,
    pub failures: Vec<InstanceResult>,
}

impl BatchSummary {
    pub fn all_passed(&self) -> bool {
        self.solved == self.instances && self.verified == self.instances && self.exchange_bound_held
    }
}

/// Degrees in `[1, r]` summing to `2(n - 1)`: start from all ones and bump
/// random positions that are still below `r`.
pub fn sample_sequence<R: Rng>(n: usize, r: usize, rng: &mut R) -> ArborealSequence {
    assert!(n >= 2 && r >= 2, "need n >= 2 and r >= 2");
    let mut degrees = vec![1i64; n];
    let mut open: Vec<usize> = (0..n).collect();
    for _ in 0..n - 2 {
        let slot = rng.gen_range(0..open.len());
        let v = open[slot];
        degrees[v] += 1;
        if degrees[v] as usize == r {
            open.swap_remove(slot);
        }
    }
    validate_arboreal(&degrees).expect("sum is 2(n - 1) by construction")
}

pub fn run_instance(index: usize, config: &BatchConfig) -> InstanceResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(index as u64));
    let n = rng.gen_range(config.n_min..=config.n_max);
    let r = config.r_values[index % config.r_values.len()];
    let mut result = InstanceResult {
        index,
        n,
        r,
        sequence: String::new(),
        solved: false,
        verified: false,
        exchanges: 0,
        error: None,
    };
    let g = match random_condition_graph(n, r, rng.gen()) {
        Ok(g) => g,
        Err(e) => {
            result.error = Some(e.to_string());
            return result;
        }
    };
    let seq = sample_sequence(n, r, &mut rng);
    result.sequence = seq.to_literal();
    match find_spanning_tree(&g, &seq) {
        Ok(SolveOutcome::Found { tree, trace }) => {
            result.solved = true;
            result.exchanges = trace.len();
            match verify_tree(&g, &tree, &seq) {
                Ok(()) => result.verified = true,
                Err(e) => result.error = Some(e.to_string()),
            }
        }
        Ok(SolveOutcome::Stalled { trace, .. }) => {
            result.exchanges = trace.len();
            result.error = Some("stalled".into());
        }
        Err(e) => result.error = Some(e.to_string()),
    }
    result
}

pub fn run_batch(config: &BatchConfig) -> BatchSummary {
    let mut summary = BatchSummary {
        instances: 0,
        solved: 0,
        verified: 0,
        max_exchanges: 0,
        exchange_bound_held: true,
        failures: Vec::new(),
    };
    if config.r_values.is_empty() || config.n_min > config.n_max {
        return summary;
    }
    for index in 0..config.instances {
        let result = run_instance(index, config);
        summary.instances += 1;
        summary.solved += result.solved as usize;
        summary.verified += result.verified as usize;
        summary.max_exchanges = summary.max_exchanges.max(result.exchanges);
        let within = result.exchanges < result.n;
        summary.exchange_bound_held &= within;
        if !(result.solved && result.verified && within) {
            summary.failures.push(result);
        }
    }
    summary
}
