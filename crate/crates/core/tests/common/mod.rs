#![allow(dead_code)]

use ore_trees::{validate_arboreal, ArborealSequence, LabelledGraph};
use rand::Rng;

/// Every labelled graph on `n` vertices, by bitmask over the pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = LabelledGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        LabelledGraph::from_edges(n, edges).unwrap()
    })
}

/// Every arboreal sequence of length `n` with entries at most `cap`.
pub fn all_sequences(n: usize, cap: usize) -> Vec<ArborealSequence> {
    fn extend(prefix: &mut Vec<i64>, n: usize, cap: i64, remaining: i64, out: &mut Vec<ArborealSequence>) {
        let slots = (n - prefix.len()) as i64;
        if slots == 0 {
            if remaining == 0 {
                out.push(validate_arboreal(prefix).unwrap());
            }
            return;
        }
        // Each remaining slot takes between 1 and cap.
        for d in 1..=cap {
            let rest = remaining - d;
            if rest < slots - 1 || rest > (slots - 1) * cap {
                continue;
            }
            prefix.push(d);
            extend(prefix, n, cap, rest, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, cap as i64, 2 * (n as i64 - 1), &mut out);
    out
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> LabelledGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    LabelledGraph::from_edges(n, edges).unwrap()
}

/// Brute-force minimum over non-adjacent pairs, independent of the library scan.
pub fn brute_min_pair_sum(g: &LabelledGraph) -> Option<usize> {
    let n = g.n();
    let mut best = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.neighbors(u).contains(&v) {
                let s = g.neighbors(u).len() + g.neighbors(v).len();
                best = Some(best.map_or(s, |b: usize| b.min(s)));
            }
        }
    }
    best
}
