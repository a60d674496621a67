//! Exit criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p ore-trees --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{all_graphs, all_sequences, random_graph};
use num_bigint::BigUint;
use ore_trees::batch::{run_batch, sample_sequence, BatchConfig};
use ore_trees::condition::{check_condition, threshold};
use ore_trees::extremal::{build_extremal, extremal_worst_sum, ExtremalParams};
use ore_trees::oracle::DEFAULT_BUDGET;
use ore_trees::solver::{InfeasibilityWitness, SolveOutcome};
use ore_trees::{
    count_trees, find_spanning_tree, oracle_count, oracle_find, prufer, realize_tree, verify_tree,
    LabelledGraph, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {name} ({detail})");
}

#[test]
fn criterion_1_tightness_identity() {
    let start = Instant::now();
    let mut ok = true;
    for k in 1..=5usize {
        let (g, _) = build_extremal(k, 3).unwrap();
        let n = 4 * k + 2;
        let worst = g.min_nonadjacent_degree_sum().unwrap().2;
        ok &= g.n() == n && worst == 6 * k + 2 && 2 * worst == 3 * n - 2;
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    report(1, "min non-adjacent sum of G_k is 6k+2 = (3n-2)/2, k = 1..5", ok, format!("{elapsed:?}"));
    assert!(ok);
}

#[test]
fn criterion_2_non_existence_on_g_k() {
    let start = Instant::now();
    let (g1, s1) = build_extremal(1, 3).unwrap();
    let (g2, s2) = build_extremal(2, 3).unwrap();
    let totals = (count_trees(&s1), count_trees(&s2));
    let counts = (
        oracle_count(&g1, &s1, DEFAULT_BUDGET).unwrap(),
        oracle_count(&g2, &s2, DEFAULT_BUDGET).unwrap(),
    );
    let elapsed = start.elapsed();
    let ok = totals == (BigUint::from(6u32), BigUint::from(2520u32))
        && counts == (0, 0)
        && elapsed < Duration::from_secs(1);
    report(
        2,
        "oracle_count(G_k, bad sequence) = 0 for k = 1, 2",
        ok,
        format!("candidates {} and {}, contained {:?}, {elapsed:?}", totals.0, totals.1, counts),
    );
    assert!(ok);
}

#[test]
fn criterion_3_guarantee_exhaustive_n5_n6() {
    let start = Instant::now();
    let mut instances = 0usize;
    let mut failures = 0usize;
    for n in [5, 6] {
        let seqs = all_sequences(n, 3);
        for g in all_graphs(n) {
            if !check_condition(&g, 3).unwrap().satisfied {
                continue;
            }
            for seq in &seqs {
                instances += 1;
                let good = match find_spanning_tree(&g, seq).unwrap() {
                    SolveOutcome::Found { tree, .. } => verify_tree(&g, &tree, seq).is_ok(),
                    SolveOutcome::Stalled { .. } => false,
                };
                failures += !good as usize;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures == 0 && instances > 0 && elapsed < Duration::from_secs(300);
    report(
        3,
        "exhaustive n = 5, 6 under the r = 3 threshold",
        ok,
        format!("{instances} instances, {failures} failures, {elapsed:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_4_randomized_guarantee() {
    let start = Instant::now();
    let summary = run_batch(&BatchConfig {
        n_min: 10,
        n_max: 60,
        r_values: vec![3, 4, 5],
        instances: 1000,
        seed: 2024,
    });
    let elapsed = start.elapsed();
    let ok = summary.instances == 1000
        && summary.solved == 1000
        && summary.verified == 1000
        && summary.exchange_bound_held
        && elapsed < Duration::from_secs(60);
    report(
        4,
        "1000 random condition graphs, n in [10, 60], r in {3, 4, 5}",
        ok,
        format!(
            "solved {}/{}, verified {}, max exchanges {}, {elapsed:?}",
            summary.solved, summary.instances, summary.verified, summary.max_exchanges
        ),
    );
    assert!(ok, "{:?}", summary.failures);
}

fn witness_is_sound(w: &InfeasibilityWitness, g: &LabelledGraph) -> bool {
    if w.validate(g).is_err() {
        return false;
    }
    // Independent re-check of the headline inequalities from the stored numbers.
    let r = w.r as i64;
    let per_side = |a: usize, b: usize, own: usize, n_s: usize| {
        (r - 1) * a as i64 >= own as i64 && a + b <= n_s && own < n_s
    };
    let sides = per_side(w.a_u, w.b_u, w.d_u_of_u, w.n_u) && per_side(w.a_v, w.b_v, w.d_v_of_v, w.n_v);
    let total = (w.degree_u + w.degree_v) as i64;
    let n = (w.n_u + w.n_v) as i64;
    let chain = (r - 1) * total <= (2 * r - 3) * n - 2 * (r - 2);
    let r3 = r != 3 || 2 * total <= 3 * n - 2;
    sides && chain && r3
}

#[test]
fn criterion_5_witness_soundness() {
    let mut witnesses = 0usize;
    let mut invalid = 0usize;
    let mut r3_witnesses = 0usize;
    let mut check = |g: &LabelledGraph, out: SolveOutcome| {
        if let SolveOutcome::Stalled { witness, .. } = out {
            witnesses += 1;
            r3_witnesses += (witness.r == 3) as usize;
            invalid += !witness_is_sound(&witness, g) as usize;
        }
    };
    for n in 4..=5 {
        let seqs = all_sequences(n, 3);
        for g in all_graphs(n) {
            for seq in &seqs {
                check(&g, find_spanning_tree(&g, seq).unwrap());
            }
        }
    }
    for k in 1..=3 {
        for r in 3..=5 {
            let (g, seq) = build_extremal(k, r).unwrap();
            check(&g, find_spanning_tree(&g, &seq).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..2000 {
        let n = rng.gen_range(4..=20);
        let g = random_graph(n, rng.gen_range(0.2..0.95), &mut rng);
        let cap = rng.gen_range(2..=5);
        let seq = sample_sequence(n, cap, &mut rng);
        check(&g, find_spanning_tree(&g, &seq).unwrap());
    }
    let ok = invalid == 0 && witnesses > 0 && r3_witnesses > 0;
    report(
        5,
        "every emitted witness re-validates (including 2(d(u)+d(v)) <= 3n-2 at r = 3)",
        ok,
        format!("{witnesses} witnesses ({r3_witnesses} at r = 3), {invalid} invalid"),
    );
    assert!(ok);
}

#[test]
fn criterion_6_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut solved = 0;
    let mut unconfirmed = 0;
    let mut stalls_on_feasible = 0;
    let mut condition_instances = 0;
    let mut condition_stalls = 0;
    for i in 0..500 {
        let n = rng.gen_range(4..=7);
        // Sweep density so that part of the sample meets the threshold.
        let p = 0.3 + 0.7 * (i as f64 / 500.0);
        let g = random_graph(n, p, &mut rng);
        let seq = sample_sequence(n, 3, &mut rng);
        let found = find_spanning_tree(&g, &seq).unwrap().is_found();
        let feasible = oracle_find(&g, &seq, DEFAULT_BUDGET).unwrap().is_some();
        let satisfied = check_condition(&g, 3).unwrap().satisfied;
        condition_instances += satisfied as usize;
        if found {
            solved += 1;
            unconfirmed += !feasible as usize;
        } else if feasible {
            stalls_on_feasible += 1;
            condition_stalls += satisfied as usize;
            println!("stall on feasible instance: seq {seq}, graph {:?}", g.edges().collect::<Vec<_>>());
        }
    }
    let ok = unconfirmed == 0 && condition_stalls == 0 && condition_instances > 0;
    report(
        6,
        "solver vs oracle on 500 random pairs, n <= 7",
        ok,
        format!(
            "solved {solved}, unconfirmed {unconfirmed}, stalls on feasible {stalls_on_feasible}, \
             condition-satisfied {condition_instances} with {condition_stalls} stalls"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_prufer_correctness() {
    let mut exhaustive = 0usize;
    let mut bad = 0usize;
    for n in 2..=6usize {
        let len = n - 2;
        let total = n.pow(len as u32);
        for code in 0..total {
            let mut word = Vec::with_capacity(len);
            let mut c = code;
            for _ in 0..len {
                word.push(c % n);
                c /= n;
            }
            let t = prufer::decode(&word, n).unwrap();
            let degrees_ok = (0..n).all(|v| t.degree(v) == 1 + word.iter().filter(|&&x| x == v).count());
            bad += !(prufer::encode(&t).unwrap() == word && t.is_tree() && degrees_ok) as usize;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=50);
        let word: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let t = prufer::decode(&word, n).unwrap();
        bad += (prufer::encode(&t).unwrap() != word) as usize;
        let seq = sample_sequence(n, (n - 1).max(2), &mut rng);
        bad += (realize_tree(&seq).degrees() != seq.degrees()) as usize;
    }
    let ok = bad == 0 && exhaustive == 1 + 3 + 16 + 125 + 1296;
    report(
        7,
        "encode(decode(w)) = w exhaustively for n <= 6 and on 10^4 random words",
        ok,
        format!("{exhaustive} exhaustive words, {bad} mismatches"),
    );
    assert!(ok);
}

#[test]
fn criterion_8_threshold_gap() {
    let mut ok = true;
    let mut checked = 0;
    for k in 1..=5 {
        for r in 3..=5 {
            let n = ExtremalParams::new(k, r).unwrap().n();
            let gap = threshold::<i64>(n, r).unwrap()
                - Rational::from_integer(extremal_worst_sum(k, r).unwrap() as i64);
            ok &= gap == Rational::new(1, r as i64 - 1);
            checked += 1;
        }
    }
    report(8, "threshold(n, r) - worst sum = 1/(r-1) exactly, k <= 5, r in {3,4,5}", ok, format!("{checked} cases"));
    assert!(ok);
}
