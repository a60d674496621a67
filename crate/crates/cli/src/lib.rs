//! Command-line front end for `ore-trees`.
//!
//! Exit codes: 0 found / satisfied / verified, 1 not found / unsatisfied /
//! witness emitted, 2 usage or input error. Results go to stdout,
//! diagnostics to stderr.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ore_trees::batch::{run_batch, BatchConfig, BatchSummary};
use ore_trees::condition::{check_condition, ratio_literal, ConditionReport};
use ore_trees::extremal::{extremal_gap, ExtremalParams};
use ore_trees::oracle::{count_trees, oracle_count, oracle_find, OracleError, DEFAULT_BUDGET};
use ore_trees::solver::{find_spanning_tree, ExchangeRecord, InfeasibilityWitness, SolveOutcome};
use ore_trees::{prufer, realize_tree, ArborealSequence, DegreeTree, LabelledGraph, Vertex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ore-trees", version, about = "Spanning trees with a prescribed degree sequence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Args)]
pub struct SharedArgs {
    /// Graph file: vertex count line, then `u v` edge lines.
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    /// Degree sequence literal `3,1,1,1`, or `@PATH` to read it from a file.
    #[arg(long, global = true)]
    pub seq: Option<String>,
    /// Max-degree parameter; `batch` accepts a comma-separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    pub r: Vec<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of candidate trees the oracle may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// More diagnostics on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a spanning tree of the graph with the given degree sequence.
    Solve {
        /// Include the exchange trace in JSON output.
        #[arg(long)]
        trace: bool,
    },
    /// Check the degree-sum condition.
    Check,
    /// Print the canonical tree realizing a sequence.
    Realize,
    /// Exhaustively search for a matching spanning tree.
    OracleFind,
    /// Exhaustively count matching spanning trees.
    OracleCount,
    /// Emit a tight extremal graph and its unrealizable sequence.
    Extremal {
        #[arg(long)]
        k: usize,
        /// Also check the condition, the worst-sum identity and the oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Solve and verify a seeded ensemble of condition-satisfying instances.
    Batch {
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl From<&DegreeTree> for TreeJson {
    fn from(t: &DegreeTree) -> Self {
        TreeJson {
            n: t.n(),
            edges: t.edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SolveJson {
    Found {
        tree: TreeJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<Vec<ExchangeRecord>>,
    },
    Stalled {
        witness: Box<InfeasibilityWitness>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<Vec<ExchangeRecord>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeJson {
    pub sequence: String,
    pub prufer: Vec<Vertex>,
    pub tree: TreeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFindJson {
    pub total_candidates: String,
    pub first_tree: Option<TreeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCountJson {
    pub total_candidates: String,
    pub contained_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalVerifyJson {
    pub condition: ConditionReport,
    pub worst_sum: usize,
    pub expected_worst_sum: usize,
    pub gap: String,
    pub expected_gap: String,
    /// `None` when the candidate count exceeds the budget.
    pub oracle_count: Option<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalJson {
    pub k: usize,
    pub r: usize,
    pub n: usize,
    pub graph: String,
    pub sequence: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<ExtremalVerifyJson>,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

struct Output<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, json: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
        let rendered = match self.format {
            Format::Json => serde_json::to_string_pretty(json).map_err(|e| usage(e.to_string()))? + "\n",
            Format::Text => text(),
        };
        self.out
            .write_all(rendered.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}")))
    }
}

fn load_graph(shared: &SharedArgs) -> Result<LabelledGraph, Failure> {
    let path = shared.graph.as_ref().ok_or_else(|| usage("--graph PATH is required"))?;
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    LabelledGraph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_seq(shared: &SharedArgs) -> Result<Option<ArborealSequence>, Failure> {
    let Some(raw) = shared.seq.as_deref() else {
        return Ok(None);
    };
    let literal = match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        None => raw.to_string(),
    };
    literal
        .parse::<ArborealSequence>()
        .map(Some)
        .map_err(|e| usage(format!("--seq: {e}")))
}

fn require_seq(shared: &SharedArgs) -> Result<ArborealSequence, Failure> {
    load_seq(shared)?.ok_or_else(|| usage("--seq LITERAL|@PATH is required"))
}

fn graph_and_seq(shared: &SharedArgs) -> Result<(LabelledGraph, ArborealSequence), Failure> {
    let g = load_graph(shared)?;
    let seq = require_seq(shared)?;
    if g.n() != seq.n() {
        return Err(usage(format!(
            "sequence length {} does not match graph order {}",
            seq.n(),
            g.n()
        )));
    }
    Ok((g, seq))
}

fn single_r(shared: &SharedArgs) -> Result<Option<usize>, Failure> {
    match shared.r.as_slice() {
        [] => Ok(None),
        [r] => Ok(Some(*r)),
        _ => Err(usage("--r takes a single value for this command")),
    }
}

fn witness_text(w: &InfeasibilityWitness) -> String {
    let c = &w.chain;
    let mut s = String::new();
    let _ = writeln!(s, "no exchange at foreign edge ({}, {}); witness:", w.u, w.v);
    let _ = writeln!(s, "  n_u = {}, n_v = {}, r = {}", w.n_u, w.n_v, w.r);
    let _ = writeln!(
        s,
        "  d_u(u) = {}, d_u(v) = {}, d_v(v) = {}, d_v(u) = {}",
        w.d_u_of_u, w.d_u_of_v, w.d_v_of_v, w.d_v_of_u
    );
    let _ = writeln!(s, "  |A_u| = {}, |B_u| = {}, |A_v| = {}, |B_v| = {}", w.a_u, w.b_u, w.a_v, w.b_v);
    for side in [&c.side_u, &c.side_v] {
        let _ = writeln!(
            s,
            "  side {:?}: (r-1)(d_s(s)+d_s(t)) = {} <= {} = (2r-3)n_s-(r-2)",
            side.side, side.combined_lhs, side.combined_rhs
        );
    }
    let _ = writeln!(
        s,
        "  (r-1)(d(u)+d(v)) = {} <= {} = (2r-3)n-2(r-2); d(u)+d(v) = {}, threshold {}",
        c.final_lhs,
        c.final_rhs,
        w.degree_u + w.degree_v,
        w.threshold.as_deref().unwrap_or("undefined")
    );
    s
}

fn report_text(r: &ConditionReport) -> String {
    let verdict = if r.satisfied { "satisfied" } else { "not satisfied" };
    match r.worst_pair {
        Some(p) => format!(
            "n = {}, r = {}, threshold {}: worst pair ({}, {}) with sum {}: {verdict}\n",
            r.n,
            r.r,
            ratio_literal(&r.threshold),
            p.u,
            p.v,
            p.sum
        ),
        None => format!(
            "n = {}, r = {}, threshold {}: complete graph: {verdict}\n",
            r.n,
            r.r,
            ratio_literal(&r.threshold)
        ),
    }
}

fn oracle_failure(e: OracleError) -> Failure {
    usage(e.to_string())
}

fn dispatch(cli: &Cli, out: &mut Output<'_>, err: &mut dyn Write) -> Result<i32, Failure> {
    let shared = &cli.shared;
    match &cli.command {
        Command::Solve { trace } => {
            let (g, seq) = graph_and_seq(shared)?;
            let outcome = find_spanning_tree(&g, &seq).map_err(|e| usage(e.to_string()))?;
            let trace_json = trace.then(|| outcome.trace().to_vec());
            if shared.verbose {
                let _ = writeln!(err, "{} exchanges", outcome.trace().len());
            }
            match outcome {
                SolveOutcome::Found { tree, .. } => {
                    let json = SolveJson::Found {
                        tree: TreeJson::from(&tree),
                        trace: trace_json,
                    };
                    out.emit(&json, || tree.to_text())?;
                    Ok(EXIT_OK)
                }
                SolveOutcome::Stalled { witness, .. } => {
                    let text = witness_text(&witness);
                    let json = SolveJson::Stalled {
                        witness,
                        trace: trace_json,
                    };
                    out.emit(&json, || text)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Check => {
            let g = load_graph(shared)?;
            let seq = load_seq(shared)?;
            let r = match (single_r(shared)?, &seq) {
                (Some(r), _) => r,
                (None, Some(s)) => s.max_degree(),
                (None, None) => 3,
            };
            let report = check_condition(&g, r).map_err(|e| usage(e.to_string()))?;
            out.emit(&report, || report_text(&report))?;
            Ok(if report.satisfied { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Realize => {
            let seq = require_seq(shared)?;
            let tree = realize_tree(&seq);
            let json = RealizeJson {
                sequence: seq.to_literal(),
                prufer: prufer::encode(&tree).map_err(|e| usage(e.to_string()))?,
                tree: TreeJson::from(&tree),
            };
            out.emit(&json, || tree.to_text())?;
            Ok(EXIT_OK)
        }
        Command::OracleFind => {
            let (g, seq) = graph_and_seq(shared)?;
            let found = oracle_find(&g, &seq, shared.budget).map_err(oracle_failure)?;
            let json = OracleFindJson {
                total_candidates: count_trees(&seq).to_string(),
                first_tree: found.as_ref().map(TreeJson::from),
            };
            out.emit(&json, || match &found {
                Some(t) => t.to_text(),
                None => format!("no spanning tree with sequence {seq} among {} candidates\n", json.total_candidates),
            })?;
            Ok(if found.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::OracleCount => {
            let (g, seq) = graph_and_seq(shared)?;
            let count = oracle_count(&g, &seq, shared.budget).map_err(oracle_failure)?;
            let json = OracleCountJson {
                total_candidates: count_trees(&seq).to_string(),
                contained_count: count,
            };
            out.emit(&json, || format!("{count} of {} candidate trees lie in the graph\n", json.total_candidates))?;
            Ok(if count > 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Extremal { k, verify } => {
            let r = single_r(shared)?.unwrap_or(3);
            let params = ExtremalParams::new(*k, r).map_err(|e| usage(e.to_string()))?;
            let g = params.graph();
            let seq = params.bad_sequence();
            let verification = verify
                .then(|| -> Result<ExtremalVerifyJson, Failure> {
                    let condition = check_condition(&g, r).map_err(|e| usage(e.to_string()))?;
                    let worst_sum = condition.worst_pair.map_or(0, |p| p.sum);
                    let gap = extremal_gap(*k, r).map_err(|e| usage(e.to_string()))?;
                    let expected_gap = ore_trees::Rational::new(1, r as i64 - 1);
                    let oracle = match oracle_count(&g, &seq, shared.budget) {
                        Ok(c) => Some(c),
                        Err(OracleError::BudgetExceeded { .. }) => None,
                        Err(e) => return Err(oracle_failure(e)),
                    };
                    let passed = !condition.satisfied
                        && worst_sum == params.worst_sum()
                        && gap == expected_gap
                        && oracle.is_none_or(|c| c == 0);
                    Ok(ExtremalVerifyJson {
                        condition,
                        worst_sum,
                        expected_worst_sum: params.worst_sum(),
                        gap: ratio_literal(&gap),
                        expected_gap: ratio_literal(&expected_gap),
                        oracle_count: oracle,
                        passed,
                    })
                })
                .transpose()?;
            let json = ExtremalJson {
                k: *k,
                r,
                n: params.n(),
                graph: g.to_text(),
                sequence: seq.to_literal(),
                verify: verification.clone(),
            };
            out.emit(&json, || {
                let mut s = g.to_text();
                let _ = writeln!(s, "# sequence: {seq}");
                if let Some(v) = &verification {
                    let _ = writeln!(
                        s,
                        "# verify: condition {}, worst sum {} (expected {}), gap {} (expected {}), oracle {}: {}",
                        if v.condition.satisfied { "satisfied" } else { "not satisfied" },
                        v.worst_sum,
                        v.expected_worst_sum,
                        v.gap,
                        v.expected_gap,
                        v.oracle_count.map_or("skipped (budget)".to_string(), |c| format!("{c} trees")),
                        if v.passed { "passed" } else { "FAILED" }
                    );
                }
                s
            })?;
            Ok(match verification {
                Some(v) if !v.passed => EXIT_NEGATIVE,
                _ => EXIT_OK,
            })
        }
        Command::Batch { n_min, n_max, count } => {
            let r_values = if shared.r.is_empty() { vec![3] } else { shared.r.clone() };
            if let Some(&bad) = r_values.iter().find(|&&r| r < 2 || r + 1 > *n_min) {
                return Err(usage(format!("r = {bad} needs r >= 2 and n-min >= r + 1")));
            }
            if n_min > n_max || *n_min < 4 {
                return Err(usage("need 4 <= n-min <= n-max"));
            }
            let summary = run_batch(&BatchConfig {
                n_min: *n_min,
                n_max: *n_max,
                r_values,
                instances: *count,
                seed: shared.seed,
            });
            out.emit(&summary, || batch_text(&summary))?;
            Ok(if summary.all_passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn batch_text(s: &BatchSummary) -> String {
    let mut text = format!(
        "{} instances: {} solved, {} verified, max exchanges {}, exchange bound {}\n",
        s.instances,
        s.solved,
        s.verified,
        s.max_exchanges,
        if s.exchange_bound_held { "held" } else { "VIOLATED" }
    );
    for f in &s.failures {
        let _ = writeln!(
            text,
            "  failed #{}: n = {}, r = {}, seq {}: {}",
            f.index,
            f.n,
            f.r,
            f.sequence,
            f.error.as_deref().unwrap_or("unverified")
        );
    }
    text
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut output = Output {
        format: cli.shared.format,
        out,
    };
    match dispatch(&cli, &mut output, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
