//! Command-line interface.
//!
//! Each command turns parsed graphs into a [`CommandOutcome`]: JSON lines,
//! human-readable lines, and an exit code. [`run`] does the IO, so tests can
//! drive it with in-memory streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use kchordal_core::chordality::long_induced_cycle;
use kchordal_core::oracle::{find_independence_witnesses, KSelection, MAX_ENUMERATION_ORDER};
use kchordal_core::separators::{enumerate_minimal_separators, find_separator_violation};
use kchordal_core::simplicial::{is_permutation, k_simplicial_ordering, verify_ordering, EliminationOutcome};
use kchordal_core::{chordality, Graph};
use serde_json::Value;
use thiserror::Error;

use crate::formats::{encode_graph6, read_graphs, Format, InputError};
use crate::report::{
    to_line, CheckReport, ChordalityReport, EquivalenceLine, OrderingReport, SeparatorsReport, SummaryLine,
    VerifyReport, WitnessLine, WitnessReport,
};
use crate::sweep::{par_sweep, Corpus};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kchordal",
    version,
    about = "Recognize k-chordal graphs and certify the answer"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of a longest induced cycle, with a witness.
    Chordality {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide whether every induced cycle has length at most k.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_k)]
        k: usize,
    },
    /// Build a k-simplicial elimination ordering, or show where elimination stops.
    Ordering {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_k)]
        k: usize,
    },
    /// Check a given elimination ordering.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_k)]
        k: usize,
        /// JSON array, JSON object with an "order" field, `ordering --json`
        /// output, or whitespace-separated integers.
        #[arg(long, value_name = "FILE")]
        ordering: PathBuf,
    },
    /// List minimal separators and test the path-length condition.
    Separators {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = parse_k)]
        k: usize,
    },
    /// Cross-check the three characterizations over a graph corpus.
    Sweep {
        /// Every labeled graph up to this order.
        #[arg(long, conflicts_with_all = ["n", "p", "count"])]
        max_n: Option<usize>,
        /// Order of random graphs.
        #[arg(long, requires_all = ["p", "count"])]
        n: Option<usize>,
        #[arg(long, value_parser = parse_probability)]
        p: Option<f64>,
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated values of k; defaults to 3..=n for each graph.
        #[arg(long, value_delimiter = ',', value_parser = parse_k)]
        k: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search small graphs for vertices satisfying exactly one of C1, C2.
    Witness {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Comma-separated values of k; defaults to 3..=max-n.
        #[arg(long, value_delimiter = ',', value_parser = parse_k)]
        k: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Emit G(n, p) samples as graph6 lines; sample i uses seed + i.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_probability)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: PathBuf,
    #[arg(long, default_value = "auto")]
    pub format: Format,
    /// Emit one JSON object per graph on standard output.
    #[arg(long)]
    pub json: bool,
}

fn parse_k(s: &str) -> Result<usize, String> {
    let k: usize = s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if k < 3 {
        return Err(format!("k must be at least 3, got {k}"));
    }
    Ok(k)
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("p must lie in [0, 1], got {p}"));
    }
    Ok(p)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("ordering file: {0}")]
    Ordering(String),
    #[error("{0}")]
    Usage(String),
}

/// Result of one command, before any IO.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    /// Compact JSON documents, one per line.
    pub lines: Vec<String>,
    pub human: Vec<String>,
    /// Whether `lines` or `human` goes to standard output.
    pub json: bool,
}

impl CommandOutcome {
    fn new(json: bool) -> Self {
        CommandOutcome {
            json,
            ..Self::default()
        }
    }

    fn fail_if(&mut self, failed: bool) {
        if failed {
            self.exit_code = EXIT_FAILS;
        }
    }
}

/// Reads graph sources on demand.
pub trait Source {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError>;
}

struct StdSource<'a> {
    stdin: &'a mut dyn Read,
}

impl Source for StdSource<'_> {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError> {
        let io = |source| CliError::Io {
            path: path.display().to_string(),
            source,
        };
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(io)
        }
    }
}

fn load(src: &mut dyn Source, input: &InputArgs) -> Result<Vec<Graph>, CliError> {
    let text = src.read(&input.input)?;
    Ok(read_graphs(&text, input.format)?)
}

fn join(vs: impl IntoIterator<Item = usize>, sep: &str) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

/// Executes an already parsed command.
pub fn execute(command: &Command, src: &mut dyn Source) -> Result<CommandOutcome, CliError> {
    match command {
        Command::Chordality { input } => cmd_chordality(&load(src, input)?, input.json),
        Command::Check { input, k } => cmd_check(&load(src, input)?, *k, input.json),
        Command::Ordering { input, k } => cmd_ordering(&load(src, input)?, *k, input.json),
        Command::Verify { input, k, ordering } => {
            let graphs = load(src, input)?;
            let orders = parse_orderings(&src.read(ordering)?)?;
            cmd_verify(&graphs, *k, &orders, input.json)
        }
        Command::Separators { input, k } => cmd_separators(&load(src, input)?, *k, input.json),
        Command::Sweep {
            max_n,
            n,
            p,
            count,
            seed,
            k,
            json,
        } => {
            let corpus = match (max_n, n, p, count) {
                (Some(max_n), None, None, None) => Corpus::Exhaustive { max_n: *max_n },
                (None, Some(n), Some(p), Some(count)) => Corpus::Random {
                    n: *n,
                    p: *p,
                    count: *count,
                    seed: *seed,
                },
                _ => return Err(CliError::Usage("sweep needs --max-n, or --n, --p and --count".into())),
            };
            cmd_sweep(&corpus, k, *json)
        }
        Command::Witness { max_n, k, json } => cmd_witness(*max_n, k, *json),
        Command::Gen { n, p, seed, count } => Ok(cmd_gen(*n, *p, *seed, *count)),
    }
}

pub fn cmd_chordality(graphs: &[Graph], json: bool) -> Result<CommandOutcome, CliError> {
    let mut out = CommandOutcome::new(json);
    for g in graphs {
        let r = chordality(g);
        let id = encode_graph6(g);
        out.human.push(match &r.witness {
            Some(c) => format!(
                "{id}: chordality {} (induced cycle {})",
                r.value,
                join(c.vertices().iter().copied(), "-")
            ),
            None => format!("{id}: chordality 0 (acyclic)"),
        });
        out.lines.push(to_line(&ChordalityReport {
            graph: id,
            chordality: r.value,
            witness: r.witness,
        }));
    }
    Ok(out)
}

pub fn cmd_check(graphs: &[Graph], k: usize, json: bool) -> Result<CommandOutcome, CliError> {
    let mut out = CommandOutcome::new(json);
    for g in graphs {
        let witness = long_induced_cycle(g, k);
        let id = encode_graph6(g);
        out.fail_if(witness.is_some());
        out.human.push(match &witness {
            None => format!("{id}: {k}-chordal"),
            Some(c) => format!(
                "{id}: not {k}-chordal (induced cycle of length {}: {})",
                c.len(),
                join(c.vertices().iter().copied(), "-")
            ),
        });
        out.lines.push(to_line(&CheckReport {
            graph: id,
            k,
            k_chordal: witness.is_none(),
            witness,
        }));
    }
    Ok(out)
}

pub fn cmd_ordering(graphs: &[Graph], k: usize, json: bool) -> Result<CommandOutcome, CliError> {
    let mut out = CommandOutcome::new(json);
    for g in graphs {
        let id = encode_graph6(g);
        let (certificate, failure) = match k_simplicial_ordering(g, k) {
            EliminationOutcome::Certificate(c) => {
                out.human.push(format!(
                    "{id}: {k}-simplicial ordering {}",
                    join(c.order.iter().copied(), " ")
                ));
                (Some(c), None)
            }
            EliminationOutcome::Stuck(f) => {
                out.fail_if(true);
                out.human.push(format!(
                    "{id}: no {k}-simplicial ordering; after eliminating [{}] no vertex of {{{}}} is {k}-simplicial",
                    join(f.eliminated.iter().copied(), ", "),
                    join(f.residual.iter(), ", ")
                ));
                (None, Some(f))
            }
        };
        out.lines.push(to_line(&OrderingReport {
            graph: id,
            k,
            certificate,
            failure,
        }));
    }
    Ok(out)
}

pub fn cmd_verify(graphs: &[Graph], k: usize, orders: &[Vec<usize>], json: bool) -> Result<CommandOutcome, CliError> {
    if orders.len() != 1 && orders.len() != graphs.len() {
        return Err(CliError::Ordering(format!(
            "{} orderings for {} graphs; give one per graph or a single ordering",
            orders.len(),
            graphs.len()
        )));
    }
    let mut out = CommandOutcome::new(json);
    for (i, g) in graphs.iter().enumerate() {
        let order = &orders[if orders.len() == 1 { 0 } else { i }];
        if !is_permutation(order, g.n()) {
            return Err(CliError::Ordering(format!(
                "graph {}: [{}] is not a permutation of 0..{}",
                i + 1,
                join(order.iter().copied(), ", "),
                g.n()
            )));
        }
        let id = encode_graph6(g);
        let rejected = verify_ordering(g, order, k).err();
        out.fail_if(rejected.is_some());
        out.human.push(match &rejected {
            None => format!("{id}: valid {k}-simplicial ordering"),
            Some(r) => format!(
                "{id}: rejected at position {}: vertex {} fails {}",
                r.position,
                r.verdict.vertex,
                match (r.verdict.c1, r.verdict.c2) {
                    (false, false) => "C1 and C2",
                    (false, true) => "C1",
                    _ => "C2",
                }
            ),
        });
        out.lines.push(to_line(&VerifyReport {
            graph: id,
            k,
            order: order.clone(),
            valid: rejected.is_none(),
            rejected,
        }));
    }
    Ok(out)
}

pub fn cmd_separators(graphs: &[Graph], k: usize, json: bool) -> Result<CommandOutcome, CliError> {
    let mut out = CommandOutcome::new(json);
    for g in graphs {
        let id = encode_graph6(g);
        let separators: Vec<_> = enumerate_minimal_separators(g).collect();
        let violation = find_separator_violation(g, k);
        out.fail_if(violation.is_some());
        let mut line = format!("{id}: {} minimal separators", separators.len());
        match &violation {
            None => {
                let _ = write!(line, ", none violates the bound for k={k}");
            }
            Some(v) => {
                let _ = write!(
                    line,
                    "; {{{}}} violates the bound for k={k}: {}-{} paths of lengths {} and {} (total {})",
                    join(v.s.iter(), ", "),
                    v.x,
                    v.y,
                    v.path_i.len(),
                    v.path_j.len(),
                    v.total_length()
                );
            }
        }
        out.human.push(line);
        out.lines.push(to_line(&SeparatorsReport {
            graph: id,
            k,
            separators,
            cycle: violation.as_ref().map(|v| v.cycle()),
            violation,
        }));
    }
    Ok(out)
}

pub fn cmd_sweep(corpus: &Corpus, ks: &[usize], json: bool) -> Result<CommandOutcome, CliError> {
    let selection = if ks.is_empty() {
        KSelection::UpToOrder
    } else {
        KSelection::Fixed(ks.to_vec())
    };
    let summary = par_sweep(corpus, &selection).map_err(|e| {
        CliError::Usage(format!(
            "exhaustive sweeps are limited to {MAX_ENUMERATION_ORDER} vertices, got {}",
            e.requested
        ))
    })?;
    let mut out = CommandOutcome::new(json);
    for f in &summary.failures {
        out.lines.push(to_line(&EquivalenceLine::from(f)));
        out.human.push(format!(
            "disagreement: {} k={} chordality:{} ordering:{} separators:{}",
            encode_graph6(&f.graph),
            f.k,
            f.verdict_i,
            f.verdict_ii,
            f.verdict_iii
        ));
    }
    out.lines.push(to_line(&SummaryLine::from(&summary)));
    out.human.push(format!(
        "{} graphs, {} checks, {} disagreements",
        summary.graphs,
        summary.checks,
        summary.disagreements()
    ));
    for t in &summary.per_k {
        out.human.push(format!(
            "  k={:<2} checks {:>8}  k-chordal {:>8}  ordering {:>8}  separators {:>8}",
            t.k, t.checks, t.holds_i, t.holds_ii, t.holds_iii
        ));
    }
    out.fail_if(summary.disagreements() > 0);
    Ok(out)
}

pub fn cmd_witness(max_n: usize, ks: &[usize], json: bool) -> Result<CommandOutcome, CliError> {
    let ks: Vec<usize> = if ks.is_empty() {
        (3..=max_n.max(3)).collect()
    } else {
        ks.to_vec()
    };
    let found = find_independence_witnesses(max_n, &ks).map_err(|e| {
        CliError::Usage(format!(
            "witness search is limited to {MAX_ENUMERATION_ORDER} vertices, got {}",
            e.requested
        ))
    })?;
    let mut out = CommandOutcome::new(json);
    let report = WitnessReport {
        max_n,
        ks,
        c1_not_c2: found.c1_not_c2.as_ref().map(WitnessLine::from),
        c2_not_c1: found.c2_not_c1.as_ref().map(WitnessLine::from),
    };
    for (label, w) in [
        ("C1 without C2", &report.c1_not_c2),
        ("C2 without C1", &report.c2_not_c1),
    ] {
        out.human.push(match w {
            Some(w) => format!(
                "{label}: vertex {} of {} (edges {}) at k={}",
                w.vertex,
                w.graph,
                w.edges
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                w.k
            ),
            None => format!("{label}: none up to {max_n} vertices"),
        });
    }
    out.fail_if(report.c1_not_c2.is_none() || report.c2_not_c1.is_none());
    out.lines.push(to_line(&report));
    Ok(out)
}

pub fn cmd_gen(n: usize, p: f64, seed: u64, count: u64) -> CommandOutcome {
    let corpus = Corpus::Random { n, p, count, seed };
    let lines: Vec<String> = (0..count).map(|i| encode_graph6(&corpus.graph(i))).collect();
    CommandOutcome {
        exit_code: EXIT_HOLDS,
        human: lines,
        ..CommandOutcome::default()
    }
}

/// Reads orderings: a JSON document or JSON lines (arrays, objects with an
/// `order` field, or `ordering --json` reports), or plain integers.
pub fn parse_orderings(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    if let Ok(value) = serde_json::from_str::<Value>(text) {
        return match value {
            Value::Array(ref items) if items.iter().all(|v| !v.is_number()) => {
                items.iter().map(order_from_json).collect()
            }
            v => Ok(vec![order_from_json(&v)?]),
        };
    }
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.iter().all(|l| l.starts_with(['[', '{'])) && !lines.is_empty() {
        return lines
            .iter()
            .map(|l| {
                let v: Value = serde_json::from_str(l).map_err(|e| CliError::Ordering(e.to_string()))?;
                order_from_json(&v)
            })
            .collect();
    }
    let order = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Ordering(format!("{t:?} is not a vertex index")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    if order.is_empty() {
        return Err(CliError::Ordering("no ordering given".into()));
    }
    Ok(vec![order])
}

fn order_from_json(v: &Value) -> Result<Vec<usize>, CliError> {
    let array = match v {
        Value::Array(_) => v,
        Value::Object(map) => match (map.get("order"), map.get("certificate")) {
            (Some(order), _) => order,
            (None, Some(Value::Object(c))) if c.contains_key("order") => &c["order"],
            _ => {
                return Err(CliError::Ordering(
                    "object has no \"order\" or \"certificate\" field".into(),
                ))
            }
        },
        _ => return Err(CliError::Ordering("expected an array or object".into())),
    };
    serde_json::from_value(array.clone()).map_err(|e| CliError::Ordering(e.to_string()))
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { EXIT_USAGE };
        }
    };
    let mut src = StdSource { stdin };
    let outcome = match execute(&cli.command, &mut src) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "kchordal: {e}");
            return EXIT_USAGE;
        }
    };
    let (primary, secondary) = if outcome.json {
        (&outcome.lines, &outcome.human)
    } else {
        (&outcome.human, &Vec::new())
    };
    let result = primary
        .iter()
        .try_for_each(|l| writeln!(stdout, "{l}"))
        .and_then(|_| stdout.flush());
    for l in secondary {
        let _ = writeln!(stderr, "{l}");
    }
    match result {
        Ok(()) => outcome.exit_code,
        Err(e) => {
            let _ = writeln!(stderr, "kchordal: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("kchordal").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chordality_of_c5_edge_list() {
        let (code, out, err) = run_str(&["chordality", "--json"], "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        assert_eq!(code, 0);
        assert_eq!(out, "{\"graph\":\"Dhc\",\"chordality\":5,\"witness\":[0,1,2,3,4]}\n");
        assert!(err.contains("chordality 5"));
    }

    #[test]
    fn tree_has_no_witness() {
        let (code, out, _) = run_str(&["chordality", "--json"], "4\n0 1\n1 2\n1 3\n");
        assert_eq!(code, 0);
        assert!(out.contains("\"chordality\":0") && !out.contains("witness"));
    }

    #[test]
    fn usage_and_input_errors_exit_2() {
        assert_eq!(run_str(&["chordality"], "3\n0 1\nx y\n").0, 2);
        assert_eq!(run_str(&["check"], "Dhc\n").0, 2);
        assert_eq!(run_str(&["check", "--k", "2"], "Dhc\n").0, 2);
        assert_eq!(run_str(&["bogus"], "").0, 2);
        assert_eq!(run_str(&["sweep", "--max-n", "9"], "").0, 2);
        assert_eq!(run_str(&["--help"], "").0, 0);
    }

    #[test]
    fn check_exit_codes() {
        assert_eq!(run_str(&["check", "--k", "5"], "Dhc\n").0, 0);
        let (code, out, _) = run_str(&["check", "--k", "4", "--json"], "Dhc\n");
        assert_eq!(code, 1);
        assert!(out.contains("\"witness\":[0,1,2,3,4]"));
    }

    #[test]
    fn ordering_examples() {
        let (code, out, _) = run_str(&["ordering", "--k", "3", "--json"], "Bw\n");
        assert_eq!(code, 0);
        assert!(out.contains("\"order\":[0,1,2]"), "{out}");
        let (code, out, _) = run_str(&["ordering", "--k", "4", "--json"], "Dhc\n");
        assert_eq!(code, 1);
        assert!(out.contains("\"failure\""));
        assert_eq!(run_str(&["ordering", "--k", "5"], "Dhc\n").0, 0);
    }

    #[test]
    fn ordering_file_shapes() {
        assert_eq!(parse_orderings("[2, 0, 1]").unwrap(), [vec![2, 0, 1]]);
        assert_eq!(parse_orderings("2 0 1\n").unwrap(), [vec![2, 0, 1]]);
        assert_eq!(parse_orderings("{\"order\":[1,0]}").unwrap(), [vec![1, 0]]);
        assert_eq!(parse_orderings("[[0,1],[1,0]]").unwrap(), [vec![0, 1], vec![1, 0]]);
        assert_eq!(
            parse_orderings("{\"certificate\":{\"order\":[0]}}\n{\"order\":[1,0]}\n").unwrap(),
            [vec![0], vec![1, 0]]
        );
        assert!(parse_orderings("{\"failure\":{}}").is_err());
        assert!(parse_orderings("").is_err());
    }

    #[test]
    fn verify_rejects_bad_step() {
        let c5 = [Graph::cycle(5)];
        let ok = cmd_verify(&c5, 5, &[vec![0, 1, 2, 3, 4]], true).unwrap();
        assert_eq!(ok.exit_code, 0);
        let bad = cmd_verify(&c5, 4, &[vec![0, 1, 2, 3, 4]], true).unwrap();
        assert_eq!(bad.exit_code, 1);
        assert!(bad.lines[0].contains("\"position\":0"));
        assert!(cmd_verify(&c5, 5, &[vec![0, 1]], true).is_err());
    }

    #[test]
    fn separators_of_c6() {
        let out = cmd_separators(&[Graph::cycle(6)], 5, true).unwrap();
        assert_eq!(out.exit_code, 1);
        assert!(out.lines[0].contains("\"cycle\":[0,1,2,3,4,5]"));
        assert_eq!(cmd_separators(&[Graph::cycle(6)], 6, true).unwrap().exit_code, 0);
    }

    #[test]
    fn gen_is_reproducible() {
        let a = cmd_gen(8, 0.5, 3, 4);
        assert_eq!(a, cmd_gen(8, 0.5, 3, 4));
        assert_eq!(a.human.len(), 4);
        assert_eq!(a.human[1], cmd_gen(8, 0.5, 4, 1).human[0]);
    }

    #[test]
    fn witness_finds_both_directions() {
        let out = cmd_witness(6, &[], true).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.lines[0].contains("C1_NOT_C2") && out.lines[0].contains("C2_NOT_C1"));
    }
}
