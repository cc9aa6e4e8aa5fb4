//! Command-line surface. [`run`] does all the work on in-memory input so
//! that it can be tested without spawning processes.

mod format;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::closure::{close, construct, strategy_permutation, ClosureError, LabelingStrategy};
use crate::clutter::{close_clutter, clutter_status, construct_clutter, Clutter};
use crate::graph::{Graph, Labeling, VertexSet};
use crate::oracle::{Oracle, OracleError, DEFAULT_CAP};
use crate::ordering::{find_pi_ordering, DEFAULT_BUDGET};

pub use format::{
    parse_clutter, parse_graph, serialize_clutter, serialize_graph, ParseError, ParsedClutter, ParsedGraph,
};
pub use report::{
    prime_rows, Details, InputSummary, LabelingReport, OutputSummary, PrimeRow, RunReport, Timing, Verdicts,
    INITIAL_IDEAL_NOTE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "macaulify",
    version,
    about = "Closed and Cohen-Macaulay supergraphs, with a brute-force verdict oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(flatten)]
    Graph(VerbCommand),
    /// Run a verb on a clutter file (verdicts go through its associated graph).
    #[command(subcommand)]
    Clutter(VerbCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerbCommand {
    /// Add forced edges until the graph is closed.
    Close(InputArg),
    /// Closure followed by augmentation, with the full trace and verdicts.
    Construct(InputArg),
    /// Cut-point sets, minimal primes, unmixedness and CM status.
    Oracle(InputArg),
    /// Verdicts for every single-vertex deletion.
    Audit(InputArg),
    /// Search for a relabeling that is a proper interval ordering.
    PiOrder(InputArg),
}

impl VerbCommand {
    fn split(&self) -> (Verb, &PathBuf) {
        match self {
            VerbCommand::Close(a) => (Verb::Close, &a.file),
            VerbCommand::Construct(a) => (Verb::Construct, &a.file),
            VerbCommand::Oracle(a) => (Verb::Oracle, &a.file),
            VerbCommand::Audit(a) => (Verb::Audit, &a.file),
            VerbCommand::PiOrder(a) => (Verb::PiOrder, &a.file),
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input file, or `-` for standard input.
    pub file: PathBuf,
}

#[derive(Clone, Debug, Default, Args)]
pub struct Options {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Relabeling applied before `close` and `construct`.
    #[arg(long, global = true, default_value_t = LabelingStrategy::Identity)]
    pub labeling: LabelingStrategy,
    /// Largest vertex count for subset enumeration.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Acknowledge that a cap above the default may take exponential time.
    #[arg(long, global = true)]
    pub allow_large_cap: bool,
    /// Node budget for the proper interval ordering search.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Record elapsed time in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Print only the resulting graph or clutter, in input file format.
    #[arg(long, global = true)]
    pub emit: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Close,
    Construct,
    Oracle,
    Audit,
    PiOrder,
}

impl Verb {
    fn name(self) -> &'static str {
        match self {
            Verb::Close => "close",
            Verb::Construct => "construct",
            Verb::Oracle => "oracle",
            Verb::Audit => "audit",
            Verb::PiOrder => "pi-order",
        }
    }

    fn produces_output(self) -> bool {
        matches!(self, Verb::Close | Verb::Construct)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Graph,
    Clutter,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::CapExceeded { .. })
            | CliError::Closure(ClosureError::TooLargeForExhaustive { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }
}

/// What a process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn oracle_for(opts: &Options) -> Result<Oracle, CliError> {
    let cap = opts.cap.unwrap_or(DEFAULT_CAP);
    if cap > DEFAULT_CAP && !opts.allow_large_cap {
        return Err(CliError::Usage(format!(
            "--cap {cap} exceeds the default of {DEFAULT_CAP}; pass --allow-large-cap to confirm"
        )));
    }
    Ok(Oracle::new(cap).with_ordering_budget(opts.budget.unwrap_or(DEFAULT_BUDGET)))
}

enum Subject {
    Graph(Graph),
    Clutter(Clutter),
}

fn graph_output(g: &Graph) -> OutputSummary {
    OutputSummary {
        kind: "graph",
        n: g.n(),
        edges: g.edges().map(|e| VertexSet::singleton(e.lo()).with(e.hi())).collect(),
    }
}

fn clutter_output(c: &Clutter) -> OutputSummary {
    OutputSummary {
        kind: "clutter",
        n: c.n(),
        edges: c.edges().to_vec(),
    }
}

/// Runs one verb on the text of an input file.
pub fn run(verb: Verb, kind: InputKind, input: &str, opts: &Options) -> Outcome {
    let mut warnings = Vec::new();
    let result = execute(verb, kind, input, opts, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok((report, emitted)) => {
            let stdout = match (opts.emit, emitted) {
                (true, Some(text)) => text,
                _ if opts.json => report.to_json(),
                _ => report.to_text(),
            };
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr,
            }
        }
        Err(err) => {
            stderr.push_str(&format!("error: {err}\n"));
            Outcome {
                code: err.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn execute(
    verb: Verb,
    kind: InputKind,
    input: &str,
    opts: &Options,
    warnings: &mut Vec<String>,
) -> Result<(RunReport, Option<String>), CliError> {
    // Instant::now panics on wasm32-unknown-unknown, so only read the clock on request.
    let start = opts.timing.then(Instant::now);
    let oracle = oracle_for(opts)?;
    let subject = match kind {
        InputKind::Graph => {
            let parsed = parse_graph(input)?;
            warnings.extend(parsed.warnings);
            Subject::Graph(parsed.graph)
        }
        InputKind::Clutter => {
            let parsed = parse_clutter(input)?;
            warnings.extend(parsed.warnings);
            Subject::Clutter(parsed.clutter)
        }
    };
    let relabels = kind == InputKind::Graph && verb.produces_output();
    if opts.labeling != LabelingStrategy::Identity && !relabels {
        warnings.push(format!("--labeling is ignored by `{}`", command_name(verb, kind)));
    }
    if opts.emit && !verb.produces_output() {
        warnings.push(format!("--emit has no effect on `{}`", command_name(verb, kind)));
    }

    let (input_summary, graph) = match &subject {
        Subject::Graph(g) => (
            InputSummary {
                kind: "graph",
                n: g.n(),
                edges: g.edge_count(),
            },
            g.clone(),
        ),
        Subject::Clutter(c) => (
            InputSummary {
                kind: "clutter",
                n: c.n(),
                edges: c.edges().len(),
            },
            c.associated_graph(),
        ),
    };
    let mut labeling = LabelingReport {
        strategy: LabelingStrategy::Identity,
        map: Labeling::identity(graph.n()),
    };
    let mut trace = None;
    let mut output = None;
    let mut emitted = None;
    let mut details = None;
    // the graph that verdicts and primes describe
    let mut subject_graph = graph.clone();

    match (verb, &subject) {
        (Verb::Close, Subject::Graph(g)) => {
            let perm = strategy_permutation(g, opts.labeling)?;
            let (closed, steps) = close(&g.permuted(&perm));
            labeling = LabelingReport {
                strategy: opts.labeling,
                map: Labeling::from_permutation(&perm),
            };
            trace = Some(steps.steps);
            output = Some(graph_output(&closed));
            emitted = Some(serialize_graph(&closed));
            subject_graph = closed;
        }
        (Verb::Construct, Subject::Graph(g)) => {
            let built = construct(g, opts.labeling)?;
            labeling = LabelingReport {
                strategy: opts.labeling,
                map: built.labeling,
            };
            trace = Some(built.trace.steps);
            output = Some(graph_output(&built.graph));
            emitted = Some(serialize_graph(&built.graph));
            subject_graph = built.graph;
        }
        (Verb::Close, Subject::Clutter(c)) | (Verb::Construct, Subject::Clutter(c)) => {
            let (out, steps) = if verb == Verb::Close {
                close_clutter(c)
            } else {
                construct_clutter(c)
            };
            if verb == Verb::Construct {
                details = Some(Details::ClutterStatus(clutter_status(&out, &oracle)?));
            }
            trace = Some(steps.steps);
            output = Some(clutter_output(&out));
            emitted = Some(serialize_clutter(&out));
            subject_graph = out.associated_graph();
        }
        (Verb::Oracle, Subject::Clutter(c)) => {
            details = Some(Details::ClutterStatus(clutter_status(c, &oracle)?));
        }
        (Verb::Oracle, Subject::Graph(_)) => {}
        (Verb::Audit, _) => {
            details = Some(Details::Audit(oracle.audit_subgraphs(&graph)?));
        }
        (Verb::PiOrder, _) => {
            details = Some(Details::Ordering(find_pi_ordering(&graph, oracle_budget(opts))));
        }
    }

    let enumerates = verb != Verb::Close && verb != Verb::PiOrder;
    let (verdicts, primes) = if enumerates {
        (
            Verdicts::full(&subject_graph, &oracle)?,
            Some(prime_rows(&subject_graph, &oracle)?),
        )
    } else {
        (Verdicts::structural(&subject_graph), None)
    };

    let report = RunReport {
        command: command_name(verb, kind),
        input: input_summary,
        labeling,
        trace,
        output,
        verdicts,
        primes,
        details,
        timing: start.map(|t| Timing {
            elapsed_us: t.elapsed().as_micros() as u64,
        }),
    };
    Ok((report, emitted))
}

fn oracle_budget(opts: &Options) -> u64 {
    opts.budget.unwrap_or(DEFAULT_BUDGET)
}

fn command_name(verb: Verb, kind: InputKind) -> String {
    match kind {
        InputKind::Graph => verb.name().to_string(),
        InputKind::Clutter => format!("clutter {}", verb.name()),
    }
}

/// Reads the input named on the command line and runs it.
pub fn execute_cli(cli: &Cli) -> Outcome {
    let (kind, (verb, path)) = match &cli.command {
        Command::Graph(v) => (InputKind::Graph, v.split()),
        Command::Clutter(v) => (InputKind::Clutter, v.split()),
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf).map(|_| buf)
    } else {
        std::fs::read_to_string(path)
    };
    match text {
        Ok(text) => run(verb, kind, &text, &cli.options),
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!(
                "error: {}\n",
                CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                }
            ),
        },
    }
}
