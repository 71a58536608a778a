//! The `skl` command line: verification sweeps, graph export, and
//! report aggregation.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage or resource
//! errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skl::families::{auxiliary_graph_definitional, stable_kneser_graph};
use skl::formats::{to_dimacs, to_graph6};
use skl::params::Params;
use skl::report::{aggregate, parse_records, Record, Status};
use skl::verify::{
    run_sweep, NSpec, Suite, SweepSpec, VerifyConfig, DEFAULT_MAX_VERTICES, DEFAULT_NODE_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "skl",
    version,
    about = "Construct s-stable Kneser graphs and certify their automorphism, independence and coloring structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification sweeps over (s, k, n) parameter triples
    Verify(VerifyArgs),
    /// Export one graph in graph6 or DIMACS edge format
    Export(ExportArgs),
    /// Aggregate report files into a pass/fail matrix
    Report(ReportArgs),
}

/// Inclusive range: "3" or "2..4".
#[derive(Clone, Copy, Debug)]
struct RangeArg(usize, usize);

fn parse_range(text: &str) -> Result<RangeArg, String> {
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi),
        None => (text, text),
    };
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid bound '{lo}'"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid bound '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(RangeArg(lo, hi))
}

#[derive(Args)]
struct VerifyArgs {
    /// Stability values to sweep, inclusive: "3" or "2..4"
    #[arg(long = "s", value_parser = parse_range, default_value = "2..4")]
    s: RangeArg,

    /// Subset sizes to sweep, inclusive
    #[arg(long = "k", value_parser = parse_range, default_value = "2..3")]
    k: RangeArg,

    /// Absolute ground-set sizes to sweep (conflicts with --n-offset)
    #[arg(long = "n", value_parser = parse_range, conflicts_with = "n_offset")]
    n: Option<RangeArg>,

    /// Ground-set sizes as offsets from s*k; offset 0 is the degenerate
    /// boundary n = s*k [default: 0..6]
    #[arg(long = "n-offset", value_parser = parse_range)]
    n_offset: Option<RangeArg>,

    /// Comma-separated check suites
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<SuiteArg>,

    /// Skip graph construction above this vertex count
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    /// Search-node budget for the exact solvers; the SKL_NODE_BUDGET
    /// environment variable overrides the default, this flag overrides both
    #[arg(long)]
    node_budget: Option<u64>,

    /// Emit JSON-lines records on stdout instead of text
    #[arg(long)]
    json: bool,

    /// Also write JSON-lines records to this file
    #[arg(long)]
    out: Option<PathBuf>,

    /// Record per-check wall time in JSON records (makes output
    /// non-reproducible byte-for-byte)
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Aut,
    #[value(name = "g-structure")]
    GStructure,
    Independence,
    Coloring,
    Transitivity,
    Degenerate,
    All,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long = "s")]
    s: usize,
    #[arg(long = "k")]
    k: usize,
    #[arg(long = "n")]
    n: usize,
    /// Which graph: the stable Kneser graph or its auxiliary ground-set graph
    #[arg(long, value_enum, default_value = "kg")]
    which: WhichGraph,
    #[arg(long, value_enum, default_value = "graph6")]
    format: ExportFormat,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WhichGraph {
    /// The stable Kneser graph on the s-stable k-subsets
    Kg,
    /// The auxiliary graph on the ground set
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Graph6,
    Dimacs,
}

#[derive(Args)]
struct ReportArgs {
    /// JSON-lines report files produced by `skl verify --out`
    files: Vec<PathBuf>,
    /// Emit the aggregated table as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
        Command::Report(args) => cmd_report(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let node_budget = match resolve_node_budget(args.node_budget) {
        Ok(budget) => budget,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let suites = if args.suite.contains(&SuiteArg::All) {
        Suite::all()
    } else {
        args.suite
            .iter()
            .map(|s| match s {
                SuiteArg::Aut => Suite::Aut,
                SuiteArg::GStructure => Suite::GStructure,
                SuiteArg::Independence => Suite::Independence,
                SuiteArg::Coloring => Suite::Coloring,
                SuiteArg::Transitivity => Suite::Transitivity,
                SuiteArg::Degenerate => Suite::Degenerate,
                SuiteArg::All => unreachable!(),
            })
            .collect()
    };
    let config = VerifyConfig {
        node_budget,
        max_vertices: args.max_vertices,
        suites,
        timing: args.timing,
    };
    let n_spec = match (args.n, args.n_offset) {
        (Some(RangeArg(lo, hi)), None) => NSpec::Absolute(lo, hi),
        (None, Some(RangeArg(lo, hi))) => NSpec::Offset(lo, hi),
        (None, None) => NSpec::Offset(0, 6),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    };
    let spec = SweepSpec {
        s: (args.s.0, args.s.1),
        k: (args.k.0, args.k.1),
        n: n_spec,
    };
    if spec.triples().is_empty() {
        eprintln!(
            "error: the sweep contains no valid parameter triples (needs n >= s*k, s >= 2, k >= 1)"
        );
        return ExitCode::from(2);
    }

    let reports = run_sweep(&spec, &config);

    let mut jsonl = String::new();
    for report in &reports {
        jsonl.push_str(&report.to_jsonl());
    }
    if let Some(path) = &args.out {
        if let Err(e) = fs::write(path, &jsonl) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if args.json {
        print!("{jsonl}");
    } else {
        let mut pass = 0usize;
        let mut fail = 0usize;
        let mut skipped = 0usize;
        for report in &reports {
            for check in &report.checks {
                let triple = format!("s={} k={} n={}", check.s, check.k, check.n);
                match check.status {
                    Status::Pass => {
                        pass += 1;
                        println!("{triple:<16} {:<28} pass", check.id);
                    }
                    Status::Fail => {
                        fail += 1;
                        let witness = check
                            .witness
                            .as_ref()
                            .map(|w| format!(" witness={w}"))
                            .unwrap_or_default();
                        println!("{triple:<16} {:<28} FAIL{witness}", check.id);
                    }
                    Status::Skipped => {
                        skipped += 1;
                        let reason = check.reason.as_deref().unwrap_or("");
                        println!("{triple:<16} {:<28} skipped ({reason})", check.id);
                    }
                }
            }
        }
        println!(
            "{} triples: {pass} pass, {fail} fail, {skipped} skipped",
            reports.len()
        );
    }
    let any_failed = reports.iter().any(|r| r.any_failed());
    if any_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn resolve_node_budget(flag: Option<u64>) -> Result<u64, String> {
    if let Some(budget) = flag {
        return Ok(budget);
    }
    match std::env::var("SKL_NODE_BUDGET") {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("SKL_NODE_BUDGET is not a number: '{value}'")),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn cmd_export(args: ExportArgs) -> ExitCode {
    let params = match Params::new(args.n, args.k, args.s) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let graph = match args.which {
        WhichGraph::Kg => stable_kneser_graph(&params).graph().clone(),
        WhichGraph::G => match auxiliary_graph_definitional(&params) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let text = match args.format {
        ExportFormat::Graph6 => {
            let mut enc = to_graph6(&graph);
            enc.push('\n');
            enc
        }
        ExportFormat::Dimacs => to_dimacs(&graph),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            print!("{text}");
            let _ = std::io::stdout().flush();
        }
    }
    ExitCode::SUCCESS
}

fn cmd_report(args: ReportArgs) -> ExitCode {
    let mut records: Vec<Record> = Vec::new();
    for path in &args.files {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        match parse_records(&text) {
            Ok(mut parsed) => records.append(&mut parsed),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    let table = aggregate(&records);
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&table).expect("table serializes")
        );
    } else {
        print!("{}", table.render_text());
    }
    let any_fail = table
        .rows
        .iter()
        .any(|row| row.statuses.iter().any(|s| matches!(s, Some(Status::Fail))));
    if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
