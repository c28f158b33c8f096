//! `sombor`: generate family graphs, compute indices, verify closed forms,
//! check bounds and regenerate tables.
//!
//! Errors are printed as one line, `error[<code>]: <message>`. Exit codes:
//! 0 success, 1 I/O failure, 2 bad input or failed precondition,
//! 3 a bound violated on an instance satisfying its hypotheses,
//! 4 formula mismatches under `--fail-on-mismatch`.

mod commands;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "sombor", version, about = "Sombor-type degree-based graph indices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of a named family as an edge list or JSON.
    Generate(GenerateArgs),
    /// Evaluate indices on a graph file or a family member.
    Compute(ComputeArgs),
    /// Compare closed-form values with the engine over parameter ranges.
    Verify(VerifyArgs),
    /// Check one inequality on an instance, or fuzz all of them.
    Bounds(BoundsArgs),
    /// Regenerate one of the closed-form tables from the engine.
    Table(TableArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family name, e.g. path, wheel, grid, hex-meta.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Output file; without it the graph goes to stdout and the counts to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list or JSON graph file.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated list from so, so1..so6, or `all`.
    #[arg(long, default_value = "all")]
    indices: String,
    /// Also print the degree-pair profile.
    #[arg(long)]
    profile: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ValueFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, `cactus`, or a comma-separated list of family names.
    #[arg(long, default_value = "all")]
    families: String,
    /// Restrict to tables: comma-separated from thm21, t1, t2, grid, cactus-so1, t3.
    #[arg(long)]
    sources: Option<String>,
    /// `a..b` or a single value.
    #[arg(long, default_value = "1..30", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value = "1..30", value_parser = parse_range)]
    m: RangeInclusive<usize>,
    #[arg(long, default_value_t = sombor_core::closed_forms::DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormat,
    /// Only the cells confirmed to agree with the engine.
    #[arg(long)]
    verified_only: bool,
    /// Exit with status 4 when any row mismatches.
    #[arg(long)]
    fail_on_mismatch: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundsFormat {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct BoundsArgs {
    /// A bound name such as edge-del-so1 or sandwich-so3, or `fuzz`.
    #[arg(long)]
    check: String,
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Edge for the deletion bounds.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    edge: Option<Vec<usize>>,
    /// Link monomer `family:n[:m]`, repeated in chain order.
    #[arg(long)]
    monomer: Vec<String>,
    /// Link anchors `x:y` per monomer, repeated; default `0:0`.
    #[arg(long)]
    anchor: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 40)]
    max_n: usize,
    /// Report file; fuzz writes its summary to stdout and its reports here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: BoundsFormat,
}

#[derive(Args)]
struct TableArgs {
    /// thm21, t1, t2, t3, grid or cactus-so1.
    #[arg(long)]
    which: String,
    #[arg(long, default_value = "1..10", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value = "1..10", value_parser = parse_range)]
    m: RangeInclusive<usize>,
    #[arg(long, default_value_t = sombor_core::closed_forms::DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormat,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected `a..b` or a single integer, got {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("error[usage]: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Compute(a) => commands::compute(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Table(a) => commands::table(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error[{}]: {}", e.tag(), e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
