//! `locex`: run the localized verifiers, sweeps, stress tests and searches
//! from the command line. Every run writes one report file.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use locex_core::LocexError;

#[derive(Parser, Debug)]
#[command(name = "locex", version, about = "Exact verification of localized extremal inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify one inequality on one instance.
    Verify(VerifyArgs),
    /// Exhaustive sweep over every graph or family of a given size.
    Sweep(SweepArgs),
    /// Randomized stress run of one suite.
    Stress(StressArgs),
    /// Search for graphs exceeding the sequence bound.
    Search(SearchArgs),
    /// Compare an optimized statistic against its brute-force oracle.
    Oracle(OracleArgs),
    /// Re-read report files, check their arithmetic and re-render them.
    Report(ReportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for any randomness; recorded in the report.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Refuse instances with more than this many vertices / elements before solving.
    #[arg(long)]
    pub cap_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output directory for the report file, or `-` for stdout.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Record failed bounds in the report instead of failing the run.
    #[arg(long)]
    pub report_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Turan,
    ErdosGallai,
    Stars,
    Sequence,
    Lym,
    Katona,
    DaykinFrankl,
    Ekr,
    Borg,
    Cyclic,
    Perfect,
    Superlemma,
    PosetLym,
    Dilworth,
    Es,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<PathBuf>,
    #[arg(long)]
    pub poset: Option<PathBuf>,
    #[arg(long)]
    pub sequence: Option<PathBuf>,
    /// Cyclic order file for `cyclic`; all orders are checked when absent.
    #[arg(long)]
    pub sigma: Option<PathBuf>,
    /// Generated instance, `kind:p1,p2,..` (see README for kinds).
    #[arg(long)]
    pub gen: Option<String>,
    /// Graph sequence: comma-separated names, or `cliques:K` / `paths:K`.
    #[arg(long)]
    pub seq: Option<String>,
    /// `auto` to compute ex(n, F_i) exactly, or a path to an ex-table cache file.
    #[arg(long)]
    pub ex: Option<String>,
    /// Cache file read and updated by `--ex auto`.
    #[arg(long)]
    pub ex_cache: Option<PathBuf>,
    /// Chain length for `katona`.
    #[arg(long)]
    pub k: Option<usize>,
    /// f oracle for `superlemma`.
    #[arg(long, default_value = "constant-size")]
    pub f: String,
    /// Element subset T for `poset-lym`, comma-separated; all elements when absent.
    #[arg(long)]
    pub subset: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    /// Every labeled graph on n vertices: turan, erdos-gallai, stars.
    Graphs,
    /// Every family on [n]: lym.
    Families,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub kind: SweepKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct StressArgs {
    /// turan, erdos-gallai, stars, lym, ekr, perfect, dilworth or es.
    pub suite: String,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Enumerate all families instead of sampling (lym, n <= 4).
    #[arg(long)]
    pub exhaustive: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub seq: String,
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1000)]
    pub budget: u64,
    #[arg(long)]
    pub ex_cache: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Statistic {
    /// Largest clique through each edge.
    CliqueEdge,
    /// Longest path through each edge.
    PathEdge,
    /// Largest star through each edge.
    StarEdge,
    /// Largest clique through each vertex.
    CliqueVertex,
    /// Largest independent set through each vertex.
    IndependentVertex,
    /// Largest matching through each set.
    Matching,
    /// Longest chain through each set.
    Chain,
    /// Longest increasing and decreasing subsequences through each entry.
    Monotone,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub statistic: Statistic,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub family: Option<PathBuf>,
    #[arg(long)]
    pub sequence: Option<PathBuf>,
    /// Random instances to compare when no input file is given.
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Size of the random instances.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

fn exit_code(e: &LocexError) -> u8 {
    match e {
        LocexError::Violation(_) | LocexError::OracleMismatch(_) => 1,
        LocexError::Capacity { .. } => 3,
        _ => 2,
    }
}

fn configure_threads() -> Result<(), LocexError> {
    let Ok(v) = std::env::var("LOCEX_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| LocexError::Config(format!("LOCEX_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| LocexError::Config(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| commands::run(&cli.command));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match &e {
                LocexError::Violation(v) => eprintln!("instance:\n{}", v.instance),
                LocexError::Precondition { witness, .. } if !witness.is_empty() => {
                    eprintln!("witness: {}", witness.join(" "))
                }
                _ => {}
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
