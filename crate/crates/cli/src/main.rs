//! `gallai`: build, check and certify rainbow-free colourings from the
//! command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 proven negative
//! (infeasible, or a rainbow copy found), 3 inconclusive (a budget ran out).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod outcome;

#[derive(Parser)]
#[command(
    name = "gallai",
    version,
    about = "Rainbow-free colourings of complete graphs with prescribed colour counts"
)]
struct Cli {
    /// Seed for the random sampling in `verify` and `sweep`.
    #[arg(long, global = true, default_value_t = 0x6a11a1)]
    seed: u64,
    /// Worker threads for `oracle` and `sweep`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a colouring of K_n with the given colour counts and no rainbow H.
    Construct(ConstructArgs),
    /// Check a colouring: counts, rainbow copies of H and an optional certificate.
    Verify(VerifyArgs),
    /// Produce an infeasibility certificate from one of the lower bounds.
    Certify(CertifyArgs),
    /// Decide every n-good sequence for small n by exhaustive search.
    Oracle(OracleArgs),
    /// Construct and verify random sequences in bulk.
    Sweep(SweepArgs),
}

#[derive(Args)]
pub struct ConstructArgs {
    /// Graph file or builtin:K3, builtin:K4, builtin:C4, ...
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub n: usize,
    /// `balanced`, an inline list such as "4 3 3", or a sequence file.
    #[arg(long)]
    pub seq: String,
    /// Number of colours for `--seq balanced`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Colouring output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Certificate output (construction or infeasibility).
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(long, default_value = "auto")]
    pub strategy: gallai::constructor::Strategy,
    /// Node limit for the greedy search.
    #[arg(long, default_value_t = gallai::constructor::DEFAULT_NODE_BUDGET)]
    pub budget: u64,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub colouring: PathBuf,
    #[arg(long)]
    pub target: String,
    /// Split or peel certificate to replay.
    #[arg(long)]
    pub cert: Option<PathBuf>,
    /// Expected colour counts; the colouring's own counts otherwise.
    #[arg(long)]
    pub seq: Option<String>,
    /// Node limit for the rainbow search.
    #[arg(long, default_value_t = 100_000_000)]
    pub budget: u64,
    /// Random vertex subsets to try before the exhaustive search, for
    /// complete targets.
    #[arg(long, default_value_t = 0)]
    pub samples: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertifyKind {
    Triangle,
    Clash,
    Tree,
    General,
    Peel,
}

#[derive(Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub kind: CertifyKind,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Target size for `clash` and `tree`.
    #[arg(long)]
    pub m: Option<usize>,
    /// Sequence for `clash` and `tree`; `balanced` with --n and --k.
    #[arg(long)]
    pub seq: Option<String>,
    /// Target graph for `general`.
    #[arg(long)]
    pub target: Option<String>,
    /// Colouring to peel for `peel`.
    #[arg(long)]
    pub colouring: Option<PathBuf>,
    /// Stop size for `peel`.
    #[arg(long, default_value_t = 1)]
    pub stop: usize,
    /// `alpha` of the hard triangle sequence; the library default otherwise.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Certificate output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Search nodes per sequence.
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    /// Search nodes over the whole table.
    #[arg(long, default_value_t = 500_000_000)]
    pub total_budget: u64,
    /// Sequences enumerated before the table is cut short.
    #[arg(long, default_value_t = 50_000)]
    pub max_sequences: u64,
    /// Realizability table output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Agreement report versus the greedy constructor and the clash bound.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Random sequences per n.
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    /// Node limit for the greedy search and the rainbow check.
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Report output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Construct(a) => commands::construct::run(a),
        Command::Verify(a) => commands::verify::run(a, cli.seed),
        Command::Certify(a) => commands::certify::run(a),
        Command::Oracle(a) => commands::oracle::run(a, cli.jobs),
        Command::Sweep(a) => commands::sweep::run(a, cli.seed, cli.jobs),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            failure.code()
        }
    }
}
