//! `mstcover` command-line interface.
//!
//! Exit codes: 0 success, 1 infeasible solution (`verify`), 2 malformed input
//! or invalid arguments, 3 no perfect cover exists (`solve --alg perfect`),
//! 4 instance too large for the exact solver.

mod gen;
mod report;
mod solve;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "mstcover", version, about = "Multiagent MST cover solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Solve an instance.
    Solve(SolveArgs),
    /// Check a solution against an instance.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    Random,
    SetcoverT1,
    SetcoverT2,
}

#[derive(clap::Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "max-rank")]
    max_rank: Option<u64>,
    /// Forbid parallel edges in random graphs.
    #[arg(long)]
    simple: bool,
    /// Draw additive edge costs uniformly from 1..=MAX_COST.
    #[arg(long = "max-cost")]
    max_cost: Option<i64>,
    /// Set cover input: {"universe_size": p, "sets": [[...], ...]}.
    #[arg(long = "sc-file")]
    sc_file: Option<PathBuf>,
    /// Amplification factor for setcover-t2.
    #[arg(long)]
    h: Option<usize>,
    /// Instance path; the instance goes to stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Perfect,
    Greedy,
    WeightedGreedy,
    MatroidGreedy,
    Exact,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Perfect => "perfect",
            Algorithm::Greedy => "greedy",
            Algorithm::WeightedGreedy => "weighted-greedy",
            Algorithm::MatroidGreedy => "matroid-greedy",
            Algorithm::Exact => "exact",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExactObjective {
    Size,
    Cost,
}

#[derive(clap::Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    alg: Algorithm,
    #[arg(long, short)]
    input: PathBuf,
    /// JSON array of per-edge costs, overriding the instance's costs.
    #[arg(long)]
    costs: Option<PathBuf>,
    /// JSON array of uniform or partition matroids over the edge ids that
    /// `matroid-greedy` must also bring to full rank.
    #[arg(long)]
    matroids: Option<PathBuf>,
    /// What `exact` minimizes.
    #[arg(long, value_enum, default_value = "size")]
    objective: ExactObjective,
    /// Solution path.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Print the run report as JSON.
    #[arg(long = "json-report")]
    json_report: bool,
    /// Evaluate agents' progress concurrently within a greedy round.
    #[arg(long = "parallel-agents")]
    parallel_agents: bool,
    /// Include wall-clock time in the report (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(clap::Args)]
pub struct VerifyArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short)]
    solution: PathBuf,
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn malformed(message: impl Into<String>) -> Self {
        Failure::new(2, message)
    }
}

impl From<mstcover::Error> for Failure {
    fn from(err: mstcover::Error) -> Self {
        let code = match err {
            mstcover::Error::SizeGuard { .. } => 4,
            _ => 2,
        };
        Failure::new(code, format!("error[{}]: {err}", err.code()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => gen::run(&args),
        Command::Solve(args) => solve::run(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
