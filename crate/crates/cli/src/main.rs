//! `rjcd` — measure assessor convergence for IR test collections,
//! evaluate and re-rank snippet result lists, and correlate the two.
//!
//! Exit codes: 0 success, 2 input/validation error, 3 unresolved ties,
//! 4 numeric failure.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::SimulateArgs;
use crate::config::{load_file_config, CommonArgs, FileConfig, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "rjcd",
    version,
    about = "Relevance-judgment convergence scoring, snippet re-ranking, and evaluation",
    after_help = "Defaults: --threshold 0.05, --k 5, --tau 2.0, --seed 0, --out out"
)]
struct Cli {
    /// TOML config file; command-line flags override its values
    #[arg(short, long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute per-query convergence scores (rho = AN/JN)
    Rjcd(CommonArgs),
    /// Evaluate ranked lists: PR curves, recall-level profiles, summary
    Eval(CommonArgs),
    /// Split queries at the convergence threshold
    Gate(CommonArgs),
    /// Correlate convergence with precision improvement
    Correlate(CommonArgs),
    /// Classify snippets by topic and re-rank by preference profile
    Rerank(CommonArgs),
    /// Generate synthetic assessor panels and sweep their convergence
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        args: SimulateArgs,
    },
    /// Run the full workflow and write every report file
    Report(CommonArgs),
}

fn run(cli: Cli) -> rjcd_core::Result<()> {
    let file = match &cli.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Rjcd(args) => commands::rjcd(&RunConfig::resolve(args, file)?),
        Command::Eval(args) => commands::eval(&RunConfig::resolve(args, file)?),
        Command::Gate(args) => commands::gate(&RunConfig::resolve(args, file)?),
        Command::Correlate(args) => commands::correlate(&RunConfig::resolve(args, file)?),
        Command::Rerank(args) => commands::rerank(&RunConfig::resolve(args, file)?),
        Command::Simulate { common, args } => {
            commands::simulate(&RunConfig::resolve(common, file)?, &args)
        }
        Command::Report(args) => commands::report(&RunConfig::resolve(args, file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}
