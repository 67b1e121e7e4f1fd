//! `metaconf`: batch CLI over the meta-conformal correlator library —
//! kernel evaluation, verification suites, and published-figure data.

mod config;
mod evalcmd;
mod figures;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{CliError, ParamFlags, RunConfig};
use figures::FigureId;
use verify::SuiteId;

/// What a subcommand produced: both text streams plus the exit code.
pub struct CmdOutcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: u8,
}

#[derive(Parser)]
#[command(
    name = "metaconf",
    version,
    about = "Meta-conformal correlator toolkit: kernels, verification suites, figure data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a correlator kernel at a point or over a separation grid.
    Eval {
        #[command(flatten)]
        flags: ParamFlags,
    },
    /// Regenerate the data behind a published figure (CSV, optionally SVG).
    Figure {
        /// Which figure to reproduce.
        #[arg(value_enum)]
        which: FigureId,
        #[command(flatten)]
        flags: ParamFlags,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteId,
        #[command(flatten)]
        flags: ParamFlags,
    },
}

/// Deterministic-run seed: `METACONF_SEED` when set, otherwise 0.
fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var("METACONF_SEED") {
        Ok(s) => s.trim().parse::<u64>().map_err(|e| {
            CliError::Usage(format!(
                "METACONF_SEED must be a non-negative integer, got {s:?}: {e}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(CliError::Usage(format!("METACONF_SEED: {e}"))),
    }
}

fn run() -> Result<CmdOutcome, CliError> {
    let cli = Cli::parse();
    let seed = seed_from_env()?;
    match &cli.command {
        Command::Eval { flags } => {
            let cfg = RunConfig::resolve("eval", flags, seed)?;
            evalcmd::cmd_eval(&cfg)
        }
        Command::Figure { which, flags } => {
            let cfg = RunConfig::resolve(&format!("figure:{}", which.name()), flags, seed)?;
            figures::cmd_figure(*which, &cfg)
        }
        Command::Verify { suite, flags } => {
            let cfg = RunConfig::resolve(&format!("verify:{}", suite.name()), flags, seed)?;
            verify::cmd_verify(*suite, &cfg)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
