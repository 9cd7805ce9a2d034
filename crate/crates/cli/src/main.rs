//! `hookbias`: reproduce hook-length tables, run bias checks and scans, and
//! dump generating-function coefficients.
//!
//! Exit codes: 0 pass, 1 violation or table mismatch, 2 usage error.

mod commands;
mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use hookbias_core::OracleGuard;

use commands::{CheckArgs, Outcome, TableKind};
use config::{Format, RunConfig, DEFAULT_TRUNCATION};

#[derive(Debug, Parser)]
#[command(name = "hookbias", version, about = "Hook-length biases in ordinary and t-regular partitions")]
struct Cli {
    /// Truncation order N of every power series.
    #[arg(long, global = true, default_value_t = DEFAULT_TRUNCATION)]
    truncation: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest weight enumerated for ordinary partitions.
    #[arg(long, global = true, default_value_t = OracleGuard::default().ordinary)]
    guard_ordinary: u32,
    /// Largest weight enumerated for 2-regular partitions.
    #[arg(long, global = true, default_value_t = OracleGuard::default().two_regular)]
    guard_two_regular: u32,
    /// Largest weight enumerated for t-regular partitions with t >= 3.
    #[arg(long, global = true, default_value_t = OracleGuard::default().regular)]
    guard_regular: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct RangeArgs {
    #[arg(long)]
    nmax: Option<u32>,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
}

impl From<&RangeArgs> for CheckArgs {
    fn from(a: &RangeArgs) -> Self {
        CheckArgs { n_max: a.nmax, k_max: a.kmax, t: a.t }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the 10x10 table of p_(k)(n) or b_(2,k)(n) and compare it with the reference values.
    Tables {
        #[arg(value_enum)]
        which: TableKind,
    },
    /// Run a bias check: ordinary-bias, two-regular-k1-k2, two-regular-k2-k3, closed-forms.
    Verify {
        check: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Run a scan: two-regular, three-regular, exploratory.
    Scan {
        check: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Dump coefficients of a generating function over an inclusive range such as 0..10.
    Coeffs {
        id: String,
        range: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
    },
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = RunConfig {
        truncation: cli.truncation,
        guard: OracleGuard {
            ordinary: cli.guard_ordinary,
            two_regular: cli.guard_two_regular,
            regular: cli.guard_regular,
        },
        format: cli.format,
        out: cli.out.clone(),
    };
    cfg.validate()?;
    match &cli.command {
        Command::Tables { which } => commands::tables(*which, &cfg),
        Command::Verify { check, range } => commands::verify(check, range.into(), &cfg),
        Command::Scan { check, range } => commands::scan(check, range.into(), &cfg),
        Command::Coeffs { id, range, k, t } => commands::coeffs(id, *k, *t, range, &cfg),
    }
}

fn emit(outcome: &Outcome, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, &outcome.output).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.output.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&outcome, cli.out.as_ref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
