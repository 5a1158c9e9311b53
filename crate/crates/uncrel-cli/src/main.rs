//! Command-line front end: single-instance reports, family scans, witness
//! searches, and randomized verification campaigns.

mod instance;
mod report;
mod scan;
mod search;
mod verify;
mod wire;

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;
use uncrel::Tolerances;

/// Failure classes mapped onto exit codes, so campaign scripts can tell bad
/// input (2) from violated math preconditions (3) from found counterexamples
/// (1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Constraint(String),
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
            CliError::Constraint(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Constraint(m) | CliError::Violation(m) => m,
        }
    }
}

impl From<uncrel::Error> for CliError {
    fn from(e: uncrel::Error) -> Self {
        use uncrel::Error::*;
        match e {
            NotNormalized { .. }
            | NotOrthogonal { .. }
            | ZeroVariance
            | NegativeDeficit { .. }
            | DegenerateInconsistent { .. }
            | NullPhiVector => CliError::Constraint(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Tolerance flags shared by every subcommand. Precedence, tightest binding
/// last: defaults, then instance-file overrides, then `--tol`, then the
/// granular flags.
#[derive(Debug, Args)]
pub struct TolArgs {
    /// Joint override for the orthogonality, normalization, and gap tolerances
    #[arg(long)]
    pub tol: Option<f64>,
    /// Orthogonality tolerance (wins over --tol)
    #[arg(long)]
    pub tol_orth: Option<f64>,
    /// Normalization tolerance (wins over --tol)
    #[arg(long)]
    pub tol_norm: Option<f64>,
    /// Gap tolerance (wins over --tol)
    #[arg(long)]
    pub tol_gap: Option<f64>,
}

impl TolArgs {
    pub fn resolve(&self, base: Tolerances) -> Tolerances {
        let mut t = base;
        if let Some(v) = self.tol {
            t.orth = v;
            t.norm = v;
            t.gap = v;
        }
        if let Some(v) = self.tol_orth {
            t.orth = v;
        }
        if let Some(v) = self.tol_norm {
            t.norm = v;
        }
        if let Some(v) = self.tol_gap {
            t.gap = v;
        }
        t
    }
}

#[derive(Parser)]
#[command(
    name = "uncrel",
    version,
    about = "Uncertainty bound reports, scans, witness searches, and randomized verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every bound on one instance file
    Report(report::ReportArgs),
    /// Sweep a built-in family over a theta grid and emit CSV
    Scan(scan::ScanArgs),
    /// Check the bounds on randomized instances; any violation is a bug
    Verify(verify::VerifyArgs),
    /// Search for a witness maximizing a chosen bound
    Optimize(search::OptimizeArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Report(args) => report::run(&args),
        Command::Scan(args) => scan::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Optimize(args) => search::run(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
