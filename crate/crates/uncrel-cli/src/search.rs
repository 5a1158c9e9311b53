//! `optimize`: search for the witness maximizing a chosen bound on one
//! instance, then report every bound at that witness.

use clap::{Args, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

use crate::wire::{self, ReportDoc};
use crate::{instance, CliError, TolArgs};
use uncrel::bounds::bound_report;
use uncrel::optimize::{maximize_witness, WitnessObjective};
use uncrel::RngSeed;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Objective {
    /// Right side of the sum-form bound
    #[value(name = "sum_rhs")]
    SumRhs,
    /// Right side of the corrected product bound
    #[value(name = "product_rhs")]
    ProductRhs,
    /// Right side of the stronger paired sum inequality
    #[value(name = "mp_rhs")]
    MpRhs,
}

impl Objective {
    fn name(self) -> &'static str {
        match self {
            Objective::SumRhs => "sum_rhs",
            Objective::ProductRhs => "product_rhs",
            Objective::MpRhs => "mp_rhs",
        }
    }

    fn to_lib(self) -> WitnessObjective {
        match self {
            Objective::SumRhs => WitnessObjective::SumRhs,
            Objective::ProductRhs => WitnessObjective::ProductRhs,
            Objective::MpRhs => WitnessObjective::MpRhs,
        }
    }
}

#[derive(Args)]
pub struct OptimizeArgs {
    /// Instance file (JSON, without a fixed witness)
    #[arg(long)]
    pub input: PathBuf,
    /// Quantity to maximize
    #[arg(long, value_enum, default_value_t = Objective::SumRhs)]
    pub objective: Objective,
    /// Independent restarts of the search
    #[arg(long, default_value_t = 8)]
    pub restarts: u32,
    /// Refinement sweeps per restart
    #[arg(long, default_value_t = 100)]
    pub iters: u32,
    /// Search seed
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// JSON destination (stdout when absent)
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Emit JSON to stdout instead of the table
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Serialize)]
struct SearchDoc {
    schema: u32,
    objective: String,
    value: f64,
    evaluations: u64,
    seed: u64,
    witness: Vec<[f64; 2]>,
    report: ReportDoc,
}

pub fn run(args: &OptimizeArgs) -> Result<(), CliError> {
    let inst = instance::load(&args.input, &args.tol)?;
    if inst.witness.is_some() {
        return Err(CliError::Input(
            "instance file already fixes a witness; remove it to search".to_string(),
        ));
    }
    if args.restarts < 1 {
        return Err(CliError::Input("restarts must be at least 1".to_string()));
    }
    let found = maximize_witness(
        &inst.a,
        &inst.b,
        &inst.state,
        args.objective.to_lib(),
        args.restarts,
        args.iters,
        RngSeed(args.seed),
        &inst.tol,
    )?;
    let report = bound_report(
        &inst.a,
        &inst.b,
        &inst.state,
        Some(&found.witness),
        &inst.tol,
    )?;
    let doc = SearchDoc {
        schema: wire::SCHEMA,
        objective: args.objective.name().to_string(),
        value: found.objective,
        evaluations: found.evaluations,
        seed: args.seed,
        witness: wire::vector_pairs(&found.witness),
        report: ReportDoc::from_report(&report),
    };
    if let Some(path) = &args.output {
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
        return Ok(());
    }
    if args.json {
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
        println!("{text}");
        return Ok(());
    }
    println!("objective       {}", args.objective.name());
    println!("value           {:.16e}", found.objective);
    println!("evaluations     {}", found.evaluations);
    println!("seed            {}", args.seed);
    println!("witness");
    for (k, entry) in found.witness.entries().iter().enumerate() {
        println!(
            "  [{k}]  {:.16e} {} {:.16e}i",
            entry.re,
            if entry.im < 0.0 { "-" } else { "+" },
            entry.im.abs()
        );
    }
    print!("{}", wire::render_table(&report));
    Ok(())
}
