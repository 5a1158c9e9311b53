//! `report`: evaluate every bound on one instance file.

use clap::Args;
use std::path::PathBuf;

use crate::wire::ReportDoc;
use crate::{instance, wire, CliError, TolArgs};
use uncrel::bounds::bound_report;

#[derive(Args)]
pub struct ReportArgs {
    /// Instance file (JSON)
    pub input: PathBuf,
    /// Emit machine-readable JSON instead of the table
    #[arg(long, conflicts_with = "table")]
    pub json: bool,
    /// Emit the human-readable table (default)
    #[arg(long)]
    pub table: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}

pub fn run(args: &ReportArgs) -> Result<(), CliError> {
    let inst = instance::load(&args.input, &args.tol)?;
    let report = bound_report(
        &inst.a,
        &inst.b,
        &inst.state,
        inst.witness.as_ref(),
        &inst.tol,
    )?;
    if args.json {
        let doc = ReportDoc::from_report(&report);
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
        println!("{text}");
    } else {
        print!("{}", wire::render_table(&report));
    }
    Ok(())
}
