//! `verify`: randomized soundness campaign. Every inequality and the
//! underlying Schwarz expansion must hold on any valid instance, so a single
//! violation is an implementation bug; the offending instance is dumped for
//! replay.
//!
//! Trial `k` draws everything from seeds derived off the campaign seed, so
//! the campaign is reproducible and insensitive to trial ordering.

use clap::Args;
use rand::Rng;

use crate::{wire, CliError, TolArgs};
use uncrel::bounds::{bound_report, schwarz_residual};
use uncrel::linalg::{random_hermitian, random_orthogonal_unit, random_unit_vector};
use uncrel::{ComplexVector, HermitianMatrix, RngSeed, Tolerances};

/// Moment identities are exact algebra; this is pure roundoff headroom.
const IDENTITY_LIMIT: f64 = 1e-9;

#[derive(Args)]
pub struct VerifyArgs {
    /// Hilbert-space dimension of the random instances
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    /// Number of random instances
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Campaign seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Schwarz residual samples per trial
    #[arg(long, default_value_t = 16)]
    pub alphas_per_trial: u32,
    #[command(flatten)]
    pub tol: TolArgs,
}

struct Trial {
    a: HermitianMatrix,
    b: HermitianMatrix,
    psi: ComplexVector,
    witness: ComplexVector,
}

fn draw(dim: usize, seed: RngSeed) -> Result<Trial, uncrel::Error> {
    let psi = random_unit_vector(dim, seed.derive(3));
    let witness = random_orthogonal_unit(&psi, seed.derive(4))?;
    Ok(Trial {
        a: random_hermitian(dim, seed.derive(1)),
        b: random_hermitian(dim, seed.derive(2)),
        psi,
        witness,
    })
}

fn check(trial: &Trial, seed: RngSeed, alphas: u32, tol: &Tolerances) -> (f64, Vec<String>) {
    let mut problems = Vec::new();
    let report = match bound_report(&trial.a, &trial.b, &trial.psi, Some(&trial.witness), tol) {
        Ok(r) => r,
        Err(e) => return (f64::INFINITY, vec![format!("evaluation failed: {e}")]),
    };
    let identity = report.moments.max_identity_error();
    if identity > IDENTITY_LIMIT {
        problems.push(format!("moment identities drift by {identity:.3e}"));
    }
    for (label, r) in report.entries() {
        if r.gap < -tol.gap {
            problems.push(format!("{label} violated: gap {:.3e}", r.gap));
        }
    }
    let mut worst = report.min_gap();
    let ctx = report.witness.as_ref().expect("witness was supplied");
    let mut rng = seed.derive(5).rng();
    for _ in 0..alphas {
        let alpha = rng.random_range(-10.0..10.0);
        let r = schwarz_residual(ctx, &report.moments, alpha);
        worst = worst.min(r);
        if r < -tol.gap {
            problems.push(format!("schwarz residual at alpha {alpha:.6} is {r:.3e}"));
        }
    }
    (worst, problems)
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    if args.dim < 2 {
        return Err(CliError::Input(format!(
            "dim must be at least 2, got {}",
            args.dim
        )));
    }
    if args.trials < 1 {
        return Err(CliError::Input("trials must be at least 1".to_string()));
    }
    let tol = args.tol.resolve(Tolerances::default());
    let base = RngSeed(args.seed);
    let mut worst_gap = f64::INFINITY;
    let mut violations = 0u64;
    let mut dumped = false;

    for t in 0..args.trials {
        let trial_seed = base.derive(t);
        let trial = match draw(args.dim, trial_seed) {
            Ok(trial) => trial,
            Err(e) => {
                violations += 1;
                eprintln!("trial {t}: drawing the instance failed: {e}");
                continue;
            }
        };
        let (worst, problems) = check(&trial, trial_seed, args.alphas_per_trial, &tol);
        worst_gap = worst_gap.min(worst);
        if !problems.is_empty() {
            violations += 1;
            if !dumped {
                dumped = true;
                let dump = serde_json::json!({
                    "seed": args.seed,
                    "trial": t,
                    "dimension": args.dim,
                    "state": wire::vector_pairs(&trial.psi),
                    "A": wire::matrix_pairs(&trial.a),
                    "B": wire::matrix_pairs(&trial.b),
                    "witness": wire::vector_pairs(&trial.witness),
                    "problems": problems,
                });
                eprintln!(
                    "{}",
                    serde_json::to_string_pretty(&dump).expect("dump serializes")
                );
            }
        }
    }

    println!("trials          {}", args.trials);
    println!("dimension       {}", args.dim);
    println!("alpha samples   {}", args.alphas_per_trial);
    println!("violations      {violations}");
    println!("worst gap       {worst_gap:.16e}");
    if violations > 0 {
        return Err(CliError::Violation(format!(
            "{violations} of {} trials violated a bound",
            args.trials
        )));
    }
    Ok(())
}
