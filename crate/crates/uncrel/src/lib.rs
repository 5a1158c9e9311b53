//! Uncertainty bounds for pairs of Hermitian observables on finite-dimensional
//! pure states.
//!
//! The classical Robertson and Schrodinger product bounds collapse to the
//! trivial statement 0 >= 0 whenever the state is an eigenstate of one
//! observable. Pairing the state with a unit witness vector orthogonal to it
//! repairs this: applying the Schwarz inequality to
//! `phi = psi1 + (beta + i alpha) psi2`, where `psi1` and `psi2` are the
//! deviation vectors of the two observables, yields a two-parameter family of
//! inequalities whose parameter minima give witness-corrected product bounds
//! and a sum-form bound. The classical relations are recovered for particular
//! witness choices.
//!
//! - [`linalg`]: dense complex vectors and Hermitian matrices, seeded sampling
//! - [`moments`]: means, variances, and cross moments of an observable pair
//! - [`bounds`]: witness contexts and the inequality family
//! - [`optimize`]: closed-form parameter minima and witness search
//! - [`scenarios`]: spin-1 and qubit reference instances

pub mod bounds;
pub mod error;
pub mod linalg;
pub mod moments;
pub mod optimize;
pub mod scenarios;

pub use bounds::{BoundReport, InequalityResult, Sign, WitnessContext};
pub use error::{Error, Result};
pub use linalg::{ComplexVector, HermitianMatrix, RngSeed};
pub use moments::MomentSet;
pub use num_complex::Complex64;
pub use optimize::{QuadraticForm, WitnessObjective, WitnessSearchResult};

/// Validation thresholds shared by moment and bound computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Entrywise bound on |M - M^dagger| in Hermiticity checks.
    pub herm: f64,
    /// Bound on the overlap |<psi|witness>| in orthogonality checks.
    pub orth: f64,
    /// Bound on | ||v|| - 1 | in normalization checks.
    pub norm: f64,
    /// Slack below zero allowed before an inequality gap counts as violated.
    pub gap: f64,
    /// Magnitude below which both sides of an inequality count as trivial.
    pub trivial: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            herm: 1e-9,
            orth: 1e-9,
            norm: 1e-9,
            gap: 1e-8,
            trivial: 1e-10,
        }
    }
}
