//! The inequality family: classical product bounds and their
//! witness-corrected refinements.
//!
//! A witness is a unit vector orthogonal to the state. Projecting the
//! deviation vectors `psi1`, `psi2` onto it leaves the deficits
//! `x = Var(A) - |<w|psi1>|^2` and `y = Var(B) - |<w|psi2>|^2`, both
//! nonnegative by the Schwarz inequality, and the cross term
//! `z = <w|psi2><psi1|w>`. Expanding `||phi||^2 >= |<w|phi>|^2` for
//! `phi = psi1 + (beta + i alpha) psi2` gives
//!
//! ```text
//! x + (beta^2 + alpha^2) y + 2 beta Re(overlap - z) - 2 alpha Im(overlap - z) >= 0
//! ```
//!
//! whose parameter minima are the corrected product bounds below. Unlike the
//! classical relations they stay informative when the state is an eigenstate
//! of one observable.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{inner, ComplexVector, HermitianMatrix};
use crate::moments::{check_normalized, deviation_vector, moment_set, MomentSet};
use crate::Tolerances;

/// Window below zero inside which a deficit is clamped to exactly zero.
const DEFICIT_CLAMP: f64 = 1e-9;

/// Sign selecting one of the two paired sum inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Witness-side quantities entering the corrected bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessContext {
    /// `<witness|psi1>`.
    pub overlap1: Complex64,
    /// `<witness|psi2>`.
    pub overlap2: Complex64,
    /// Cross term `<witness|psi2><psi1|witness>`.
    pub cross: Complex64,
    /// `Var(A) - |overlap1|^2`, clamped into `[0, inf)`.
    pub deficit_a: f64,
    /// `Var(B) - |overlap2|^2`, clamped into `[0, inf)`.
    pub deficit_b: f64,
}

fn clamp_deficit(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -DEFICIT_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::NegativeDeficit { value })
    }
}

impl WitnessContext {
    /// Context from precomputed overlaps and variances. Deficits that dip
    /// below zero by roundoff are clamped; anything further negative means
    /// the inputs were not a unit witness against a unit state.
    pub fn from_overlaps(
        overlap1: Complex64,
        overlap2: Complex64,
        var_a: f64,
        var_b: f64,
    ) -> Result<Self> {
        Ok(WitnessContext {
            overlap1,
            overlap2,
            cross: overlap2 * overlap1.conj(),
            deficit_a: clamp_deficit(var_a - overlap1.norm_sqr())?,
            deficit_b: clamp_deficit(var_b - overlap2.norm_sqr())?,
        })
    }
}

/// Projections of the deviation vectors onto a unit witness orthogonal to
/// `psi`.
pub fn witness_context(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    psi: &ComplexVector,
    witness: &ComplexVector,
    tol: &Tolerances,
) -> Result<WitnessContext> {
    check_normalized(witness, tol)?;
    let overlap = inner(psi, witness)?.norm();
    if overlap > tol.orth {
        return Err(Error::NotOrthogonal {
            overlap,
            tol: tol.orth,
        });
    }
    let psi1 = deviation_vector(a, psi, tol)?;
    let psi2 = deviation_vector(b, psi, tol)?;
    WitnessContext::from_overlaps(
        inner(witness, &psi1)?,
        inner(witness, &psi2)?,
        psi1.norm_sqr(),
        psi2.norm_sqr(),
    )
}

/// One evaluated inequality: left side, right side, and their gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityResult {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; nonnegative up to roundoff for valid inputs.
    pub gap: f64,
    /// True when both sides vanish within the triviality tolerance, i.e. the
    /// inequality degenerated to 0 >= 0.
    pub trivial: bool,
}

impl InequalityResult {
    fn new(lhs: f64, rhs: f64, tol: &Tolerances) -> Self {
        InequalityResult {
            lhs,
            rhs,
            gap: lhs - rhs,
            trivial: lhs.abs() <= tol.trivial && rhs.abs() <= tol.trivial,
        }
    }
}

/// Residual of the Schwarz expansion along the `alpha` axis,
/// `x + alpha^2 y - 2 alpha Im(overlap - cross)`.
///
/// Nonnegative for every real `alpha`; at `alpha = +-1` it equals the slack
/// of the corresponding paired sum inequality.
pub fn schwarz_residual(ctx: &WitnessContext, m: &MomentSet, alpha: f64) -> f64 {
    let w = m.overlap - ctx.cross;
    ctx.deficit_a + alpha * alpha * ctx.deficit_b - 2.0 * alpha * w.im
}

/// Paired sum inequality (Maccone-Pati form)
/// `Var(A) + Var(B) >= |o1|^2 + |o2|^2 + 2 sign Im(overlap - cross)`.
///
/// Holds for both signs; the sign making the last term positive gives the
/// stronger bound. Stays informative when `psi` is an eigenstate of one
/// observable, where the product bounds collapse.
pub fn mp_sum(ctx: &WitnessContext, m: &MomentSet, sign: Sign, tol: &Tolerances) -> InequalityResult {
    let w = m.overlap - ctx.cross;
    let lhs = m.var_a + m.var_b;
    let rhs = ctx.overlap1.norm_sqr() + ctx.overlap2.norm_sqr() + 2.0 * sign.value() * w.im;
    InequalityResult::new(lhs, rhs, tol)
}

fn comm_correction_sqr(ctx: &WitnessContext, m: &MomentSet) -> f64 {
    (m.comm - (ctx.cross - ctx.cross.conj())).norm_sqr()
}

fn acov_correction_sqr(ctx: &WitnessContext, m: &MomentSet) -> f64 {
    let t = m.acov - 2.0 * ctx.cross.re;
    t * t
}

/// Witness-corrected product bound
/// `x y >= |<[A,B]> - (z - conj z)|^2 / 4`,
/// the `alpha`-minimized Schwarz expansion. Generalizes the Robertson bound,
/// which is the special case of vanishing witness overlaps.
pub fn generalized_robertson(
    ctx: &WitnessContext,
    m: &MomentSet,
    tol: &Tolerances,
) -> InequalityResult {
    InequalityResult::new(
        ctx.deficit_a * ctx.deficit_b,
        0.25 * comm_correction_sqr(ctx, m),
        tol,
    )
}

/// Witness-corrected product bound with both correction terms
/// `x y >= |<[A,B]> - (z - conj z)|^2 / 4 + |acov - (z + conj z)|^2 / 4`,
/// the `(beta, alpha)`-minimized Schwarz expansion. Generalizes the
/// Schrodinger bound; the right side equals `|overlap - z|^2`.
pub fn generalized_schrodinger(
    ctx: &WitnessContext,
    m: &MomentSet,
    tol: &Tolerances,
) -> InequalityResult {
    InequalityResult::new(
        ctx.deficit_a * ctx.deficit_b,
        0.25 * (comm_correction_sqr(ctx, m) + acov_correction_sqr(ctx, m)),
        tol,
    )
}

/// Sum-form bound
/// `Var(A) + Var(B) >= |o1|^2 + |o2|^2 + sqrt(|..|^2 + |..|^2)`,
/// with the same two correction terms under the root. Rearranges the
/// two-term product bound through the arithmetic-geometric mean step, so it
/// saturates exactly when the deficits agree and the product bound is tight.
pub fn generalized_sum(ctx: &WitnessContext, m: &MomentSet, tol: &Tolerances) -> InequalityResult {
    let root = (comm_correction_sqr(ctx, m) + acov_correction_sqr(ctx, m)).sqrt();
    InequalityResult::new(
        m.var_a + m.var_b,
        ctx.overlap1.norm_sqr() + ctx.overlap2.norm_sqr() + root,
        tol,
    )
}

/// Robertson product bound `Var(A) Var(B) >= |<[A,B]>|^2 / 4`.
pub fn robertson(m: &MomentSet, tol: &Tolerances) -> InequalityResult {
    InequalityResult::new(m.var_a * m.var_b, 0.25 * m.comm.norm_sqr(), tol)
}

/// Schrodinger product bound
/// `Var(A) Var(B) >= |<[A,B]>|^2 / 4 + acov^2 / 4`; the right side equals
/// `|<psi1|psi2>|^2`.
pub fn schrodinger(m: &MomentSet, tol: &Tolerances) -> InequalityResult {
    InequalityResult::new(
        m.var_a * m.var_b,
        0.25 * (m.comm.norm_sqr() + m.acov * m.acov),
        tol,
    )
}

/// Every bound evaluated on one instance. Witness-corrected entries are
/// present only when a witness was supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub moments: MomentSet,
    pub witness: Option<WitnessContext>,
    pub robertson: InequalityResult,
    pub schrodinger: InequalityResult,
    pub generalized_robertson: Option<InequalityResult>,
    pub generalized_schrodinger: Option<InequalityResult>,
    pub generalized_sum: Option<InequalityResult>,
    pub mp_plus: Option<InequalityResult>,
    pub mp_minus: Option<InequalityResult>,
}

impl BoundReport {
    /// Present inequalities with stable labels, classical bounds first.
    pub fn entries(&self) -> Vec<(&'static str, InequalityResult)> {
        let mut out = vec![
            ("robertson", self.robertson),
            ("schrodinger", self.schrodinger),
        ];
        for (label, entry) in [
            ("generalized_robertson", &self.generalized_robertson),
            ("generalized_schrodinger", &self.generalized_schrodinger),
            ("generalized_sum", &self.generalized_sum),
            ("mp_plus", &self.mp_plus),
            ("mp_minus", &self.mp_minus),
        ] {
            if let Some(r) = entry {
                out.push((label, *r));
            }
        }
        out
    }

    /// Smallest gap among the present inequalities.
    pub fn min_gap(&self) -> f64 {
        self.entries()
            .iter()
            .map(|(_, r)| r.gap)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Full evaluation of an instance: moments, the classical bounds, and, when
/// a witness is given, the corrected bounds.
pub fn bound_report(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    psi: &ComplexVector,
    witness: Option<&ComplexVector>,
    tol: &Tolerances,
) -> Result<BoundReport> {
    let m = moment_set(a, b, psi, tol)?;
    let mut report = BoundReport {
        robertson: robertson(&m, tol),
        schrodinger: schrodinger(&m, tol),
        moments: m,
        witness: None,
        generalized_robertson: None,
        generalized_schrodinger: None,
        generalized_sum: None,
        mp_plus: None,
        mp_minus: None,
    };
    if let Some(w) = witness {
        let ctx = witness_context(a, b, psi, w, tol)?;
        let m = &report.moments;
        report.generalized_robertson = Some(generalized_robertson(&ctx, m, tol));
        report.generalized_schrodinger = Some(generalized_schrodinger(&ctx, m, tol));
        report.generalized_sum = Some(generalized_sum(&ctx, m, tol));
        report.mp_plus = Some(mp_sum(&ctx, m, Sign::Plus, tol));
        report.mp_minus = Some(mp_sum(&ctx, m, Sign::Minus, tol));
        report.witness = Some(ctx);
    }
    Ok(report)
}
