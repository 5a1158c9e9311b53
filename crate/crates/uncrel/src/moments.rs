//! First and second moments of an observable pair on a pure state.
//!
//! Variances are computed as squared norms of deviation vectors
//! `psi_j = (O - <O>) psi`, which keeps them nonnegative by construction; the
//! textbook difference form `<O^2> - <O>^2` is used only as a cross-check in
//! tests.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{inner, ComplexVector, HermitianMatrix};
use crate::Tolerances;

/// Absolute bound on the imaginary part tolerated in an expectation value.
const IMAG_TOL: f64 = 1e-9;

/// Norm below which a deviation vector cannot be normalized into a witness.
const NULL_NORM: f64 = 1e-12;

pub(crate) fn check_normalized(v: &ComplexVector, tol: &Tolerances) -> Result<()> {
    let deviation = (v.norm() - 1.0).abs();
    if deviation > tol.norm {
        return Err(Error::NotNormalized {
            deviation,
            tol: tol.norm,
        });
    }
    Ok(())
}

fn real_expectation(value: Complex64) -> Result<f64> {
    if value.im.abs() > IMAG_TOL {
        return Err(Error::NonRealExpectation { imag: value.im });
    }
    Ok(value.re)
}

/// `<psi|A|psi>` on a normalized state.
///
/// The imaginary part is asserted small and then discarded, so a
/// non-Hermitian matrix smuggled past validation fails here instead of
/// silently skewing results.
pub fn expectation(a: &HermitianMatrix, psi: &ComplexVector, tol: &Tolerances) -> Result<f64> {
    check_normalized(psi, tol)?;
    real_expectation(inner(psi, &a.apply(psi)?)?)
}

/// Deviation vector `(A - <A>) psi`.
pub fn deviation_vector(
    a: &HermitianMatrix,
    psi: &ComplexVector,
    tol: &Tolerances,
) -> Result<ComplexVector> {
    check_normalized(psi, tol)?;
    let apsi = a.apply(psi)?;
    let mean = real_expectation(inner(psi, &apsi)?)?;
    apsi.add_scaled(Complex64::new(-mean, 0.0), psi)
}

/// Variance of `A` on `psi`, the squared norm of the deviation vector.
pub fn variance(a: &HermitianMatrix, psi: &ComplexVector, tol: &Tolerances) -> Result<f64> {
    Ok(deviation_vector(a, psi, tol)?.norm_sqr())
}

/// Normalized deviation vector `psi1 / ||psi1||`.
///
/// This is the witness choice that collapses the corrected bounds back to
/// the classical product relations. Rejected when the variance vanishes,
/// since a null vector cannot be normalized.
pub fn normalized_deviation(
    a: &HermitianMatrix,
    psi: &ComplexVector,
    tol: &Tolerances,
) -> Result<ComplexVector> {
    let dev = deviation_vector(a, psi, tol)?;
    if dev.norm() <= NULL_NORM {
        return Err(Error::ZeroVariance);
    }
    dev.normalized()
}

/// Means, variances, and cross moments of an observable pair on one state.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSet {
    /// `<A>`.
    pub mean_a: f64,
    /// `<B>`.
    pub mean_b: f64,
    /// Variance of `A`.
    pub var_a: f64,
    /// Variance of `B`.
    pub var_b: f64,
    /// `<psi1|psi2>` between the deviation vectors.
    pub overlap: Complex64,
    /// Commutator expectation `<[A, B]>`, purely imaginary.
    pub comm: Complex64,
    /// Centered anticommutator expectation `<{A, B}> - 2 <A><B>`.
    pub acov: f64,
}

impl MomentSet {
    /// Largest normalized residual among the internal consistency identities:
    /// `comm` purely imaginary, `comm = overlap - conj(overlap)`,
    /// `acov = 2 Re(overlap)`, and `|overlap|^2 = (|comm|^2 + acov^2) / 4`.
    pub fn max_identity_error(&self) -> f64 {
        let r1 = self.comm.re.abs() / (1.0 + self.comm.norm());
        let r2 = (self.comm - (self.overlap - self.overlap.conj())).norm()
            / (1.0 + self.comm.norm());
        let r3 = (self.acov - 2.0 * self.overlap.re).abs() / (1.0 + self.acov.abs());
        let r4 = (self.overlap.norm_sqr() - 0.25 * (self.comm.norm_sqr() + self.acov * self.acov))
            .abs()
            / (1.0 + self.overlap.norm_sqr());
        r1.max(r2).max(r3).max(r4)
    }
}

/// All moments of the pair `(A, B)` on the normalized state `psi`.
pub fn moment_set(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    psi: &ComplexVector,
    tol: &Tolerances,
) -> Result<MomentSet> {
    check_normalized(psi, tol)?;
    let apsi = a.apply(psi)?;
    let bpsi = b.apply(psi)?;
    let mean_a = real_expectation(inner(psi, &apsi)?)?;
    let mean_b = real_expectation(inner(psi, &bpsi)?)?;
    let psi1 = apsi.add_scaled(Complex64::new(-mean_a, 0.0), psi)?;
    let psi2 = bpsi.add_scaled(Complex64::new(-mean_b, 0.0), psi)?;
    // <AB> via <A psi|B psi>; subtracting the conjugate gives <AB> - <BA>,
    // so comm comes out exactly imaginary while still being computed on a
    // different path than overlap.
    let ab = inner(&apsi, &bpsi)?;
    Ok(MomentSet {
        mean_a,
        mean_b,
        var_a: psi1.norm_sqr(),
        var_b: psi2.norm_sqr(),
        overlap: inner(&psi1, &psi2)?,
        comm: ab - ab.conj(),
        acov: 2.0 * (ab.re - mean_a * mean_b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{random_hermitian, random_unit_vector, RngSeed};
    use crate::scenarios::{pauli_operators, spin1_operators, spin1_state};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn expectation_of_jz_on_tilted_state() {
        let (_, _, jz) = spin1_operators();
        let psi = spin1_state(PI / 6.0);
        // cos^2(t) - sin^2(t) = cos(2t) = 1/2 at t = pi/6
        assert_abs_diff_eq!(expectation(&jz, &psi, &tol()).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn expectation_rejects_unnormalized_state() {
        let (_, _, jz) = spin1_operators();
        let psi = ComplexVector::from_reals(&[0.9, 0.0, 0.0]);
        assert!(matches!(
            expectation(&jz, &psi, &tol()),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn expectation_flags_non_hermitian_operator() {
        let m = HermitianMatrix::from_rows(vec![
            vec![c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let psi = ComplexVector::from_reals(&[1.0, 0.0]);
        assert!(matches!(
            expectation(&m, &psi, &tol()),
            Err(Error::NonRealExpectation { .. })
        ));
    }

    #[test]
    fn deviation_vector_of_plus_state_under_jx() {
        let (jx, _, _) = spin1_operators();
        let psi = ComplexVector::from_reals(&[1.0, 0.0, 0.0]);
        let dev = deviation_vector(&jx, &psi, &tol()).unwrap();
        let expected = ComplexVector::from_reals(&[0.0, std::f64::consts::FRAC_1_SQRT_2, 0.0]);
        for (a, b) in dev.entries().iter().zip(expected.entries()) {
            assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn deviation_vector_of_eigenstate_is_null() {
        let (_, _, jz) = spin1_operators();
        let psi = ComplexVector::from_reals(&[1.0, 0.0, 0.0]);
        let dev = deviation_vector(&jz, &psi, &tol()).unwrap();
        assert_abs_diff_eq!(dev.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn deviation_vector_is_orthogonal_to_state() {
        for seed in 0..100u64 {
            let a = random_hermitian(4, RngSeed(seed));
            let psi = random_unit_vector(4, RngSeed(10_000 + seed));
            let dev = deviation_vector(&a, &psi, &tol()).unwrap();
            assert_abs_diff_eq!(inner(&psi, &dev).unwrap().norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn variance_of_jx_on_plus_state() {
        let (jx, _, _) = spin1_operators();
        assert_abs_diff_eq!(
            variance(&jx, &spin1_state(0.0), &tol()).unwrap(),
            0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn variance_of_sigma_y_on_up_state() {
        let (_, sy, _) = pauli_operators();
        let up = ComplexVector::from_reals(&[1.0, 0.0]);
        assert_abs_diff_eq!(variance(&sy, &up, &tol()).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn variance_matches_difference_form() {
        for seed in 0..200u64 {
            let a = random_hermitian(5, RngSeed(seed));
            let psi = random_unit_vector(5, RngSeed(40_000 + seed));
            let direct = variance(&a, &psi, &tol()).unwrap();
            let apsi = a.apply(&psi).unwrap();
            let second = apsi.norm_sqr();
            let mean = expectation(&a, &psi, &tol()).unwrap();
            assert_relative_eq!(direct, second - mean * mean, max_relative = 1e-10, epsilon = 1e-12);
        }
    }

    #[test]
    fn normalized_deviation_is_unit_and_orthogonal() {
        let a = random_hermitian(3, RngSeed(3));
        let psi = random_unit_vector(3, RngSeed(4));
        let w = normalized_deviation(&a, &psi, &tol()).unwrap();
        assert_abs_diff_eq!(w.norm(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inner(&psi, &w).unwrap().norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn normalized_deviation_rejects_eigenstate() {
        let (_, _, jz) = spin1_operators();
        let psi = ComplexVector::from_reals(&[1.0, 0.0, 0.0]);
        assert_eq!(
            normalized_deviation(&jz, &psi, &tol()),
            Err(Error::ZeroVariance)
        );
    }

    #[test]
    fn qubit_moments_on_up_state() {
        let (sx, sy, _) = pauli_operators();
        let up = ComplexVector::from_reals(&[1.0, 0.0]);
        let m = moment_set(&sx, &sy, &up, &tol()).unwrap();
        assert_abs_diff_eq!(m.mean_a, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.mean_b, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.var_a, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m.var_b, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!((m.overlap - c(0.0, 1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((m.comm - c(0.0, 2.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m.acov, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn moments_of_operator_with_itself() {
        let a = random_hermitian(4, RngSeed(77));
        let psi = random_unit_vector(4, RngSeed(78));
        let m = moment_set(&a, &a, &psi, &tol()).unwrap();
        assert_abs_diff_eq!(m.comm.norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!((m.overlap - c(m.var_a, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(m.acov, 2.0 * m.var_a, max_relative = 1e-10);
    }

    #[test]
    fn spin1_family_moments_follow_closed_form() {
        let (jx, jy, _) = spin1_operators();
        for k in 0..=180 {
            let theta = PI * k as f64 / 180.0;
            let m = moment_set(&jx, &jy, &spin1_state(theta), &tol()).unwrap();
            let half_cos = 0.5 * (2.0 * theta).cos();
            assert_abs_diff_eq!((m.overlap - c(0.0, half_cos)).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(
                (m.comm - c(0.0, 2.0 * half_cos)).norm(),
                0.0,
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(m.acov, 0.0, epsilon = 1e-12);
            let cs = theta.cos() + theta.sin();
            let cd = theta.cos() - theta.sin();
            assert_abs_diff_eq!(m.var_a, 0.5 * cs * cs, epsilon = 1e-12);
            assert_abs_diff_eq!(m.var_b, 0.5 * cd * cd, epsilon = 1e-12);
        }
    }

    #[test]
    fn moment_identities_hold_on_random_instances() {
        for seed in 0..200u64 {
            let a = random_hermitian(6, RngSeed(seed));
            let b = random_hermitian(6, RngSeed(20_000 + seed));
            let psi = random_unit_vector(6, RngSeed(30_000 + seed));
            let m = moment_set(&a, &b, &psi, &tol()).unwrap();
            assert!(m.max_identity_error() <= 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn moments_are_invariant_under_global_phase() {
        let (sx, sy, _) = pauli_operators();
        let psi = random_unit_vector(2, RngSeed(91));
        let phase = Complex64::from_polar(1.0, 1.234);
        let m0 = moment_set(&sx, &sy, &psi, &tol()).unwrap();
        let m1 = moment_set(&sx, &sy, &psi.scaled(phase), &tol()).unwrap();
        assert_abs_diff_eq!(m0.mean_a, m1.mean_a, epsilon = 1e-12);
        assert_abs_diff_eq!(m0.var_a, m1.var_a, epsilon = 1e-12);
        assert_abs_diff_eq!(m0.var_b, m1.var_b, epsilon = 1e-12);
        assert_abs_diff_eq!((m0.overlap - m1.overlap).norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!((m0.comm - m1.comm).norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m0.acov, m1.acov, epsilon = 1e-12);
    }
}
