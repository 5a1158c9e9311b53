//! Reference instances: a spin-1 family on which the sum-form bound stays
//! saturated while every product bound collapses, and the Pauli operators.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::linalg::{ComplexVector, HermitianMatrix};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// State `cos(theta) |+1> + sin(theta) |-1>` in the `(|+1>, |0>, |-1>)`
/// eigenbasis of `Jz`.
pub fn spin1_state(theta: f64) -> ComplexVector {
    ComplexVector::from_reals(&[theta.cos(), 0.0, theta.sin()])
}

/// Spin-1 angular momentum components `(Jx, Jy, Jz)` in the `Jz` eigenbasis,
/// hbar = 1: each has eigenvalues {+1, 0, -1} and `[Jx, Jy] = i Jz`.
pub fn spin1_operators() -> (HermitianMatrix, HermitianMatrix, HermitianMatrix) {
    let s = FRAC_1_SQRT_2;
    let jx = HermitianMatrix::from_rows(vec![
        vec![c(0.0, 0.0), c(s, 0.0), c(0.0, 0.0)],
        vec![c(s, 0.0), c(0.0, 0.0), c(s, 0.0)],
        vec![c(0.0, 0.0), c(s, 0.0), c(0.0, 0.0)],
    ])
    .expect("square");
    let jy = HermitianMatrix::from_rows(vec![
        vec![c(0.0, 0.0), c(0.0, -s), c(0.0, 0.0)],
        vec![c(0.0, s), c(0.0, 0.0), c(0.0, -s)],
        vec![c(0.0, 0.0), c(0.0, s), c(0.0, 0.0)],
    ])
    .expect("square");
    let jz = HermitianMatrix::from_rows(vec![
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    ])
    .expect("square");
    (jx, jy, jz)
}

/// Pauli matrices `(sigma_x, sigma_y, sigma_z)`.
pub fn pauli_operators() -> (HermitianMatrix, HermitianMatrix, HermitianMatrix) {
    let sx = HermitianMatrix::from_rows(vec![
        vec![c(0.0, 0.0), c(1.0, 0.0)],
        vec![c(1.0, 0.0), c(0.0, 0.0)],
    ])
    .expect("square");
    let sy = HermitianMatrix::from_rows(vec![
        vec![c(0.0, 0.0), c(0.0, -1.0)],
        vec![c(0.0, 1.0), c(0.0, 0.0)],
    ])
    .expect("square");
    let sz = HermitianMatrix::from_rows(vec![
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(-1.0, 0.0)],
    ])
    .expect("square");
    (sx, sy, sz)
}

/// One member of the spin-1 reference family.
#[derive(Debug, Clone, PartialEq)]
pub struct Spin1Instance {
    pub theta: f64,
    /// `cos(theta) |+1> + sin(theta) |-1>`.
    pub state: ComplexVector,
    /// First observable, fixed to `Jx`.
    pub a: HermitianMatrix,
    /// Second observable, fixed to `Jy`.
    pub b: HermitianMatrix,
    /// Witness `|0>`, orthogonal to every state of the family.
    pub witness: ComplexVector,
}

/// The reference family instance at `theta`.
///
/// The observable pair is fixed to `(Jx, Jy)`; other pairs can be assembled
/// from [`spin1_operators`] directly. On this family both deviation vectors
/// are supported on `|0>` alone, so with witness `|0>` the deficits vanish
/// identically: the sum-form bound is saturated at the nonzero value 1 for
/// every `theta`, both sides of the corrected product bounds vanish, and the
/// classical Robertson bound is saturated at `cos^2(2 theta) / 4`.
pub fn spin1_instance(theta: f64) -> Spin1Instance {
    let (jx, jy, _) = spin1_operators();
    Spin1Instance {
        theta,
        state: spin1_state(theta),
        a: jx,
        b: jy,
        witness: ComplexVector::basis_state(3, 1),
    }
}
