//! Dense complex vectors and Hermitian matrices, just large enough for the
//! bound computations: inner products, matrix application, orthogonal
//! complements, and deterministic random sampling.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Residual norm below which a Gram-Schmidt candidate counts as linearly
/// dependent and is skipped.
const GS_SKIP: f64 = 1e-8;

/// Seed for the deterministic sampling helpers.
///
/// Equal seeds reproduce identical draws. [`RngSeed::derive`] yields
/// decorrelated child seeds for indexed work items (trials, restarts), so
/// per-item streams never depend on processing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// ChaCha stream seeded from this value.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Child seed for work item `index` (splitmix64 finalizer).
    pub fn derive(self, index: u64) -> RngSeed {
        let mut z = self.0 ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        RngSeed(z ^ (z >> 31))
    }
}

/// Dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        ComplexVector { entries }
    }

    /// Vector with the given real amplitudes.
    pub fn from_reals(values: &[f64]) -> Self {
        ComplexVector {
            entries: values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Standard basis vector `e_index` in dimension `dim`.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "basis index {index} out of range for dimension {dim}"
        );
        let mut entries = vec![Complex64::new(0.0, 0.0); dim];
        entries[index] = Complex64::new(1.0, 0.0);
        ComplexVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `self / ||self||`.
    pub fn normalized(&self) -> Result<ComplexVector> {
        let n = self.norm();
        if !(n > 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> ComplexVector {
        ComplexVector {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: Complex64, other: &ComplexVector) -> Result<ComplexVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(ComplexVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + c * b)
                .collect(),
        })
    }
}

/// Inner product `<u|v>`, conjugate-linear in `u`.
pub fn inner(u: &ComplexVector, v: &ComplexVector) -> Result<Complex64> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            actual: v.dim(),
        });
    }
    Ok(u.entries()
        .iter()
        .zip(v.entries())
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// Dense square complex matrix in row-major order, meant to hold an
/// observable. Construction only enforces squareness; run [`is_hermitian`]
/// on untrusted input before treating it as an observable.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(HermitianMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = Complex64::new(1.0, 0.0);
        }
        HermitianMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// Largest entrywise deviation |M - M^dagger|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let dev = (self.at(r, c) - self.at(c, r).conj()).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    /// `M v`.
    pub fn apply(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.dim(),
            });
        }
        let entries = (0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.entries())
                    .map(|(m, x)| m * x)
                    .sum()
            })
            .collect();
        Ok(ComplexVector { entries })
    }
}

/// True when `m` equals its conjugate transpose entrywise within `tol`.
pub fn is_hermitian(m: &HermitianMatrix, tol: f64) -> bool {
    m.hermiticity_deviation() <= tol
}

/// Orthonormal basis of the orthogonal complement of `psi` (`d - 1` vectors).
///
/// Gram-Schmidt completion of `psi/||psi||` by the standard basis, with a
/// second orthogonalization pass for stability. The global phase of each
/// basis vector is unspecified.
pub fn complement_basis(psi: &ComplexVector) -> Result<Vec<ComplexVector>> {
    let d = psi.dim();
    let mut basis = vec![psi.normalized()?];
    for k in 0..d {
        if basis.len() == d {
            break;
        }
        let mut v = ComplexVector::basis_state(d, k);
        for _ in 0..2 {
            for b in &basis {
                let coeff = inner(b, &v)?;
                v = v.add_scaled(-coeff, b)?;
            }
        }
        if v.norm() > GS_SKIP {
            basis.push(v.normalized()?);
        }
    }
    basis.remove(0);
    Ok(basis)
}

/// Haar-distributed unit vector: `2 dim` independent standard normal
/// components, normalized. Deterministic in `seed`.
pub fn random_unit_vector(dim: usize, seed: RngSeed) -> ComplexVector {
    assert!(dim >= 2, "dimension must be at least 2, got {dim}");
    let mut rng = seed.rng();
    loop {
        let entries: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        if let Ok(unit) = ComplexVector::new(entries).normalized() {
            return unit;
        }
    }
}

/// Gaussian Hermitian matrix `(G + G^dagger)/2`, where `G` has independent
/// standard normal real and imaginary parts. Deterministic in `seed`.
pub fn random_hermitian(dim: usize, seed: RngSeed) -> HermitianMatrix {
    assert!(dim >= 2, "dimension must be at least 2, got {dim}");
    let mut rng = seed.rng();
    let g: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            entries[r * dim + c] = (g[r * dim + c] + g[c * dim + r].conj()) * 0.5;
        }
    }
    HermitianMatrix { dim, entries }
}

/// Haar-distributed unit vector orthogonal to `psi`: a Haar vector projected
/// onto the complement and renormalized. Deterministic in `seed`.
pub fn random_orthogonal_unit(psi: &ComplexVector, seed: RngSeed) -> Result<ComplexVector> {
    let unit = psi.normalized()?;
    let mut attempt = 0u64;
    loop {
        let v = random_unit_vector(psi.dim(), seed.derive(attempt));
        let coeff = inner(&unit, &v)?;
        let residual = v.add_scaled(-coeff, &unit)?;
        if residual.norm() > 1e-6 {
            return residual.normalized();
        }
        attempt += 1;
    }
}
