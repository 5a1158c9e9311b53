use thiserror::Error;

/// Errors raised by state, moment, and bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vector is not normalized: | ||v|| - 1 | = {deviation:.3e} exceeds {tol:.3e}")]
    NotNormalized { deviation: f64, tol: f64 },

    #[error("expectation value has imaginary part {imag:.3e}; operator is not Hermitian on this state")]
    NonRealExpectation { imag: f64 },

    #[error("vector has zero norm")]
    ZeroVector,

    #[error("witness is not orthogonal to the state: overlap {overlap:.3e} exceeds {tol:.3e}")]
    NotOrthogonal { overlap: f64, tol: f64 },

    #[error("deviation vector is null (zero variance); it cannot serve as a witness")]
    ZeroVariance,

    #[error("deficit {value:.3e} is negative beyond roundoff; inputs break the Schwarz bound")]
    NegativeDeficit { value: f64 },

    #[error("degenerate quadratic form: quadratic coefficient {b:.3e} vanishes but linear coefficient {linear:.3e} does not")]
    DegenerateInconsistent { b: f64, linear: f64 },

    #[error("combined deviation vector is numerically null; no saturating witness exists")]
    NullPhiVector,
}

pub type Result<T> = std::result::Result<T, Error>;
