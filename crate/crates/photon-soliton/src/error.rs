//! Crate-wide error type.

/// Errors produced by field evaluation, geometry, quadrature and verification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("wavelength must be positive and finite, got {0}")]
    InvalidWavelength(f64),

    #[error("quantum number must be >= 1, got {0}")]
    InvalidQuantumNumber(u32),

    #[error("polarization coefficients must not both be zero")]
    ZeroPolarization,

    #[error("|A|^2 + |B|^2 = {norm_sq} is not 1 within {tolerance:e}")]
    UnnormalizedPolarization { norm_sq: f64, tolerance: f64 },

    #[error("radial coordinate must be non-negative, got {0}")]
    NegativeRadius(f64),

    #[error("1/r branch is singular on the propagation axis (r = 0)")]
    AxisSingularity,

    #[error("polar basis is undefined on the propagation axis (r = 0)")]
    PolarBasisUndefined,

    #[error("{name} = {value} violates {constraint}")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error(
        "amplitudes are not matched at the envelope radius: beta = {beta}, \
         alpha*(lambda/2pi)^2 = {expected_beta}"
    )]
    UnmatchedAmplitudes { beta: f64, expected_beta: f64 },

    #[error("stencil half-width {required} m reaches the propagation axis (point has r = {r} m)")]
    StencilNearAxis { r: f64, required: f64 },

    #[error(
        "stencil half-width {required} m straddles the envelope boundary \
         (point is ~{distance} m from the surface)"
    )]
    StencilNearBoundary { distance: f64, required: f64 },

    #[error("polarization is a superposition of both spin states; not an Lz eigenstate")]
    NotAnEigenstate,

    #[error("wavefunction vanishes at the sample point; operator ratio is undefined")]
    UndefinedRatio,

    #[error("quadrature budget {budget} is below the minimum of {minimum}")]
    BudgetTooSmall { budget: usize, minimum: usize },

    #[error("physical constants are inconsistent: {0}")]
    InvalidConstants(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
