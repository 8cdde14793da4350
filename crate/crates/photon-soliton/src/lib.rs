//! Ellipsoidal photon-soliton electromagnetics.
//!
//! Models a photon of wavelength lambda as a monochromatic vacuum solution
//! of Maxwell's equations confined by causality to a circular ellipsoid of
//! length lambda and diameter lambda/pi, with an evanescent 1/r tail
//! outside the envelope. The crate evaluates the six complex field
//! components on both branches, derives the amplitude normalization by
//! energy quadrature, numerically verifies the claimed invariants (Maxwell
//! and d'Alembert residuals, angular-momentum/energy/momentum eigenvalues,
//! matching and orthogonality conditions), and computes the model's
//! experimental predictions.
//!
//! Modules:
//!
//! * [`constants`]: SI constants (CODATA 2018), overridable;
//! * [`photon`]: polarization pair (A, B) and wave parameters;
//! * [`field`]: wavefunction and interior / evanescent / piecewise fields;
//! * [`geometry`]: causality ellipsoid, containment, interval classification;
//! * [`normalization`]: closed-form and quadrature-derived amplitudes;
//! * [`quadrature`]: Gauss-Legendre product rule and Monte-Carlo integrators;
//! * [`verify`]: residual and eigenvalue verification machinery;
//! * [`suite`]: seeded verification suites with pass/fail outcomes;
//! * [`experiments`]: quantitative predictions and model-extension curves;
//! * [`report`]: versioned JSON/CSV report envelope;
//! * [`config`]: run configuration and `PHOTON_SOLITON_CONFIG` loading;
//! * [`cli`]: the command-line surface (thin binary wrapper).
//!
//! All physics operations are pure functions of their inputs with no shared
//! mutable state; values are `Send + Sync` and safe to use from any number
//! of threads. Seeded operations (suites, Monte-Carlo) are deterministic
//! for a fixed seed and budget.
//!
//! ```
//! use photon_soliton::constants::PhysicalConstants;
//! use photon_soliton::field::{field_total, SpacetimePoint};
//! use photon_soliton::normalization::NormalizationPair;
//! use photon_soliton::photon::{PhotonSpec, Polarization};
//!
//! let k = PhysicalConstants::codata2018();
//! let spec = PhotonSpec::new(650e-9, 1, Polarization::spin_plus()).unwrap();
//! let norm = NormalizationPair::closed_form(spec.lambda, spec.n, &k).unwrap();
//! let point = SpacetimePoint::cylindrical(5e-8, 0.0, 0.0, 0.0).unwrap();
//! let sample = field_total(&point, &spec, &norm, &k).unwrap();
//! assert_eq!(sample.e.z.norm(), 0.0); // transverse wave
//! ```

pub mod cli;
pub mod config;
pub mod constants;
pub mod error;
pub mod experiments;
pub mod field;
pub mod geometry;
pub mod normalization;
pub mod photon;
pub mod quadrature;
pub mod report;
pub mod suite;
pub mod verify;

pub use constants::PhysicalConstants;
pub use error::{Error, Result};
pub use field::{FieldSample, SpacetimePoint};
pub use photon::{PhotonSpec, Polarization};
