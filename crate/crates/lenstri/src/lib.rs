//! Numerical library for lens-space gamma functions and the integrable
//! lattice models built on them.
//!
//! The crate evaluates the lens elliptic gamma function, its hyperbolic
//! (non-compact quantum dilogarithm) degeneration, the associated
//! normalization functions and Boltzmann weights, and numerically certifies
//! the identities these objects satisfy: the elliptic and hyperbolic beta
//! sum/integral identities, both star-triangle relations, the lens
//! partition-function duality, the W(E7) transformation of the 8-parameter
//! sum/integral, the hyperbolic limit, and the normalization (hat-r /
//! sign-factor) equivalences.
//!
//! Layout:
//! - [`numerics`]: adaptive complex quadrature and certified series/products
//! - [`special`]: gamma functions, theta functions, Bernoulli polynomials,
//!   normalization functions
//! - [`weights`]: spins, spectral parameters, Boltzmann weights
//! - [`verify`]: identity verifiers producing [`verify::VerificationReport`]s
//! - [`fixtures`]: extended-precision oracle fixture corpus and checker

pub mod error;
pub mod fixtures;
pub mod numerics;
pub mod params;
pub mod report;
pub mod special;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use numerics::{Estimate, QuadratureSpec, SeriesSpec};
pub use params::{EllipticParams, HyperbolicParams, NomeConvention};

/// Complex double used everywhere in the crate.
pub type C64 = num_complex::Complex64;

/// Convenience constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// i
pub const I: C64 = C64::new(0.0, 1.0);
