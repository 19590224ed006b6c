//! Adaptive complex quadrature and certified series/product evaluation.
//!
//! Every routine returns an [`Estimate`]: the computed value together with a
//! conservative absolute error estimate and the number of integrand/term
//! evaluations spent, so callers can propagate and report uncertainty.

mod quad;
mod series;

pub use quad::{
    integrate_finite, integrate_periodic, integrate_real_line, integrate_semi_infinite,
    integrate_semi_infinite_tail,
};
pub use series::{truncated_product, truncated_sum, IndexSet};

use crate::error::{Error, Result};
use crate::C64;

/// A computed complex value with an absolute error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: C64,
    pub abs_err: f64,
    /// Integrand or term evaluations consumed (diagnostics).
    pub evals: u64,
}

impl Estimate {
    pub fn exact(value: C64) -> Self {
        Estimate {
            value,
            abs_err: 0.0,
            evals: 0,
        }
    }

    pub fn rel_err(&self) -> f64 {
        let m = self.value.norm();
        if m == 0.0 {
            self.abs_err
        } else {
            self.abs_err / m
        }
    }
}

/// Quadrature control parameters.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: u32,
    /// Safety factor applied to analytic decay bounds when truncating
    /// infinite domains; the neglected tail is kept below abs_tol / margin.
    pub truncation_margin: f64,
}

impl QuadratureSpec {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_subdivisions: u32,
        truncation_margin: f64,
    ) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be > 0"));
        }
        if max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be >= 1"));
        }
        if !(truncation_margin >= 1.0) {
            return Err(Error::domain("truncation_margin must be >= 1"));
        }
        Ok(QuadratureSpec {
            abs_tol,
            rel_tol,
            max_subdivisions,
            truncation_margin,
        })
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_subdivisions: 400,
            truncation_margin: 10.0,
        }
    }
}

/// Series/product control parameters.
#[derive(Debug, Clone, Copy)]
pub struct SeriesSpec {
    pub tail_tol: f64,
    pub max_terms: u32,
}

impl SeriesSpec {
    pub fn new(tail_tol: f64, max_terms: u32) -> Result<Self> {
        if !(tail_tol > 0.0) {
            return Err(Error::domain("tail_tol must be > 0"));
        }
        if max_terms < 1 {
            return Err(Error::domain("max_terms must be >= 1"));
        }
        Ok(SeriesSpec {
            tail_tol,
            max_terms,
        })
    }
}

impl Default for SeriesSpec {
    fn default() -> Self {
        SeriesSpec {
            tail_tol: 1e-14,
            max_terms: 40_000,
        }
    }
}
