//! Truncated infinite products and sums with certified geometric tails.

use super::{Estimate, SeriesSpec};
use crate::error::{Error, Result};
use crate::C64;

const RATIO_CAP: f64 = 0.9;

/// Infinite product of `term(j)` for j >= 0, where |term(j) - 1| is
/// eventually bounded by a geometric sequence with ratio < 1.
///
/// Terminates once |term(j) - 1| < tail_tol and the observed decay ratio
/// certifies the remaining relative error below tail_tol.
pub fn truncated_product<F: Fn(u32) -> C64>(term: F, spec: &SeriesSpec) -> Result<Estimate> {
    let mut value = C64::new(1.0, 0.0);
    let mut prev_d = f64::INFINITY;
    for j in 0..spec.max_terms {
        let t = term(j);
        value *= t;
        let d = (t - 1.0).norm();
        if d < spec.tail_tol && d <= prev_d {
            let ratio = if prev_d.is_finite() && prev_d > 0.0 {
                (d / prev_d).min(RATIO_CAP)
            } else {
                RATIO_CAP
            };
            let tail = d * ratio / (1.0 - ratio);
            if tail < spec.tail_tol {
                return Ok(Estimate {
                    value,
                    abs_err: (tail + spec.tail_tol) * value.norm(),
                    evals: j as u64 + 1,
                });
            }
        }
        prev_d = d;
    }
    Err(Error::nonconvergent(
        "truncated_product",
        prev_d,
        spec.tail_tol,
    ))
}

/// Which index set a [`truncated_sum`] runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSet {
    /// n = 0, 1, 2, ...
    NonNegative,
    /// n = +-1, +-2, ... (term called for both signs, paired by |n|)
    SymmetricNonzero,
}

/// Sum of geometrically decaying terms over the given index set.
pub fn truncated_sum<F: Fn(i64) -> C64>(
    term: F,
    index_set: IndexSet,
    spec: &SeriesSpec,
) -> Result<Estimate> {
    let mut value = C64::new(0.0, 0.0);
    let mut prev_d = f64::INFINITY;
    for k in 0..spec.max_terms {
        let (t, n_evals) = match index_set {
            IndexSet::NonNegative => (term(k as i64), 1),
            IndexSet::SymmetricNonzero => {
                let n = k as i64 + 1;
                (term(n) + term(-n), 2)
            }
        };
        value += t;
        let d = t.norm();
        let scale = value.norm().max(1.0);
        if d < spec.tail_tol * scale && d <= prev_d {
            let ratio = if prev_d.is_finite() && prev_d > 0.0 {
                (d / prev_d).min(RATIO_CAP)
            } else {
                RATIO_CAP
            };
            let tail = d * ratio / (1.0 - ratio);
            if tail < spec.tail_tol * scale {
                return Ok(Estimate {
                    value,
                    abs_err: tail + spec.tail_tol * scale,
                    evals: (k as u64 + 1) * n_evals,
                });
            }
        }
        prev_d = d;
    }
    Err(Error::nonconvergent(
        "truncated_sum",
        prev_d,
        spec.tail_tol,
    ))
}
