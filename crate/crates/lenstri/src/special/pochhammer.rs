//! q-Pochhammer symbols and theta functions.

use crate::error::{Error, Result};
use crate::numerics::{Estimate, SeriesSpec};
use crate::{C64, I};
use std::f64::consts::PI;

/// Guard distance at which a vanishing product factor is reported as a pole
/// (used by the gamma-function denominators).
pub const POLE_EPS: f64 = 1e-14;

/// Result of a Pochhammer evaluation: the product and the smallest |factor|
/// seen, so callers placing it in a denominator can detect pole proximity.
#[derive(Debug, Clone, Copy)]
pub struct PochhammerValue {
    pub est: Estimate,
    pub min_factor: f64,
}

/// (x; q)_infinity = prod_{j>=0} (1 - x q^j), |q| < 1, with a certified
/// geometric tail. Also tracks min |1 - x q^j| for pole detection.
pub fn q_pochhammer_full(x: C64, q: C64, spec: &SeriesSpec) -> Result<PochhammerValue> {
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(Error::domain(format!("q-Pochhammer needs |q| < 1, got {qn}")));
    }
    let mut value = C64::new(1.0, 0.0);
    let mut min_factor = f64::INFINITY;
    let mut pow = x;
    let mut evals = 0u64;
    loop {
        // geometric tail of log-magnitudes: sum_{k>j} |x| q^k <= |x q^{j+1}|/(1-|q|)
        let tail = pow.norm() / (1.0 - qn);
        if tail < spec.tail_tol {
            return Ok(PochhammerValue {
                est: Estimate {
                    value,
                    abs_err: 2.0 * (tail + spec.tail_tol) * value.norm(),
                    evals,
                },
                min_factor,
            });
        }
        if evals >= spec.max_terms as u64 {
            return Err(Error::nonconvergent("q_pochhammer", tail, spec.tail_tol));
        }
        let factor = 1.0 - pow;
        min_factor = min_factor.min(factor.norm());
        value *= factor;
        pow *= q;
        evals += 1;
    }
}

/// (x; q)_infinity.
pub fn q_pochhammer(x: C64, q: C64, spec: &SeriesSpec) -> Result<Estimate> {
    Ok(q_pochhammer_full(x, q, spec)?.est)
}

/// Jacobi theta function
/// theta_4(z | p) = (p^2; p^2) (e^{2iz} p; p^2) (e^{-2iz} p; p^2).
pub fn jacobi_theta4(z: C64, p: C64, spec: &SeriesSpec) -> Result<Estimate> {
    if p.norm() >= 1.0 {
        return Err(Error::domain("theta_4 needs |p| < 1"));
    }
    let p2 = p * p;
    let e2iz = (2.0 * I * z).exp();
    let a = q_pochhammer(p2, p2, spec)?;
    let b = q_pochhammer(e2iz * p, p2, spec)?;
    let c = q_pochhammer(p / e2iz, p2, spec)?;
    let value = a.value * b.value * c.value;
    Ok(Estimate {
        value,
        abs_err: value.norm() * (a.rel_err() + b.rel_err() + c.rel_err()),
        evals: a.evals + b.evals + c.evals,
    })
}

/// theta(z; sigma) = (e^{2 pi i z}; p)(e^{-2 pi i z} p; p), p = e^{2 pi i sigma}.
pub fn theta_small(z: C64, sigma: C64, spec: &SeriesSpec) -> Result<Estimate> {
    if !(sigma.im > 0.0) {
        return Err(Error::domain("theta needs Im(sigma) > 0"));
    }
    let p = (2.0 * PI * I * sigma).exp();
    let e = (2.0 * PI * I * z).exp();
    let a = q_pochhammer(e, p, spec)?;
    let b = q_pochhammer(p / e, p, spec)?;
    let value = a.value * b.value;
    Ok(Estimate {
        value,
        abs_err: value.norm() * (a.rel_err() + b.rel_err()),
        evals: a.evals + b.evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn spec() -> SeriesSpec {
        SeriesSpec::default()
    }

    #[test]
    fn pochhammer_degenerate_cases() {
        // (0; q) = 1
        let est = q_pochhammer(c64(0.0, 0.0), c64(0.25, 0.0), &spec()).unwrap();
        assert!((est.value - c64(1.0, 0.0)).norm() < 1e-15);
        // (x; 0) = 1 - x; with x = q = 0 the value is 1
        let est = q_pochhammer(c64(0.3, 0.0), c64(0.0, 0.0), &spec()).unwrap();
        assert!((est.value - c64(0.7, 0.0)).norm() < 1e-15);
        let est = q_pochhammer(c64(0.0, 0.0), c64(0.0, 0.0), &spec()).unwrap();
        assert!((est.value - c64(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pochhammer_rejects_big_q() {
        assert!(q_pochhammer(c64(0.5, 0.0), c64(1.0, 0.0), &spec()).is_err());
    }

    #[test]
    fn theta4_nome_zero_and_periodicity() {
        let z = c64(0.31, 0.12);
        let est = jacobi_theta4(z, c64(0.0, 0.0), &spec()).unwrap();
        assert!((est.value - c64(1.0, 0.0)).norm() < 1e-15);

        let p = c64(0.23, 0.04);
        let a = jacobi_theta4(z, p, &spec()).unwrap();
        let b = jacobi_theta4(z + std::f64::consts::PI, p, &spec()).unwrap();
        assert!((a.value - b.value).norm() < 1e-12 * a.value.norm());
    }

    #[test]
    fn theta_small_shift_identity() {
        // theta(z + k sigma; sigma) (-e^{2 pi i z})^k e^{2 pi i sigma k(k-1)/2} = theta(z; sigma)
        let sigma = c64(0.03, 0.21);
        let z = c64(0.17, 0.08);
        let k = 2;
        let lhs = theta_small(z + sigma * k as f64, sigma, &spec()).unwrap().value
            * (-(2.0 * PI * I * z).exp()).powi(k)
            * (2.0 * PI * I * sigma * (k * (k - 1)) as f64 / 2.0).exp();
        let rhs = theta_small(z, sigma, &spec()).unwrap().value;
        assert!(
            (lhs - rhs).norm() < 1e-11 * rhs.norm(),
            "lhs={lhs} rhs={rhs}"
        );
    }

    #[test]
    fn theta_small_half_at_zero_nome_limit() {
        // theta(1/2; sigma) -> (1 - e^{pi i}) = 2 as p -> 0
        let est = theta_small(c64(0.5, 0.0), c64(0.0, 12.0), &spec()).unwrap();
        assert!((est.value - c64(2.0, 0.0)).norm() < 1e-12);
    }
}
