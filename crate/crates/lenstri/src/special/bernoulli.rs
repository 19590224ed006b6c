//! Multiple Bernoulli polynomials and the polynomial normalization factors
//! built from them (R, R_2, phi_e, phi_h, B_phi, B_kappa, sign factor).
//!
//! All of these are exact closed-form polynomials; normalization factors are
//! exponentiated directly from them, never recovered from logs of products,
//! which keeps every branch unambiguous.

use crate::error::{Error, Result};
use crate::params::residue;
use crate::{C64, I};
use std::f64::consts::PI;

/// Which multiple Bernoulli polynomial to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliKind {
    B11,
    B22,
    B33,
}

/// B_{1,1}, B_{2,2}, B_{3,3} with the matching number of periods.
pub fn bernoulli_poly(kind: BernoulliKind, z: C64, omegas: &[C64]) -> Result<C64> {
    let need = match kind {
        BernoulliKind::B11 => 1,
        BernoulliKind::B22 => 2,
        BernoulliKind::B33 => 3,
    };
    if omegas.len() != need {
        return Err(Error::domain(format!(
            "bernoulli_poly: expected {need} periods, got {}",
            omegas.len()
        )));
    }
    if omegas.iter().any(|w| w.norm() == 0.0) {
        return Err(Error::domain("bernoulli_poly: zero period"));
    }
    Ok(match kind {
        BernoulliKind::B11 => z / omegas[0] - 0.5,
        BernoulliKind::B22 => b22(z, omegas[0], omegas[1]),
        BernoulliKind::B33 => b33(z, omegas[0], omegas[1], omegas[2]),
    })
}

pub fn b22(z: C64, w1: C64, w2: C64) -> C64 {
    let p = w1 * w2;
    z * z / p - (w1 + w2) * z / p + (w1 * w1 + w2 * w2 + 3.0 * w1 * w2) / (6.0 * p)
}

pub fn b33(z: C64, w1: C64, w2: C64, w3: C64) -> C64 {
    let s1 = w1 + w2 + w3;
    let s2 = w1 * w2 + w2 * w3 + w3 * w1;
    let p = w1 * w2 * w3;
    z * z * z / p - 1.5 * s1 * z * z / p
        + (w1 * w1 + w2 * w2 + w3 * w3 + 3.0 * s2) * z / (2.0 * p)
        - s1 * s2 / (4.0 * p)
}

/// R(z; sigma, tau) = (B_{3,3}(z; sigma, tau, -1) + B_{3,3}(z-1; sigma, tau, -1)) / 12.
pub fn poly_r(z: C64, sigma: C64, tau: C64) -> C64 {
    (b33(z, sigma, tau, C64::new(-1.0, 0.0)) + b33(z - 1.0, sigma, tau, C64::new(-1.0, 0.0))) / 12.0
}

/// R_2(z, m; sigma, tau) with the modulus replaced by an arbitrary nonzero
/// integer r_hat. Evaluated via the expanded closed form (which stays
/// finite at sigma = -tau, where the B_{3,3} composition degenerates).
pub fn poly_r2(z: C64, m: i64, sigma: C64, tau: C64, r_hat: i64) -> Result<C64> {
    if r_hat == 0 {
        return Err(Error::domain("poly_r2: r_hat must be nonzero"));
    }
    if sigma.norm() == 0.0 || tau.norm() == 0.0 {
        return Err(Error::domain("poly_r2: sigma, tau must be nonzero"));
    }
    let r = r_hat as f64;
    let m = m as f64;
    let st = sigma + tau;
    let first = (st - 2.0 * z)
        * (2.0 * z * z - 2.0 * z * st + sigma * tau * (r * r + 6.0 * (m - r) * m) + 1.0)
        / (24.0 * r * sigma * tau);
    let second = (sigma - tau) * ((2.0 * m - r) * (m - r) * m / (12.0 * r));
    Ok(first - second)
}

/// Composition form of R_2 via R; requires sigma + tau away from 0.
/// Kept as an independent route for tests of the closed form.
pub fn poly_r2_composed(z: C64, m: i64, sigma: C64, tau: C64, r_hat: i64) -> C64 {
    let rh = r_hat as f64;
    let m = m as f64;
    poly_r(z + m * sigma, rh * sigma, sigma + tau) + poly_r(z + (rh - m) * tau, rh * tau, sigma + tau)
}

/// Exponent phi_e(z, m; sigma, tau) of the lens elliptic gamma normalization,
/// with an explicit r_hat (r_hat = r reproduces the canonical normalization).
pub fn phi_e(z: C64, m: i64, sigma: C64, tau: C64, r_hat: i64) -> Result<C64> {
    let half = C64::new(0.5, 0.0);
    let v = poly_r2(z, 0, sigma, tau, r_hat)? + poly_r2(C64::new(0.0, 0.0), m, half, -half, r_hat)?
        - poly_r2(z, m, sigma, tau, r_hat)?;
    Ok(2.0 * PI * I * v)
}

/// phi_h(m) = 2 pi i R_2(0, m; 1/2, -1/2) (hyperbolic gamma normalization),
/// with explicit r_hat.
pub fn phi_h(m: i64, r_hat: i64) -> Result<C64> {
    let half = C64::new(0.5, 0.0);
    Ok(2.0 * PI * I * poly_r2(C64::new(0.0, 0.0), m, half, -half, r_hat)?)
}

/// B_phi(z, m, omega1, omega2): quadratic prefactor exponent of the product
/// representation of the hyperbolic gamma family.
pub fn b_phi(z: C64, m: i64, r: u32, w1: C64, w2: C64) -> C64 {
    let mm = residue(m, r) as f64;
    let rf = r as f64;
    let eta = (w1 + w2) / 2.0;
    b22(I * z + w1 * mm + eta, rf * w1, 2.0 * eta) + b22(I * z + w2 * (rf - mm) + eta, rf * w2, 2.0 * eta)
}

/// B_kappa(z, omega1, omega2): prefactor exponent of the kappa product
/// representations.
pub fn b_kappa(z: C64, r: u32, w1: C64, w2: C64) -> C64 {
    let rf = r as f64;
    let eta = (w1 + w2) / 2.0;
    b22(2.0 * (eta + z), rf * w1, 4.0 * eta) + b22(2.0 * (eta - z), rf * w2, 4.0 * eta)
}

/// Sign factor sigma(m) = e^{(i pi / 2r)([[m]](r - [[m]]) - (r-1) m^2)} of the
/// improved double sine.
pub fn sign_factor(m: i64, r: u32) -> C64 {
    let mm = residue(m, r) as f64;
    let rf = r as f64;
    let mf = m as f64;
    (I * PI / (2.0 * rf) * (mm * (rf - mm) - (rf - 1.0) * mf * mf)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn bernoulli_values() {
        // B_{1,1}(w/2, w) = 0
        let v = bernoulli_poly(BernoulliKind::B11, c64(0.35, 0.1), &[c64(0.7, 0.2)]).unwrap();
        assert!(v.norm() < 1e-15);
        // B_{2,2}(0, 1, 1) = 5/6
        let v =
            bernoulli_poly(BernoulliKind::B22, c64(0.0, 0.0), &[c64(1.0, 0.0), c64(1.0, 0.0)])
                .unwrap();
        assert!((v - c64(5.0 / 6.0, 0.0)).norm() < 1e-15);
        // B_{3,3}(0, 1, 1, 1) = -(3)(3)/4 = -9/4
        let v = bernoulli_poly(
            BernoulliKind::B33,
            c64(0.0, 0.0),
            &[c64(1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)],
        )
        .unwrap();
        assert!((v - c64(-2.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zero_period_rejected() {
        assert!(bernoulli_poly(BernoulliKind::B22, c64(0.1, 0.0), &[c64(0.0, 0.0), c64(1.0, 0.0)])
            .is_err());
    }

    #[test]
    fn r2_closed_form_matches_composition() {
        let sigma = c64(0.03, 0.35);
        let tau = c64(-0.02, 0.3);
        for (z, m, rh) in [
            (c64(0.2, 0.1), 0i64, 1i64),
            (c64(-0.3, 0.2), 1, 2),
            (c64(0.11, -0.07), 2, 3),
            (c64(0.4, 0.3), 5, 2),
            (c64(0.1, 0.1), -3, 4),
            (c64(0.1, 0.1), 7, -2),
        ] {
            let a = poly_r2(z, m, sigma, tau, rh).unwrap();
            let b = poly_r2_composed(z, m, sigma, tau, rh);
            assert!((a - b).norm() < 1e-12, "rhat={rh} m={m}: {a} vs {b}");
        }
    }

    #[test]
    fn r2_difference_display() {
        // 2 pi i (R2(z,0) - R2(z,m)) = (pi i m(m-r)/2r)(2z - (s+t) + (s-t)(2m-r)/3)
        let sigma = c64(0.05, 0.4);
        let tau = c64(-0.05, 0.37);
        let z = c64(0.21, 0.13);
        let (m, r) = (2i64, 3i64);
        let lhs = 2.0 * PI * I
            * (poly_r2(z, 0, sigma, tau, r).unwrap() - poly_r2(z, m, sigma, tau, r).unwrap());
        let mf = m as f64;
        let rf = r as f64;
        let rhs = PI * I * mf * (mf - rf) / (2.0 * rf)
            * (2.0 * z - (sigma + tau) + (sigma - tau) * (2.0 * mf - rf) / 3.0);
        assert!((lhs - rhs).norm() < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn phi_e_reduces_to_residue_closed_form() {
        // For m in [0, r): phi_e = (pi i [[m]][[-m]]/2r)(s + t - 2z + (1 + t - s)([[m]] - [[-m]])/3)
        let sigma = c64(0.021, 0.255);
        let tau = c64(-0.013, 0.28);
        let z = c64(0.17, 0.21);
        let r = 3u32;
        for m in 0..3i64 {
            let v = phi_e(z, m, sigma, tau, r as i64).unwrap();
            let mm = residue(m, r) as f64;
            let mneg = residue(-m, r) as f64;
            let zpc = PI * I * mm * mneg / (2.0 * r as f64)
                * (sigma + tau - 2.0 * z + (1.0 + tau - sigma) * (mm - mneg) / 3.0);
            assert!((v - zpc).norm() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn sign_factor_basics() {
        assert!((sign_factor(0, 3) - c64(1.0, 0.0)).norm() < 1e-15);
        // sigma(m + 2r)/sigma(m) at r=2, m=1 equals the direct exponent ratio
        let lhs = sign_factor(5, 2) / sign_factor(1, 2);
        let rhs = (I * PI / 4.0 * ((1.0 - 25.0) - (1.0 - 1.0))).exp();
        assert!((lhs - rhs).norm() < 1e-14);
    }
}
