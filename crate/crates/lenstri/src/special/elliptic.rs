//! The elliptic gamma function family: the double-product gamma in both
//! nome conventions, the lens generalization carrying a discrete index, and
//! the measure constants of the beta sum/integral.

use super::bernoulli::phi_e;
use super::pochhammer::{q_pochhammer_full, POLE_EPS};
use crate::error::{Error, Result};
use crate::numerics::{Estimate, SeriesSpec};
use crate::params::{residue, EllipticParams, NomeConvention};
use crate::{C64, I};
use std::f64::consts::PI;

/// Accumulates a product of Pochhammer ladders with error propagation and
/// pole detection on denominator factors.
struct LadderProduct {
    value: C64,
    rel_err: f64,
    evals: u64,
    min_den_factor: f64,
}

impl LadderProduct {
    fn new() -> Self {
        LadderProduct {
            value: C64::new(1.0, 0.0),
            rel_err: 0.0,
            evals: 0,
            min_den_factor: f64::INFINITY,
        }
    }

    /// Multiply by prod_{k>=0} (base num_k; step)/(base den_k; step) where the
    /// k-th bases are num0 * outer^k resp den0 * outer^{k(+1)} style ladders.
    fn ladder(
        &mut self,
        num0: C64,
        den0: C64,
        outer: C64,
        step: C64,
        spec: &SeriesSpec,
    ) -> Result<()> {
        let on = outer.norm();
        let sn = step.norm();
        if on >= 1.0 || sn >= 1.0 {
            return Err(Error::domain("elliptic gamma: nome magnitudes must be < 1"));
        }
        let mut nb = num0;
        let mut db = den0;
        let mut k = 0u32;
        loop {
            let tail = (nb.norm() + db.norm()) / ((1.0 - on) * (1.0 - sn));
            if tail < spec.tail_tol && k > 0 {
                self.rel_err += 2.0 * tail;
                return Ok(());
            }
            if k >= spec.max_terms {
                return Err(Error::nonconvergent("elliptic gamma ladder", tail, spec.tail_tol));
            }
            let num = q_pochhammer_full(nb, step, spec)?;
            let den = q_pochhammer_full(db, step, spec)?;
            if den.min_factor < POLE_EPS {
                return Err(Error::pole(format!(
                    "elliptic gamma denominator factor within {POLE_EPS:e} of 0"
                )));
            }
            self.value *= num.est.value / den.est.value;
            self.rel_err += num.est.rel_err() + den.est.rel_err();
            self.evals += num.est.evals + den.est.evals;
            self.min_den_factor = self.min_den_factor.min(den.min_factor);
            nb *= outer;
            db *= outer;
            k += 1;
        }
    }

    fn finish(self) -> Estimate {
        Estimate {
            value: self.value,
            abs_err: self.value.norm() * self.rel_err,
            evals: self.evals,
        }
    }
}

/// Standard elliptic gamma function (double product over p^{j+1} q^{k+1} /
/// p^j q^k), nomes p = e^{2 pi i sigma}, q = e^{2 pi i tau}.
pub fn elliptic_gamma_std(z: C64, sigma: C64, tau: C64, spec: &SeriesSpec) -> Result<Estimate> {
    let p = (2.0 * PI * I * sigma).exp();
    let q = (2.0 * PI * I * tau).exp();
    let e = (2.0 * PI * I * z).exp();
    let mut lp = LadderProduct::new();
    // numerator base p q^{k+1} / E, denominator base E q^k, inner step p
    lp.ladder(p * q / e, e, q, p, spec)?;
    Ok(lp.finish())
}

/// Section-3 elliptic gamma Phi(z; p, q) (nomes passed directly).
pub fn elliptic_gamma_phi(z: C64, p: C64, q: C64, spec: &SeriesSpec) -> Result<Estimate> {
    if p.norm() >= 1.0 || q.norm() >= 1.0 {
        return Err(Error::domain("Phi: nome magnitudes must be < 1"));
    }
    let e2 = (2.0 * I * z).exp();
    let mut lp = LadderProduct::new();
    // prod_{j,k} (1 - e^{2iz} p^{2j+1} q^{2k+1})/(1 - e^{-2iz} p^{2j+1} q^{2k+1})
    lp.ladder(e2 * p * q, p * q / e2, q * q, p * p, spec)?;
    Ok(lp.finish())
}

/// Lens elliptic gamma function in the section-3 convention (explicit double
/// product of the defining display).
pub fn lens_elliptic_gamma_phi(
    z: C64,
    m: i64,
    params: &EllipticParams,
    spec: &SeriesSpec,
) -> Result<Estimate> {
    if params.convention != NomeConvention::Section3 {
        return Err(Error::domain("lens_elliptic_gamma_phi expects section-3 params"));
    }
    let r = params.r;
    let mm = residue(m, r) as i32;
    let p = params.p();
    let q = params.q();
    let e2 = (2.0 * I * z).exp();
    let pq = p * q;
    let p2r = p.powi(2 * r as i32);
    let q2r = q.powi(2 * r as i32);
    let pm2 = p.powi(2 * mm);
    let qm2 = q.powi(2 * mm);

    let mut lp = LadderProduct::new();
    // first gamma factor: bases e^{2iz} p^{-2m}(pq)(p^{2r})^{k+1} over e^{-2iz} p^{2m}(pq)(p^{2r})^k
    lp.ladder(e2 / pm2 * pq * p2r, pm2 * pq / e2, p2r, pq * pq, spec)?;
    // second gamma factor: bases e^{2iz} q^{2m}(pq)(q^{2r})^k over e^{-2iz} q^{-2m}(pq)(q^{2r})^{k+1}
    lp.ladder(e2 * qm2 * pq, pq * q2r / (e2 * qm2), q2r, pq * pq, spec)?;
    Ok(lp.finish())
}

/// gamma_e(z, m): the lens gamma double product in the appendix-B
/// convention, for a raw (unreduced) integer index.
pub fn lens_gamma_unnormalized(
    z: C64,
    m: i64,
    params: &EllipticParams,
    spec: &SeriesSpec,
) -> Result<Estimate> {
    if params.convention != NomeConvention::AppendixB {
        return Err(Error::domain("lens gamma expects appendix-B params"));
    }
    let rf = params.r as f64;
    let mf = m as f64;
    let a = elliptic_gamma_std(
        z + params.sigma * mf,
        params.sigma * rf,
        params.sigma + params.tau,
        spec,
    )?;
    let b = elliptic_gamma_std(
        z + params.tau * (rf - mf),
        params.tau * rf,
        params.sigma + params.tau,
        spec,
    )?;
    Ok(Estimate {
        value: a.value * b.value,
        abs_err: (a.value * b.value).norm() * (a.rel_err() + b.rel_err()),
        evals: a.evals + b.evals,
    })
}

/// Lens elliptic gamma function Gamma_e(z, m) = e^{phi_e} gamma_e, with the
/// normalization exponent taken at an arbitrary nonzero `r_hat`.
///
/// With r_hat = r the function is exactly r-periodic in m and the index is
/// reduced mod r up front; for other r_hat the raw integer matters.
pub fn lens_elliptic_gamma(
    z: C64,
    m: i64,
    params: &EllipticParams,
    r_hat: i64,
    spec: &SeriesSpec,
) -> Result<Estimate> {
    let m_eff = if r_hat == params.r as i64 {
        residue(m, params.r) as i64
    } else {
        m
    };
    let mut est = lens_gamma_unnormalized(z, m_eff, params, spec)?;
    let phase = phi_e(z, m_eff, params.sigma, params.tau, r_hat)?.exp();
    est.value *= phase;
    est.abs_err *= phase.norm();
    Ok(est)
}

/// Measure constant lambda = (p^r; p^r)(q^r; q^r)/2 and the counting factor
/// eps(y) of the beta sum/integral (1 on self-paired holonomies, else 2).
pub fn lambda_and_eps(params: &EllipticParams, y: u32, spec: &SeriesSpec) -> Result<(Estimate, u32)> {
    if y > params.r / 2 {
        return Err(Error::domain(format!(
            "holonomy y={y} outside 0..=floor(r/2) for r={}",
            params.r
        )));
    }
    let pb = params.to_convention(NomeConvention::AppendixB);
    let pr = pb.p().powi(pb.r as i32);
    let qr = pb.q().powi(pb.r as i32);
    let a = q_pochhammer_full(pr, pr, spec)?.est;
    let b = q_pochhammer_full(qr, qr, spec)?.est;
    let value = a.value * b.value / 2.0;
    Ok((
        Estimate {
            value,
            abs_err: value.norm() * (a.rel_err() + b.rel_err()),
            evals: a.evals + b.evals,
        },
        eps_count(y, params.r),
    ))
}

/// eps(y): 1 if y = 0 or y = r/2, else 2.
pub fn eps_count(y: u32, r: u32) -> u32 {
    if y == 0 || 2 * y == r {
        1
    } else {
        2
    }
}
