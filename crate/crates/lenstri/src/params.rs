//! Modular parameter sets and residue (mod r) handling.

use crate::error::{Error, Result};
use crate::{C64, I};
use std::f64::consts::PI;

/// Nome conventions in use. The two differ by a factor of 2 in the exponent:
/// `Section3` has p = e^{i pi sigma}; `AppendixB` has p = e^{2 i pi sigma}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NomeConvention {
    Section3,
    AppendixB,
}

/// Elliptic modular data (sigma, tau, r) with a nome-convention tag.
#[derive(Debug, Clone, Copy)]
pub struct EllipticParams {
    pub sigma: C64,
    pub tau: C64,
    pub r: u32,
    pub convention: NomeConvention,
}

impl EllipticParams {
    pub fn new(sigma: C64, tau: C64, r: u32, convention: NomeConvention) -> Result<Self> {
        if !(sigma.im > 0.0 && tau.im > 0.0) {
            return Err(Error::domain(
                "elliptic params need Im(sigma) > 0 and Im(tau) > 0",
            ));
        }
        if r < 1 {
            return Err(Error::domain("r must be >= 1"));
        }
        Ok(EllipticParams {
            sigma,
            tau,
            r,
            convention,
        })
    }

    pub fn section3(sigma: C64, tau: C64, r: u32) -> Result<Self> {
        Self::new(sigma, tau, r, NomeConvention::Section3)
    }

    pub fn appendix_b(sigma: C64, tau: C64, r: u32) -> Result<Self> {
        Self::new(sigma, tau, r, NomeConvention::AppendixB)
    }

    /// Nome p in this convention.
    pub fn p(&self) -> C64 {
        match self.convention {
            NomeConvention::Section3 => (I * PI * self.sigma).exp(),
            NomeConvention::AppendixB => (I * 2.0 * PI * self.sigma).exp(),
        }
    }

    /// Nome q in this convention.
    pub fn q(&self) -> C64 {
        match self.convention {
            NomeConvention::Section3 => (I * PI * self.tau).exp(),
            NomeConvention::AppendixB => (I * 2.0 * PI * self.tau).exp(),
        }
    }

    /// Crossing parameter eta = -i pi (sigma + tau)/2 (lattice-model convention;
    /// real and positive in the physical regime).
    pub fn eta(&self) -> C64 {
        -I * PI * (self.sigma + self.tau) / 2.0
    }

    /// The same (sigma, tau, r) seen in the other convention's units:
    /// section-3 (sigma, tau) correspond to appendix-B (sigma/2, tau/2).
    pub fn to_convention(&self, convention: NomeConvention) -> Self {
        if convention == self.convention {
            return *self;
        }
        let f = match (self.convention, convention) {
            (NomeConvention::Section3, NomeConvention::AppendixB) => 0.5,
            (NomeConvention::AppendixB, NomeConvention::Section3) => 2.0,
            _ => unreachable!(),
        };
        EllipticParams {
            sigma: self.sigma * f,
            tau: self.tau * f,
            r: self.r,
            convention,
        }
    }
}

/// Hyperbolic modular data (omega1, omega2, r).
///
/// The lattice-model sections use Re(omega) > 0; the sum/integral appendix
/// orients the periods in the upper half plane. Construct with [`Self::new`]
/// for the former and [`Self::upper_half`] for the latter; [`Self::rotated`]
/// maps between them (omega -> i omega).
#[derive(Debug, Clone, Copy)]
pub struct HyperbolicParams {
    pub omega1: C64,
    pub omega2: C64,
    pub r: u32,
}

impl HyperbolicParams {
    /// Lattice convention: Re(omega1), Re(omega2) > 0.
    pub fn new(omega1: C64, omega2: C64, r: u32) -> Result<Self> {
        if !(omega1.re > 0.0 && omega2.re > 0.0) {
            return Err(Error::domain(
                "hyperbolic params need Re(omega1) > 0 and Re(omega2) > 0",
            ));
        }
        if r < 1 {
            return Err(Error::domain("r must be >= 1"));
        }
        Ok(HyperbolicParams { omega1, omega2, r })
    }

    /// Appendix-B orientation: Im(omega1), Im(omega2) > 0.
    pub fn upper_half(omega1: C64, omega2: C64, r: u32) -> Result<Self> {
        if !(omega1.im > 0.0 && omega2.im > 0.0) {
            return Err(Error::domain(
                "upper-half hyperbolic params need Im(omega1) > 0 and Im(omega2) > 0",
            ));
        }
        if r < 1 {
            return Err(Error::domain("r must be >= 1"));
        }
        Ok(HyperbolicParams { omega1, omega2, r })
    }

    pub fn eta(&self) -> C64 {
        (self.omega1 + self.omega2) / 2.0
    }

    /// omega -> i omega (right half plane to upper half plane or back again
    /// via three applications).
    pub fn rotated(&self) -> Self {
        HyperbolicParams {
            omega1: I * self.omega1,
            omega2: I * self.omega2,
            r: self.r,
        }
    }

    pub fn is_right_half(&self) -> bool {
        self.omega1.re > 0.0 && self.omega2.re > 0.0
    }

    pub fn is_upper_half(&self) -> bool {
        self.omega1.im > 0.0 && self.omega2.im > 0.0
    }
}

/// Integer index together with its canonical residue in {0, ..., r-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueIndex {
    pub m: i64,
    pub reduced: u32,
}

impl ResidueIndex {
    pub fn new(m: i64, r: u32) -> Self {
        ResidueIndex {
            m,
            reduced: residue(m, r),
        }
    }
}

/// [[m]]_r in {0, ..., r-1}, independent of the sign of m.
#[inline]
pub fn residue(m: i64, r: u32) -> u32 {
    m.rem_euclid(r as i64) as u32
}

/// [[m]]_{+-} = [[m]]_r [[-m]]_r.
#[inline]
pub fn residue_pm(m: i64, r: u32) -> u64 {
    residue(m, r) as u64 * residue(-m, r) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn residue_is_always_canonical() {
        assert_eq!(residue(5, 3), 2);
        assert_eq!(residue(-1, 3), 2);
        assert_eq!(residue(-6, 3), 0);
        assert_eq!(residue(0, 1), 0);
        assert_eq!(residue_pm(1, 3), 2);
        assert_eq!(residue_pm(0, 4), 0);
    }

    #[test]
    fn convention_conversion_round_trips() {
        let p = EllipticParams::section3(c64(0.05, 0.4), c64(-0.03, 0.35), 2).unwrap();
        let b = p.to_convention(NomeConvention::AppendixB);
        // same nomes, different units
        assert!((p.p() - b.p()).norm() < 1e-15);
        let back = b.to_convention(NomeConvention::Section3);
        assert!((back.sigma - p.sigma).norm() < 1e-15);
    }

    #[test]
    fn orientation_validation() {
        assert!(HyperbolicParams::new(c64(1.0, 0.2), c64(0.9, -0.1), 2).is_ok());
        assert!(HyperbolicParams::new(c64(-1.0, 0.2), c64(0.9, 0.0), 2).is_err());
        assert!(HyperbolicParams::upper_half(c64(0.2, 1.0), c64(-0.1, 0.9), 1).is_ok());
        assert!(HyperbolicParams::upper_half(c64(0.2, -1.0), c64(-0.1, 0.9), 1).is_err());
    }
}
