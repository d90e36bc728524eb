//! `z^A (1 - z)^B 2F1(a, b; c; w)` with `w = z` or `w = 1 - z`, and its
//! analytic `z`-derivatives. Every closed-form radial function in the crate is
//! one of these.

use crate::special::{hyp2f1, hyp2f1_deriv, hyp2f1_deriv2, real_pow, HypParams};
use crate::{Error, Result, C64};

/// Argument fed to the hypergeometric factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesArgument {
    Z,
    OneMinusZ,
}

/// Value and the first two `z`-derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: C64,
    pub d1: C64,
    pub d2: C64,
}

impl core::ops::Mul<C64> for Jet {
    type Output = Jet;
    fn mul(self, k: C64) -> Jet {
        Jet {
            value: self.value * k,
            d1: self.d1 * k,
            d2: self.d2 * k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypProfile {
    pub exp_z: C64,
    pub exp_one_minus_z: C64,
    pub hyp: HypParams,
    pub argument: SeriesArgument,
}

impl HypProfile {
    pub fn new(exp_z: C64, exp_one_minus_z: C64, hyp: HypParams, argument: SeriesArgument) -> Self {
        Self {
            exp_z,
            exp_one_minus_z,
            hyp,
            argument,
        }
    }

    fn check(&self, z: f64) -> Result<()> {
        let ok = match self.argument {
            SeriesArgument::Z => (0.0..1.0).contains(&z),
            SeriesArgument::OneMinusZ => z > 0.0 && z < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain {
                what: "radial argument z",
                value: z,
            })
        }
    }

    fn w(&self, z: f64) -> f64 {
        match self.argument {
            SeriesArgument::Z => z,
            SeriesArgument::OneMinusZ => 1.0 - z,
        }
    }

    /// `z^A (1 - z)^B`.
    pub fn prefactor(&self, z: f64) -> C64 {
        real_pow(z, self.exp_z) * real_pow(1.0 - z, self.exp_one_minus_z)
    }

    pub fn eval(&self, z: f64) -> Result<C64> {
        self.check(z)?;
        Ok(self.prefactor(z) * hyp2f1(self.hyp, self.w(z))?)
    }

    /// Value with analytic first and second derivatives. Requires `0 < z < 1`.
    pub fn jet(&self, z: f64) -> Result<Jet> {
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::Domain {
                what: "radial argument z",
                value: z,
            });
        }
        let w = self.w(z);
        let s = match self.argument {
            SeriesArgument::Z => 1.0,
            SeriesArgument::OneMinusZ => -1.0,
        };
        let f = hyp2f1(self.hyp, w)?;
        let f1 = hyp2f1_deriv(self.hyp, w)? * s;
        let f2 = hyp2f1_deriv2(self.hyp, w)?;
        let (a, b) = (self.exp_z, self.exp_one_minus_z);
        let log_d = a / z - b / (1.0 - z);
        let log_dd = -a / (z * z) - b / ((1.0 - z) * (1.0 - z));
        let p = self.prefactor(z);
        Ok(Jet {
            value: p * f,
            d1: p * (log_d * f + f1),
            d2: p * ((log_d * log_d + log_dd) * f + 2.0 * log_d * f1 + f2),
        })
    }
}
