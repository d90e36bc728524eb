#![allow(non_snake_case)]

use core::f64::consts::FRAC_1_SQRT_2;

use num_traits::Float;

use crate::angular::Delta;
use crate::{Error, Result, C64, I};

/// The same radial point as `r`, `rho` (`r = sin rho`), `z = r^2` and
/// `Phi = 1 - r^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordinateChart {
    pub r: f64,
    pub rho: f64,
    pub z: f64,
    pub phi: f64,
}

impl CoordinateChart {
    pub fn from_r(r: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain { what: "r", value: r });
        }
        Ok(Self {
            r,
            rho: r.asin(),
            z: r * r,
            phi: 1.0 - r * r,
        })
    }

    pub fn from_z(z: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&z) {
            return Err(Error::Domain { what: "z", value: z });
        }
        let r = z.sqrt();
        Ok(Self {
            r,
            rho: r.asin(),
            z,
            phi: 1.0 - z,
        })
    }

    pub fn from_rho(rho: f64) -> Result<Self> {
        if !(0.0..core::f64::consts::FRAC_PI_2).contains(&rho) {
            return Err(Error::Domain { what: "rho", value: rho });
        }
        let r = rho.sin();
        Ok(Self {
            r,
            rho,
            z: r * r,
            phi: rho.cos() * rho.cos(),
        })
    }
}

/// `(cos(rho/2), sin(rho/2))` at `z = sin^2 rho`, without cancellation near `z = 0`.
pub(crate) fn half_angle(z: f64) -> (f64, f64) {
    let c = ((1.0 + (1.0 - z).sqrt()) / 2.0).sqrt();
    let s = z.sqrt() / (2.0 * c);
    (c, s)
}

/// `[[cos(rho/2), -i sin(rho/2)], [-i sin(rho/2), cos(rho/2)]]`.
pub fn fg_matrix(z: f64) -> [[C64; 2]; 2] {
    let (c, s) = half_angle(z);
    [[C64::new(c, 0.0), C64::new(0.0, -s)], [C64::new(0.0, -s), C64::new(c, 0.0)]]
}

/// `(f, g)` from `(F, G)`: `f + g = e^{-i rho/2}(F + G)`, `f - g = e^{i rho/2}(F - G)`.
pub fn fg_from_FG(F: C64, G: C64, z: f64) -> (C64, C64) {
    let m = fg_matrix(z);
    (m[0][0] * F + m[0][1] * G, m[1][0] * F + m[1][1] * G)
}

/// Inverse of [`fg_from_FG`].
pub fn FG_from_fg(f: C64, g: C64, z: f64) -> (C64, C64) {
    let (c, s) = half_angle(z);
    (c * f + I * s * g, I * s * f + c * g)
}

/// `f1 = (f + i g)/sqrt2`, `f2 = (f - i g)/sqrt2`, `f3 = delta f2`, `f4 = delta f1`.
pub fn f1234_from_fg(f: C64, g: C64, delta: Delta) -> [C64; 4] {
    let f1 = (f + I * g) * FRAC_1_SQRT_2;
    let f2 = (f - I * g) * FRAC_1_SQRT_2;
    let d = delta.sign();
    [f1, f2, f2 * d, f1 * d]
}

/// `f = (f1 + f2)/sqrt2`, `g = (f1 - f2)/(i sqrt2)`.
pub fn fg_from_f1234(f: &[C64; 4]) -> (C64, C64) {
    ((f[0] + f[1]) * FRAC_1_SQRT_2, (f[0] - f[1]) * FRAC_1_SQRT_2 / I)
}
