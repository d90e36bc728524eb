use num_traits::Float;

use super::HalfInt;
use crate::{Error, Result};

/// Dirac monopole with the string along the `z` axis:
/// `A_phi = g cos theta`, all other components zero (units `e = hbar = c = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonopolePotential {
    pub g: f64,
}

impl MonopolePotential {
    pub fn a_phi(&self, theta: f64) -> f64 {
        self.g * theta.cos()
    }

    /// `F_{phi theta} = d_phi A_theta - d_theta A_phi`.
    pub fn f_phi_theta(&self, theta: f64) -> f64 {
        self.g * theta.sin()
    }

    /// The charge parameter `k = e g` when it is on the half-integer lattice.
    pub fn charge(&self) -> Option<HalfInt> {
        let t = 2.0 * self.g;
        if t.is_finite() && t == t.round() && t != 0.0 {
            Some(HalfInt::from_twice(t as i32))
        } else {
            None
        }
    }
}

/// `|(1/sqrt(-g)) d_theta (sqrt(-g) F^{theta phi})|` with `sqrt(-g) = r^2 sin theta`
/// and `F^{theta phi} = r^-2 (r^2 sin^2 theta)^-1 F_{phi theta}`, by
/// 5-point differences. Zero up to rounding.
pub fn maxwell_residual(g: f64, r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain { what: "r", value: r });
    }
    if !(theta > 0.0 && theta < core::f64::consts::PI) {
        return Err(Error::Domain {
            what: "theta (open interval (0, pi))",
            value: theta,
        });
    }
    let pot = MonopolePotential { g };
    let flux = |t: f64| {
        let sqrt_g = r * r * t.sin();
        sqrt_g * (1.0 / (r * r)) * (1.0 / (r * r * t.sin() * t.sin())) * pot.f_phi_theta(t)
    };
    let h = 1e-3;
    let d = (flux(theta - 2.0 * h) - 8.0 * flux(theta - h) + 8.0 * flux(theta + h) - flux(theta + 2.0 * h))
        / (12.0 * h);
    Ok((d / (r * r * theta.sin())).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maxwell_holds() {
        assert!(maxwell_residual(1.0, 0.5, core::f64::consts::FRAC_PI_2).unwrap() < 1e-10);
        assert!(maxwell_residual(3.0, 0.9, 0.3).unwrap() < 1e-10);
        assert_eq!(maxwell_residual(0.0, 0.4, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn charge_quantization() {
        assert_eq!(MonopolePotential { g: 1.5 }.charge(), Some(HalfInt::from_twice(3)));
        assert_eq!(MonopolePotential { g: 0.3 }.charge(), None);
        assert_eq!(MonopolePotential { g: 0.0 }.charge(), None);
        assert!((MonopolePotential { g: 2.0 }.a_phi(0.0) - 2.0).abs() < 1e-15);
    }
}
