//! Flat-space reference solutions of the `j_min` sector and the limit of
//! infinite curvature radius.
//!
//! In Minkowski space the `j_min` radial pair `(h, g)` obeys
//! `h' + (eps + M) g = 0`, `g' - (eps - M) h = 0`.

use alloc::vec::Vec;

use num_traits::Float;

use crate::fit::slope;
use crate::jmin::{jmin_base, jmin_params, JminKind, KSign};
use crate::radial::Channel;
use crate::special::HypParams;
use crate::{Error, Result, C64, I};

/// Dimensionful inputs: energy, mass, speed of light, Planck constant and
/// curvature radius, in any consistent unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalUnits {
    pub energy: f64,
    pub mass: f64,
    pub c_light: f64,
    pub hbar: f64,
    pub rho_curv: f64,
}

impl PhysicalUnits {
    /// `c = hbar = 1`.
    pub fn natural(energy: f64, mass: f64, rho_curv: f64) -> Self {
        Self {
            energy,
            mass,
            c_light: 1.0,
            hbar: 1.0,
            rho_curv,
        }
    }

    /// `E rho / (c hbar)`.
    pub fn eps(&self) -> f64 {
        self.energy * self.rho_curv / (self.c_light * self.hbar)
    }

    /// `m c rho / hbar`.
    pub fn big_m(&self) -> f64 {
        self.mass * self.c_light * self.rho_curv / self.hbar
    }
}

/// `a = [1/2 + i(M - eps)]/2`, `b = [-i(M + eps) - 1/2]/2`, `c = 1/2` and the
/// primed triple with `eps -> -eps`, in terms of the dimensionless
/// `M = m c rho / hbar`, `eps = E rho / (c hbar)`.
pub fn physical_params(u: &PhysicalUnits) -> (HypParams, HypParams) {
    let (eps, m) = (u.eps(), u.big_m());
    let half = C64::new(0.5, 0.0);
    let make = |e: f64| {
        let a = (half + I * (m - e)) / 2.0;
        let b = (-I * (m + e) - half) / 2.0;
        HypParams::new(a, b, half).expect("c = 1/2")
    };
    (make(eps), make(-eps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Oscillatory,
    Evanescent,
    Threshold,
}

/// Regime and `p = sqrt(eps^2 - M^2)` or `q = sqrt(M^2 - eps^2)` (0 at threshold).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatRegime {
    pub regime: Regime,
    pub p_or_q: f64,
}

impl FlatRegime {
    pub fn classify(eps: f64, mass: f64) -> Self {
        let d = eps * eps - mass * mass;
        if d == 0.0 {
            FlatRegime {
                regime: Regime::Threshold,
                p_or_q: 0.0,
            }
        } else if d > 0.0 {
            FlatRegime {
                regime: Regime::Oscillatory,
                p_or_q: d.sqrt(),
            }
        } else {
            FlatRegime {
                regime: Regime::Evanescent,
                p_or_q: (-d).sqrt(),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Combo {
    First,
    Second,
}

/// `(h, g)` together with their exact `r`-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatSample {
    pub h: f64,
    pub g: f64,
    pub dh: f64,
    pub dg: f64,
}

fn sample(eps: f64, mass: f64, r: f64, combo: Combo) -> FlatSample {
    let reg = FlatRegime::classify(eps, mass);
    let k = reg.p_or_q;
    let em = eps - mass;
    match (reg.regime, combo) {
        (Regime::Oscillatory, Combo::First) => {
            let (s, c) = (k * r).sin_cos();
            FlatSample { h: c, g: em / k * s, dh: -k * s, dg: em * c }
        }
        (Regime::Oscillatory, Combo::Second) => {
            let (s, c) = (k * r).sin_cos();
            FlatSample { h: s, g: -em / k * c, dh: k * c, dg: em * s }
        }
        (Regime::Evanescent, Combo::First) => {
            let (s, c) = ((k * r).sinh(), (k * r).cosh());
            FlatSample { h: c, g: em / k * s, dh: k * s, dg: em * c }
        }
        (Regime::Evanescent, Combo::Second) => {
            let (s, c) = ((k * r).sinh(), (k * r).cosh());
            FlatSample { h: s, g: em / k * c, dh: k * c, dg: em * s }
        }
        (Regime::Threshold, Combo::First) => FlatSample { h: 1.0, g: 0.0, dh: 0.0, dg: 0.0 },
        (Regime::Threshold, Combo::Second) => FlatSample {
            h: (eps + mass) * r,
            g: -1.0,
            dh: eps + mass,
            dg: 0.0,
        },
    }
}

/// First (`cos`/`cosh`-led) or second (`sin`/`sinh`-led) combination off threshold.
pub fn minkowski_jmin(eps: f64, mass: f64, r: f64, combo: Combo) -> Result<FlatSample> {
    if FlatRegime::classify(eps, mass).regime == Regime::Threshold {
        return Err(Error::Degenerate {
            what: "eps^2 - M^2 (threshold; use minkowski_threshold)",
            value: C64::new(0.0, 0.0),
        });
    }
    Ok(sample(eps, mass, r, combo))
}

/// The `eps = M` limits: First `(1, 0)`, Second `((eps + M) r, -1)`.
pub fn minkowski_threshold(eps: f64, mass: f64, r: f64, combo: Combo) -> Result<FlatSample> {
    if FlatRegime::classify(eps, mass).regime != Regime::Threshold {
        return Err(Error::Degenerate {
            what: "eps^2 - M^2 (not at threshold)",
            value: C64::new(eps * eps - mass * mass, 0.0),
        });
    }
    Ok(sample(eps, mass, r, combo))
}

/// `max(|h' + (eps + M) g|, |g' - (eps - M) h|)`.
pub fn minkowski_residual(eps: f64, mass: f64, s: &FlatSample) -> f64 {
    let r1 = s.dh + (eps + mass) * s.g;
    let r2 = s.dg - (eps - mass) * s.h;
    r1.abs().max(r2.abs())
}

/// `exp(-sqrt(M^2 - eps^2) r)`, the decaying bound profile.
pub fn flat_bound_profile(eps: f64, mass: f64, r: f64) -> Result<f64> {
    if !(mass > eps && eps >= 0.0) {
        return Err(Error::Domain {
            what: "eps (bound profile needs 0 <= eps < M)",
            value: eps,
        });
    }
    Ok((-(mass * mass - eps * eps).sqrt() * r).exp())
}

/// Errors of the de Sitter `j_min` solutions against their flat limits at
/// one curvature radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub rho: f64,
    /// `|F_nonzero(R) - cos pR|`
    pub err_cos: f64,
    /// `|pR z^(-1/2) F_zero(R) - sin pR|`
    pub err_sin: f64,
    /// Same two errors using only the real parts of the de Sitter values.
    pub err_cos_re: f64,
    pub err_sin_re: f64,
}

/// The flat-limit convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitStudy {
    pub p: f64,
    pub rows: Vec<LimitRow>,
    /// Fitted `s` in `err ~ rho^-s`, for the four error columns.
    pub order_cos: f64,
    pub order_sin: f64,
    pub order_cos_re: f64,
    pub order_sin_re: f64,
}

/// Evaluates the `k > 0` non-zero and zero `F` solutions at `z = R^2/rho^2`
/// with natural units (`eps = E rho`, `M = m rho`) and compares them with
/// `cos pR` and `sin pR`, `p = sqrt(E^2 - m^2)`.
pub fn limit_check(energy: f64, mass: f64, big_r: f64, rho_list: &[f64]) -> Result<LimitStudy> {
    let p2 = energy * energy - mass * mass;
    if !(p2 > 0.0) {
        return Err(Error::Domain {
            what: "E^2 - m^2 (the limit study needs the oscillatory regime)",
            value: p2,
        });
    }
    let p = p2.sqrt();
    let pr = p * big_r;
    let mut rows = Vec::with_capacity(rho_list.len());
    for &rho in rho_list {
        if !(rho > big_r) {
            return Err(Error::Domain {
                what: "rho (must exceed R)",
                value: rho,
            });
        }
        let u = PhysicalUnits::natural(energy, mass, rho);
        let z = (big_r / rho) * (big_r / rho);
        let nz = jmin_params(u.eps(), u.big_m(), KSign::Positive, Channel::F, JminKind::NonZero).eval(z)?;
        let zr = jmin_params(u.eps(), u.big_m(), KSign::Positive, Channel::F, JminKind::Zero).eval(z)?;
        let sin_part = zr * (pr / z.sqrt());
        rows.push(LimitRow {
            rho,
            err_cos: (nz - pr.cos()).norm(),
            err_sin: (sin_part - pr.sin()).norm(),
            err_cos_re: (nz.re - pr.cos()).abs(),
            err_sin_re: (sin_part.re - pr.sin()).abs(),
        });
    }
    let order = |col: fn(&LimitRow) -> f64| {
        let pts: Vec<(f64, f64)> = rows.iter().map(|r| (-r.rho.ln(), col(r).ln())).collect();
        slope(&pts)
    };
    Ok(LimitStudy {
        p,
        order_cos: order(|r| r.err_cos),
        order_sin: order(|r| r.err_sin),
        order_cos_re: order(|r| r.err_cos_re),
        order_sin_re: order(|r| r.err_sin_re),
        rows,
    })
}

/// Parameters of [`jmin_base`] in physical units, for cross-checking.
pub fn natural_jmin_params(u: &PhysicalUnits) -> (HypParams, HypParams) {
    (
        jmin_base(u.eps(), u.big_m(), KSign::Positive, Channel::F),
        jmin_base(u.eps(), u.big_m(), KSign::Positive, Channel::G),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillatory_example() {
        let s = minkowski_jmin(5.0, 3.0, 1.0, Combo::First).unwrap();
        assert!((s.h - (-0.653_643_620_863_611_9)).abs() < 1e-12);
        assert!((s.g - (-0.378_401_247_653_964_56)).abs() < 1e-12);
        assert!(minkowski_residual(5.0, 3.0, &s) < 1e-10);
        let s0 = minkowski_jmin(5.0, 3.0, 0.0, Combo::First).unwrap();
        assert_eq!((s0.h, s0.g), (1.0, 0.0));
    }

    #[test]
    fn evanescent_example() {
        let s = minkowski_jmin(1.0, 2.0, 1.0, Combo::First).unwrap();
        let q = 3f64.sqrt();
        assert!((s.h - q.cosh()).abs() < 1e-14);
        assert!((s.g + q.sinh() / q).abs() < 1e-14);
        for combo in [Combo::First, Combo::Second] {
            for &r in &[0.0, 0.4, 2.0] {
                for &(e, m) in &[(1.0, 2.0), (5.0, 3.0), (0.0, 1.0), (2.0, 0.0)] {
                    let s = minkowski_jmin(e, m, r, combo).unwrap();
                    assert!(minkowski_residual(e, m, &s) < 1e-10 * (1.0 + s.h.abs() + s.g.abs()));
                }
            }
        }
    }

    #[test]
    fn threshold_is_separate_and_continuous() {
        assert!(minkowski_jmin(2.0, 2.0, 0.5, Combo::First).is_err());
        for combo in [Combo::First, Combo::Second] {
            let t = minkowski_threshold(2.0, 2.0, 0.5, combo).unwrap();
            assert_eq!(minkowski_residual(2.0, 2.0, &t), 0.0);
        }
        let t = minkowski_threshold(2.0, 2.0, 0.5, Combo::First).unwrap();
        for &e in &[2.0 + 1e-7, 2.0 - 1e-7] {
            let s = minkowski_jmin(e, 2.0, 0.5, Combo::First).unwrap();
            assert!((s.h - t.h).abs() < 1e-6 && (s.g - t.g).abs() < 1e-6);
        }
    }

    #[test]
    fn bound_profile() {
        assert_eq!(flat_bound_profile(0.0, 1.0, 0.0).unwrap(), 1.0);
        assert!((flat_bound_profile(0.0, 1.0, 1.0).unwrap() - (-1f64).exp()).abs() < 1e-15);
        assert!((flat_bound_profile(3.0, 5.0, 0.5).unwrap() - (-2f64).exp()).abs() < 1e-15);
        assert!(flat_bound_profile(2.0, 1.0, 0.5).is_err());
    }

    #[test]
    fn physical_params_reduce_to_jmin() {
        let u = PhysicalUnits::natural(1.3, 0.7, 1.0);
        let (a, b) = physical_params(&u);
        let (ja, jb) = natural_jmin_params(&u);
        for (x, y) in [(a, ja), (b, jb)] {
            assert!((x.a() - y.a()).norm() < 1e-15 && (x.b() - y.b()).norm() < 1e-15 && x.c() == y.c());
        }
        let u2 = PhysicalUnits { rho_curv: 2.0, ..u };
        let (a2, _) = physical_params(&u2);
        assert!((a2.a().im - 2.0 * a.a().im).abs() < 1e-15);
        let zero_e = physical_params(&PhysicalUnits::natural(0.0, 0.7, 1.0)).0;
        assert!((zero_e.a().re - 0.25).abs() < 1e-15 && (zero_e.b().re + 0.25).abs() < 1e-15);
    }

    #[test]
    fn first_series_term_limit() {
        let (e, m, r) = (1.0, 0.5, 1.0);
        let p2 = e * e - m * m;
        let rho = 1e6;
        let (a, _) = physical_params(&PhysicalUnits::natural(e, m, rho));
        let t = a.a() * a.b() / a.c() * (r * r / (rho * rho));
        assert!((t - C64::new(-p2 * r * r / 2.0, 0.0)).norm() < 1e-5);
    }

    #[test]
    fn limit_errors_shrink() {
        let m = 0.5;
        let e = ((core::f64::consts::FRAC_PI_2).powi(2) + m * m).sqrt();
        let st = limit_check(e, m, 1.0, &[1e3]).unwrap();
        assert!(st.rows[0].err_cos < 1e-2);
        let st = limit_check(1.0, 0.5, 1.0, &[1e2, 1e3, 1e4]).unwrap();
        assert!(st.rows[0].err_cos > st.rows[1].err_cos && st.rows[1].err_cos > st.rows[2].err_cos);
        assert!((st.order_cos_re - 2.0).abs() < 0.2);
    }
}
