use num_traits::Float;

use super::{coupling_coeffs, validate, HalfInt, LatticeViolation};
use crate::{Error, Result};

fn factorial(n: i32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Small Wigner function `d^j_{mp, sig}(theta) = <j mp| exp(-i theta J_y) |j sig>`.
///
/// Evaluated with the explicit finite sum over `s`; this is the convention in
/// which the angular recursion relations of the monopole problem hold as
/// written (see [`check_recursions`]).
pub fn wigner_d(j: HalfInt, mp: HalfInt, sig: HalfInt, theta: f64) -> Result<f64> {
    let on_lattice = |x: HalfInt| x.abs() <= j && (j - x).is_integer();
    if j.twice() < 0 || !on_lattice(mp) || !on_lattice(sig) {
        let m = if on_lattice(mp) { sig } else { mp };
        return Err(Error::Lattice(if m.abs() > j {
            LatticeViolation::ProjectionRange { j, m }
        } else {
            LatticeViolation::ProjectionParity { j, m }
        }));
    }
    Ok(small_d(j, mp, sig, theta))
}

/// `wigner_d` with absent projections (`|sig| > j`) read as zero.
pub(crate) fn small_d_or_zero(j: HalfInt, mp: HalfInt, sig: HalfInt, theta: f64) -> f64 {
    if sig.abs() > j || mp.abs() > j {
        0.0
    } else {
        small_d(j, mp, sig, theta)
    }
}

fn small_d(j: HalfInt, mp: HalfInt, sig: HalfInt, theta: f64) -> f64 {
    // all of j +- mp, j +- sig, mp - sig are integers here
    let jp_mp = (j + mp).as_int().unwrap();
    let jm_mp = (j - mp).as_int().unwrap();
    let jp_s = (j + sig).as_int().unwrap();
    let jm_s = (j - sig).as_int().unwrap();
    let dm = (mp - sig).as_int().unwrap();
    let norm = (factorial(jp_mp) * factorial(jm_mp) * factorial(jp_s) * factorial(jm_s)).sqrt();
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let s_min = 0.max(-dm);
    let s_max = jp_s.min(jm_mp);
    let mut sum = 0.0;
    for s in s_min..=s_max {
        let den = factorial(jp_s - s) * factorial(s) * factorial(dm + s) * factorial(jm_mp - s);
        let sign = if (dm + s) % 2 == 0 { 1.0 } else { -1.0 };
        let cos_pow = (2 * j.twice() + sig.twice() - mp.twice()) / 2 - 2 * s;
        let sin_pow = dm + 2 * s;
        sum += sign / den * ch.powi(cos_pow) * sh.powi(sin_pow);
    }
    norm * sum
}

/// 5-point central difference step for theta derivatives in the checks.
pub const THETA_STEP: f64 = 1e-4;

pub(crate) fn d_theta(f: impl Fn(f64) -> f64, theta: f64) -> f64 {
    let h = THETA_STEP;
    (f(theta - 2.0 * h) - 8.0 * f(theta - h) + 8.0 * f(theta + h) - f(theta + 2.0 * h)) / (12.0 * h)
}

/// Largest residual of the four first-order relations linking the
/// `D_{k-3/2}, ..., D_{k+3/2}` of a monopole multiplet:
///
/// ```text
/// d/dtheta D_{k+1/2} = a D_{k-1/2} - b D_{k+3/2}
/// d/dtheta D_{k-1/2} = c D_{k-3/2} - a D_{k+1/2}
/// [-m - (k+1/2) cos] / sin D_{k+1/2} = -a D_{k-1/2} - b D_{k+3/2}
/// [-m - (k-1/2) cos] / sin D_{k-1/2} = -c D_{k-3/2} - a D_{k+1/2}
/// ```
///
/// with `D_sig = d^j_{-m, sig}(theta)` and absent projections set to zero.
pub fn check_recursions(j: HalfInt, k: HalfInt, m: HalfInt, theta: f64) -> Result<f64> {
    validate(k, j, m)?;
    if !(theta > 0.0 && theta < core::f64::consts::PI) {
        return Err(Error::Domain {
            what: "theta (open interval (0, pi))",
            value: theta,
        });
    }
    let cc = coupling_coeffs(j, k);
    let (a, b, c) = (cc.a, cc.b, cc.c);
    let half = HalfInt::HALF;
    let d = |sig: HalfInt, th: f64| small_d_or_zero(j, -m, sig, th);
    let (s_mm, s_m, s_p, s_pp) = (k - HalfInt::from_twice(3), k - half, k + half, k + HalfInt::from_twice(3));
    let (dmm, dm, dp, dpp) = (d(s_mm, theta), d(s_m, theta), d(s_p, theta), d(s_pp, theta));
    let (sn, cs) = (theta.sin(), theta.cos());
    let mv = m.value();
    let kv = k.value();
    let r1 = d_theta(|t| d(s_p, t), theta) - (a * dm - b * dpp);
    let r2 = d_theta(|t| d(s_m, t), theta) - (c * dmm - a * dp);
    let r3 = (-mv - (kv + 0.5) * cs) / sn * dp - (-a * dm - b * dpp);
    let r4 = (-mv - (kv - 0.5) * cs) / sn * dm - (-c * dmm - a * dp);
    Ok(r1.abs().max(r2.abs()).max(r3.abs()).max(r4.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn spin_half_closed_form() {
        for &th in &[0.0, 0.4, 1.3, 2.9, PI] {
            let v = wigner_d(h(1), h(1), h(1), th).unwrap();
            assert!((v - (th / 2.0).cos()).abs() < 1e-15);
            let w = wigner_d(h(1), h(1), h(-1), th).unwrap();
            assert!((w + (th / 2.0).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn identity_rotation() {
        for tj in 0..6 {
            for tmp in (-tj..=tj).step_by(2) {
                for ts in (-tj..=tj).step_by(2) {
                    let v = wigner_d(h(tj), h(tmp), h(ts), 0.0).unwrap();
                    assert_eq!(v, if tmp == ts { 1.0 } else { 0.0 });
                }
            }
        }
    }

    #[test]
    fn spin_one_closed_form() {
        // d^1_{00} = cos, d^1_{10} = -sin/sqrt2, d^1_{11} = (1 + cos)/2
        let th = 0.83;
        let s2 = core::f64::consts::SQRT_2;
        assert!((wigner_d(h(2), h(0), h(0), th).unwrap() - th.cos()).abs() < 1e-15);
        assert!((wigner_d(h(2), h(2), h(0), th).unwrap() + th.sin() / s2).abs() < 1e-15);
        assert!((wigner_d(h(2), h(2), h(2), th).unwrap() - (1.0 + th.cos()) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn off_lattice_projection_rejected() {
        assert!(wigner_d(h(1), h(3), h(1), 0.5).is_err());
        assert!(wigner_d(h(2), h(1), h(0), 0.5).is_err());
    }

    #[test]
    fn recursions_hold() {
        assert!(check_recursions(h(2), h(1), h(0), 1.0).unwrap() < 1e-6);
        assert!(check_recursions(h(3), h(2), h(1), 2.0).unwrap() < 1e-6);
        assert!(check_recursions(h(1), h(1), h(1), 1.0).is_err());
    }
}
