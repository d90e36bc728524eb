use num_traits::Float;

use super::wigner::THETA_STEP;
use super::{small_d_or_zero, validate, AngularSector, HalfInt};
use crate::gamma_matrices::{add, gamma1, gamma2, i_sigma12, scale, sub, Spinor};
use crate::{Error, Result, C64, I};

/// `D_sig = e^{i m phi} d^j_{-m, sig}(theta)`, zero for absent `sig`.
pub(crate) fn wigner_big_d(j: HalfInt, m: HalfInt, sig: HalfInt, theta: f64, phi: f64) -> C64 {
    let phase = C64::from_polar(1.0, m.value() * phi);
    phase * small_d_or_zero(j, -m, sig, theta)
}

/// `(f1 D_{k-1/2}, f2 D_{k+1/2}, f3 D_{k-1/2}, f4 D_{k+1/2})`.
pub fn angular_spinor(j: HalfInt, k: HalfInt, m: HalfInt, f: &[C64; 4], theta: f64, phi: f64) -> Spinor {
    let dm = wigner_big_d(j, m, k - HalfInt::HALF, theta, phi);
    let dp = wigner_big_d(j, m, k + HalfInt::HALF, theta, phi);
    [f[0] * dm, f[1] * dp, f[2] * dm, f[3] * dp]
}

pub(crate) fn fd5(f: impl Fn(f64) -> Spinor, x: f64, h: f64) -> Spinor {
    let (a, b, c, d) = (f(x - 2.0 * h), f(x - h), f(x + h), f(x + 2.0 * h));
    let mut out = [C64::new(0.0, 0.0); 4];
    for i in 0..4 {
        out[i] = (8.0 * (c[i] - b[i]) - (d[i] - a[i])) / (12.0 * h);
    }
    out
}

/// Applies `Sigma^k = i g1 d_theta + g2 (i d_phi + (i s12 - k) cos theta) / sin theta`
/// to an arbitrary spinor field, with 5-point differences in both angles.
pub fn apply_sigma(k: HalfInt, psi: impl Fn(f64, f64) -> Spinor, theta: f64, phi: f64) -> Result<Spinor> {
    check_theta(theta)?;
    let d_th = fd5(|t| psi(t, phi), theta, THETA_STEP);
    let d_ph = fd5(|p| psi(theta, p), phi, THETA_STEP);
    let p0 = psi(theta, phi);
    let charge = sub(&i_sigma12(&p0), &scale(C64::new(k.value(), 0.0), &p0));
    let inner = add(&scale(I, &d_ph), &scale(C64::new(theta.cos(), 0.0), &charge));
    let left = scale(I, &gamma1(&d_th));
    let right = scale(C64::new(1.0 / theta.sin(), 0.0), &gamma2(&inner));
    Ok(add(&left, &right))
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < core::f64::consts::PI {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "theta (open interval (0, pi))",
            value: theta,
        })
    }
}

/// Closed-form action of `Sigma^k` on the separated spinor with radial
/// values `f` (at `phi = 0`):
/// `i nu (-f4 D_{k-1/2}, f3 D_{k+1/2}, f2 D_{k-1/2}, -f1 D_{k+1/2})`.
pub fn sigma_action(sector: &AngularSector, f: &[C64; 4], theta: f64) -> Result<Spinor> {
    check_theta(theta)?;
    let qn = &sector.qn;
    let dm = wigner_big_d(qn.j, qn.m, qn.k - HalfInt::HALF, theta, 0.0);
    let dp = wigner_big_d(qn.j, qn.m, qn.k + HalfInt::HALF, theta, 0.0);
    let inu = I * sector.nu;
    Ok([-inu * f[3] * dm, inu * f[2] * dp, inu * f[1] * dm, -inu * f[0] * dp])
}

/// Direct differential evaluation of `Sigma^k` on the same spinor.
pub fn sigma_direct(sector: &AngularSector, f: &[C64; 4], theta: f64) -> Result<Spinor> {
    let qn = &sector.qn;
    apply_sigma(qn.k, |t, p| angular_spinor(qn.j, qn.k, qn.m, f, t, p), theta, 0.0)
}

/// Angular part of the `j = j_min` spinor: `(f1 D, 0, f3 D, 0)` for `k > 0`
/// and `(0, f2 D, 0, f4 D)` for `k < 0`, where `radial` holds the two
/// nonzero radial values in order.
pub fn jmin_spinor_angular(k: HalfInt, m: HalfInt, radial: [C64; 2], theta: f64, phi: f64) -> Spinor {
    let j = k.abs() - HalfInt::HALF;
    let z = C64::new(0.0, 0.0);
    if k.twice() > 0 {
        let d = wigner_big_d(j, m, k - HalfInt::HALF, theta, phi);
        [radial[0] * d, z, radial[1] * d, z]
    } else {
        let d = wigner_big_d(j, m, k + HalfInt::HALF, theta, phi);
        [z, radial[0] * d, z, radial[1] * d]
    }
}

/// Largest `|Sigma^k psi|` over all `m` of the `j_min` multiplet, with
/// generic radial values. Zero up to finite-difference error.
pub fn jmin_annihilation(k: HalfInt, theta: f64) -> Result<f64> {
    let j = k.abs() - HalfInt::HALF;
    let radial = [C64::new(1.0, 0.3), C64::new(0.7, -0.2)];
    let mut worst: f64 = 0.0;
    let mut m = -j;
    while m <= j {
        validate(k, j, m)?;
        let out = apply_sigma(k, |t, p| jmin_spinor_angular(k, m, radial, t, p), theta, 0.4)?;
        worst = worst.max(crate::gamma_matrices::norm(&out));
        m = m + HalfInt::ONE;
    }
    Ok(worst)
}
