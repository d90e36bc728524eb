use core::f64::consts::PI;

use num_traits::Float;

use crate::{Error, Result, C64};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const POLE_TOL: f64 = 1e-12;

/// True when `z` lies within `tol` of `0, -1, -2, ...`.
pub fn is_nonpositive_integer(z: C64, tol: f64) -> bool {
    z.im.abs() <= tol && z.re <= tol && (z.re - z.re.round()).abs() <= tol
}

/// Principal logarithm of `Gamma(z)`; the imaginary part is reduced to
/// `(-pi, pi]`.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z, POLE_TOL) {
        return Err(Error::Pole {
            argument: "z",
            value: z,
        });
    }
    let raw = if z.re < 0.5 {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        C64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(C64::new(1.0, 0.0) - z)
    } else {
        ln_gamma_right(z)
    };
    Ok(wrap_imag(raw))
}

/// `Gamma(z)`.
pub fn gamma(z: C64) -> Result<C64> {
    ln_gamma(z).map(|l| l.exp())
}

/// `1 / Gamma(z)`, entire: exactly zero at the poles of Gamma.
pub fn recip_gamma(z: C64) -> C64 {
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => C64::new(0.0, 0.0),
    }
}

fn ln_gamma_right(z: C64) -> C64 {
    let z1 = z - 1.0;
    let mut series = C64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &p) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += p / (z1 + i as f64);
    }
    let t = z1 + LANCZOS_G + 0.5;
    C64::new(LN_SQRT_2PI, 0.0) + (z1 + 0.5) * t.ln() - t + series.ln()
}

/// `ln sin(pi z)` up to a multiple of `2 pi i`.
fn ln_sin_pi(z: C64) -> C64 {
    // sin(pi z) is 2-periodic in Re z
    let shift = (z.re / 2.0).round() * 2.0;
    let w = C64::new(z.re - shift, z.im) * PI;
    if w.im.abs() < 30.0 {
        return w.sin().ln();
    }
    let i = C64::new(0.0, 1.0);
    if w.im > 0.0 {
        -i * w + C64::new(0.0, 0.5).ln() + (C64::new(1.0, 0.0) - (i * w * 2.0).exp()).ln()
    } else {
        i * w + C64::new(0.0, -0.5).ln() + (C64::new(1.0, 0.0) - (-i * w * 2.0).exp()).ln()
    }
}

fn wrap_imag(z: C64) -> C64 {
    let two_pi = 2.0 * PI;
    let mut im = z.im - two_pi * (z.im / two_pi).round();
    if im <= -PI {
        im += two_pi;
    }
    C64::new(z.re, im)
}
