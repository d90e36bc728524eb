//! The `j = j_min` sector.
//!
//! Here `nu = 0` and the radial system reads
//!
//! ```text
//! sqrt(z(1-z)) (d/dz - i eps / (2(1-z))) F + (M + eps - i/2)/2 G = 0
//! sqrt(z(1-z)) (d/dz + i eps / (2(1-z))) G + (M - eps - i/2)/2 F = 0
//! ```
//!
//! with `M -> -M` for `k < 0`. Each channel has a solution equal to 1 at the
//! origin ("non-zero") and one vanishing like `z^(1/2)` ("zero").

use core::f64::consts::FRAC_1_SQRT_2;

use num_traits::Float;

use crate::angular::{Delta, HalfInt};
use crate::profile::{HypProfile, Jet, SeriesArgument};
use crate::radial::{fg_from_FG, Channel, RadialParams};
use crate::special::HypParams;
use crate::{Error, Result, C64, I};

/// Sign of the monopole charge `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KSign {
    Positive,
    Negative,
}

impl KSign {
    pub fn of(k: HalfInt) -> Option<Self> {
        match k.twice().signum() {
            1 => Some(Self::Positive),
            -1 => Some(Self::Negative),
            _ => None,
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Self::Positive => 1.0,
            Self::Negative => -1.0,
        }
    }

    /// The generic-`j` sign `delta` whose radial system coincides with this
    /// sector at `nu = 0`.
    pub fn delta(self) -> Delta {
        match self {
            Self::Positive => Delta::Plus,
            Self::Negative => Delta::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JminKind {
    NonZero,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JminFamily {
    pub channel: Channel,
    pub kind: JminKind,
    pub profile: HypProfile,
}

impl JminFamily {
    pub fn exp_b(&self) -> C64 {
        self.profile.exp_one_minus_z
    }

    pub fn hyp(&self) -> HypParams {
        self.profile.hyp
    }

    pub fn eval(&self, z: f64) -> Result<C64> {
        self.profile.eval(z)
    }

    pub fn jet(&self, z: f64) -> Result<Jet> {
        self.profile.jet(z)
    }
}

/// `(a, b, c)` of the non-zero solution in `channel`:
/// `a, b = -+ i eps/2 +- (i M + 1/2)/2`, `c = 1/2`, upper sign for `F`.
pub fn jmin_base(eps: f64, mass: f64, sign_k: KSign, channel: Channel) -> HypParams {
    let m = sign_k.sign() * mass;
    let shift = (I * m + 0.5) / 2.0;
    let e = match channel {
        Channel::F => C64::new(0.0, -eps / 2.0),
        Channel::G => C64::new(0.0, eps / 2.0),
    };
    HypParams::new(e + shift, e - shift, C64::new(0.5, 0.0)).expect("c = 1/2")
}

pub fn jmin_params(eps: f64, mass: f64, sign_k: KSign, channel: Channel, kind: JminKind) -> JminFamily {
    let base = jmin_base(eps, mass, sign_k, channel);
    let exp_b = match channel {
        Channel::F => C64::new(0.0, -eps / 2.0),
        Channel::G => C64::new(0.0, eps / 2.0),
    };
    let (exp_a, hyp) = match kind {
        JminKind::NonZero => (C64::new(0.0, 0.0), base),
        JminKind::Zero => (
            C64::new(0.5, 0.0),
            HypParams::new(base.a() + 0.5, base.b() + 0.5, C64::new(1.5, 0.0)).expect("c = 3/2"),
        ),
    };
    JminFamily {
        channel,
        kind,
        profile: HypProfile::new(exp_a, exp_b, hyp, SeriesArgument::Z),
    }
}

pub fn jmin_eval(fam: &JminFamily, z: f64) -> Result<C64> {
    fam.eval(z)
}

/// The generic radial parameters that reproduce this sector (`nu = 0`).
pub fn jmin_radial_params(eps: f64, mass: f64, sign_k: KSign) -> Result<RadialParams> {
    RadialParams::new(eps, mass, 0.0, sign_k.delta())
}

/// Which non-zero solution is paired with which zero solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JminPairing {
    /// `F` non-zero with `G` zero: `a F0 + i c G0 = 0` up to sign.
    FNonZeroGZero,
    /// `G` non-zero with `F` zero: `a' G0 + i c' F0 = 0` up to sign.
    GNonZeroFZero,
}

impl JminPairing {
    pub const ALL: [JminPairing; 2] = [Self::FNonZeroGZero, Self::GNonZeroFZero];
}

/// A solution of the `j_min` system built from one pairing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JminPair {
    pub pairing: JminPairing,
    pub eps: f64,
    pub mass: f64,
    pub sign_k: KSign,
    pub f_family: JminFamily,
    pub g_family: JminFamily,
    pub f0: C64,
    pub g0: C64,
}

/// Point used to fix the sign of the zero-solution amplitude.
const SIGN_PROBE_Z: f64 = 0.3;

/// `(amp_nonzero, amp_zero) = (1, +- i a / c)` (resp. `a'/c'`), the sign
/// chosen by the smaller first-order residual.
pub fn jmin_amplitudes(pairing: JminPairing, eps: f64, mass: f64, sign_k: KSign) -> Result<(C64, C64)> {
    let pair = JminPair::new(pairing, eps, mass, sign_k)?;
    match pairing {
        JminPairing::FNonZeroGZero => Ok((pair.f0, pair.g0)),
        JminPairing::GNonZeroFZero => Ok((pair.g0, pair.f0)),
    }
}

impl JminPair {
    pub fn new(pairing: JminPairing, eps: f64, mass: f64, sign_k: KSign) -> Result<Self> {
        let (nz_channel, z_channel) = match pairing {
            JminPairing::FNonZeroGZero => (Channel::F, Channel::G),
            JminPairing::GNonZeroFZero => (Channel::G, Channel::F),
        };
        let nz = jmin_params(eps, mass, sign_k, nz_channel, JminKind::NonZero);
        let zz = jmin_params(eps, mass, sign_k, z_channel, JminKind::Zero);
        let h = nz.hyp();
        if h.a().norm() < 1e-14 {
            return Err(Error::Degenerate {
                what: "j_min coupling a",
                value: h.a(),
            });
        }
        let magnitude = I * h.a() / h.c();
        let one = C64::new(1.0, 0.0);
        let build = |amp: C64| {
            let (f_family, g_family, f0, g0) = match pairing {
                JminPairing::FNonZeroGZero => (nz, zz, one, amp),
                JminPairing::GNonZeroFZero => (zz, nz, amp, one),
            };
            JminPair {
                pairing,
                eps,
                mass,
                sign_k,
                f_family,
                g_family,
                f0,
                g0,
            }
        };
        let plus = build(magnitude);
        let minus = build(-magnitude);
        let size = |p: &JminPair| -> Result<f64> {
            let r = p.relative_residual(SIGN_PROBE_Z)?;
            Ok(r[0].max(r[1]))
        };
        Ok(if size(&plus)? <= size(&minus)? { plus } else { minus })
    }

    pub fn eval(&self, z: f64) -> Result<(C64, C64)> {
        Ok((self.f0 * self.f_family.eval(z)?, self.g0 * self.g_family.eval(z)?))
    }

    fn signed_mass(&self) -> f64 {
        self.sign_k.sign() * self.mass
    }

    fn terms(&self, z: f64) -> Result<[[C64; 3]; 2]> {
        let jf = self.f_family.jet(z)? * self.f0;
        let jg = self.g_family.jet(z)? * self.g0;
        let w = (z * (1.0 - z)).sqrt();
        let phase = I * self.eps / (2.0 * (1.0 - z));
        let m = self.signed_mass();
        let k1 = C64::new(m + self.eps, -0.5) / 2.0;
        let k2 = C64::new(m - self.eps, -0.5) / 2.0;
        Ok([
            [w * jf.d1, -w * phase * jf.value, k1 * jg.value],
            [w * jg.d1, w * phase * jg.value, k2 * jf.value],
        ])
    }

    /// Left-hand sides of the two `j_min` first-order equations.
    pub fn residual(&self, z: f64) -> Result<[C64; 2]> {
        let t = self.terms(z)?;
        Ok([t[0].iter().sum(), t[1].iter().sum()])
    }

    /// Residuals over the sum of the moduli of the terms.
    pub fn relative_residual(&self, z: f64) -> Result<[f64; 2]> {
        let t = self.terms(z)?;
        let rel = |row: &[C64; 3]| {
            let s: f64 = row.iter().map(|x| x.norm()).sum();
            let v: C64 = row.iter().sum();
            if s == 0.0 {
                0.0
            } else {
                v.norm() / s
            }
        };
        Ok([rel(&t[0]), rel(&t[1])])
    }

    /// The four spinor radial functions, two of them identically zero.
    pub fn f1234(&self, z: f64) -> Result<[C64; 4]> {
        let (f, g) = self.eval(z)?;
        Ok(hg_reconstruct(f, g, z, self.sign_k))
    }
}

/// `jmin_first_order_residual` for a pair.
pub fn jmin_first_order_residual(pair: &JminPair, z: f64) -> Result<[C64; 2]> {
    pair.residual(z)
}

/// `z(1-z) X'' + (1/2 - z) X' + V X = 0` with
/// `V = -(M - i/2)^2/4 + eps(eps -+ i)/(4(1-z))` (upper sign for `F`).
pub fn jmin_second_order_coefficients(eps: f64, mass: f64, sign_k: KSign, channel: Channel, z: f64) -> [C64; 3] {
    let m = C64::new(sign_k.sign() * mass, -0.5);
    let e = C64::new(eps, 0.0);
    let et = match channel {
        Channel::F => e * (e - I),
        Channel::G => e * (e + I),
    };
    [C64::new(z * (1.0 - z), 0.0), C64::new(0.5 - z, 0.0), -m * m / 4.0 + et / (4.0 * (1.0 - z))]
}

/// Relative residual of the second-order equation for one family.
pub fn jmin_second_order_residual(fam: &JminFamily, eps: f64, mass: f64, sign_k: KSign, z: f64) -> Result<f64> {
    let j = fam.jet(z)?;
    let k = jmin_second_order_coefficients(eps, mass, sign_k, fam.channel, z);
    let t = [k[0] * j.d2, k[1] * j.d1, k[2] * j.value];
    let s: f64 = t.iter().map(|x| x.norm()).sum();
    let v: C64 = t.iter().sum();
    Ok(if s == 0.0 { 0.0 } else { v.norm() / s })
}

/// `(h, g)` from `(F, G)`: `h + g = e^{-i rho/2}(F + G)`, `h - g = e^{i rho/2}(F - G)`.
#[allow(non_snake_case)]
pub fn hg_from_FG(F: C64, G: C64, z: f64) -> (C64, C64) {
    fg_from_FG(F, G, z)
}

/// `f1..f4` of the `j_min` spinor from `(F, G)`.
///
/// `k > 0`: `h = (f1 + f3)/sqrt2`, `g = (f1 - f3)/(i sqrt2)`, `f2 = f4 = 0`.
/// `k < 0`: `g = (f2 + f4)/sqrt2`, `h = (f2 - f4)/(i sqrt2)`, `f1 = f3 = 0`.
#[allow(non_snake_case)]
pub fn hg_reconstruct(F: C64, G: C64, z: f64, sign_k: KSign) -> [C64; 4] {
    let (h, g) = hg_from_FG(F, G, z);
    let zero = C64::new(0.0, 0.0);
    match sign_k {
        KSign::Positive => [(h + I * g) * FRAC_1_SQRT_2, zero, (h - I * g) * FRAC_1_SQRT_2, zero],
        KSign::Negative => [zero, (g + I * h) * FRAC_1_SQRT_2, zero, (g - I * h) * FRAC_1_SQRT_2],
    }
}

/// Inverse of the `f`-component step of [`hg_reconstruct`]: `(h, g)`.
pub fn hg_from_f1234(f: &[C64; 4], sign_k: KSign) -> (C64, C64) {
    match sign_k {
        KSign::Positive => ((f[0] + f[2]) * FRAC_1_SQRT_2, (f[0] - f[2]) * FRAC_1_SQRT_2 / I),
        KSign::Negative => ((f[1] - f[3]) * FRAC_1_SQRT_2 / I, (f[1] + f[3]) * FRAC_1_SQRT_2),
    }
}
