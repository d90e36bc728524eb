//! Radial solutions for `j > j_min`.
//!
//! With `z = r^2` the separated Dirac equation becomes the first-order system
//!
//! ```text
//! (2 sqrt(z(1-z)) d/dz + nu sqrt((1-z)/z) - i eps sqrt(z/(1-z))) F + k1 G = 0
//! (2 sqrt(z(1-z)) d/dz - nu sqrt((1-z)/z) + i eps sqrt(z/(1-z))) G + k2 F = 0
//! ```
//!
//! with `k1 = eps + M - i nu - i/2`, `k2 = -eps + M + i nu - i/2`, and
//! `M -> -M` for `delta = -1`. Each channel is solved by
//! `z^A (1-z)^B 2F1(a, b; c; w)` in four ways: regular and singular at the
//! origin (`w = z`), in and out at the horizon (`w = 1 - z`).

mod coords;
mod residual;

pub use coords::{f1234_from_fg, fg_from_f1234, fg_from_FG, fg_matrix, CoordinateChart, FG_from_fg};
pub use residual::{
    first_order_residual, first_order_terms, relative_first_order_residual,
    relative_second_order_residual, second_order_coefficients, second_order_residual, wronskian,
};

use crate::angular::Delta;
use crate::profile::{HypProfile, Jet, SeriesArgument};
use crate::special::{kummer_series_params, HypParams, KummerIndex};
use crate::{Error, Result, C64, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Regular,
    Singular,
    In,
    Out,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [Self::Regular, Self::Singular, Self::In, Self::Out];
}

/// Energy, mass, `nu` and `delta` of one radial problem.
///
/// `nu` is taken as given (any real `>= 0`), not recomputed from `(j, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialParams {
    pub eps: f64,
    pub mass: f64,
    pub nu: f64,
    pub delta: Delta,
}

impl RadialParams {
    pub fn new(eps: f64, mass: f64, nu: f64, delta: Delta) -> Result<Self> {
        if !(nu >= 0.0) || !nu.is_finite() {
            return Err(Error::Domain { what: "nu", value: nu });
        }
        if !eps.is_finite() {
            return Err(Error::Domain { what: "eps", value: eps });
        }
        if !mass.is_finite() {
            return Err(Error::Domain { what: "mass", value: mass });
        }
        Ok(Self { eps, mass, nu, delta })
    }

    /// `delta * M`, the only place `delta` enters the radial equations.
    pub fn signed_mass(&self) -> f64 {
        self.delta.sign() * self.mass
    }

    /// `(k1, k2)` coupling constants of the first-order system.
    pub fn couplings(&self) -> (C64, C64) {
        let m = self.signed_mass();
        let k1 = C64::new(self.eps + m, -self.nu - 0.5);
        let k2 = C64::new(-self.eps + m, self.nu - 0.5);
        (k1, k2)
    }

    /// Hypergeometric parameters and `(A, B)` exponents of the regular solution
    /// in `channel`; every other family is derived from these.
    pub fn base(&self, channel: Channel) -> Result<(C64, C64, HypParams)> {
        let (eps, nu) = (self.eps, self.nu);
        let half_shift = (I * self.signed_mass() + 0.5) / 2.0;
        match channel {
            Channel::F => {
                let mid = C64::new(1.0 + nu, -eps) / 2.0;
                let hyp = HypParams::new(mid + half_shift, mid - half_shift, C64::new(nu + 1.5, 0.0))?;
                Ok((C64::new((1.0 + nu) / 2.0, 0.0), C64::new(0.0, -eps / 2.0), hyp))
            }
            Channel::G => {
                let mid = C64::new(nu, eps) / 2.0;
                let hyp = HypParams::new(mid + half_shift, mid - half_shift, C64::new(nu + 0.5, 0.0))?;
                Ok((C64::new(nu / 2.0, 0.0), C64::new(0.0, eps / 2.0), hyp))
            }
        }
    }
}

/// One closed-form radial function `z^A (1-z)^B 2F1(a, b; c; w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionFamily {
    pub channel: Channel,
    pub kind: FamilyKind,
    pub profile: HypProfile,
}

impl SolutionFamily {
    /// Power of `z` (`A` or `K`).
    pub fn exp_a(&self) -> C64 {
        self.profile.exp_z
    }

    /// Power of `1 - z` (`B` or `L`).
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

/// The `(1 - z)^(c - a - b)` solution is `F_in` in the F channel but
/// `G_out` in the G channel.
pub fn kummer_index(channel: Channel, kind: FamilyKind) -> KummerIndex {
    match (channel, kind) {
        (_, FamilyKind::Regular) => KummerIndex::U1,
        (_, FamilyKind::Singular) => KummerIndex::U5,
        (Channel::F, FamilyKind::Out) | (Channel::G, FamilyKind::In) => KummerIndex::U2,
        (Channel::F, FamilyKind::In) | (Channel::G, FamilyKind::Out) => KummerIndex::U6,
    }
}

/// Builds the closed-form family `(channel, kind)`.
pub fn family_params(p: &RadialParams, channel: Channel, kind: FamilyKind) -> Result<SolutionFamily> {
    let (exp_a, exp_b, base) = p.base(channel)?;
    let index = kummer_index(channel, kind);
    let hyp = kummer_series_params(index, base)?;
    let one = C64::new(1.0, 0.0);
    let profile = match index {
        KummerIndex::U1 => HypProfile::new(exp_a, exp_b, hyp, SeriesArgument::Z),
        KummerIndex::U5 => HypProfile::new(exp_a + one - base.c(), exp_b, hyp, SeriesArgument::Z),
        KummerIndex::U2 => HypProfile::new(exp_a, exp_b, hyp, SeriesArgument::OneMinusZ),
        KummerIndex::U6 => HypProfile::new(exp_a, exp_b + base.excess(), hyp, SeriesArgument::OneMinusZ),
    };
    Ok(SolutionFamily { channel, kind, profile })
}

/// `z^A (1-z)^B F(a,b;c;z)` for one channel and kind.
pub fn eval_solution(fam: &SolutionFamily, z: f64) -> Result<C64> {
    fam.eval(z)
}

const AMPLITUDE_TOL: f64 = 1e-14;

fn nonzero(what: &'static str, v: C64) -> Result<C64> {
    if v.norm() < AMPLITUDE_TOL {
        Err(Error::Degenerate { what, value: v })
    } else {
        Ok(v)
    }
}

/// Amplitudes `(F0, G0)` that make `(F0 F_kind, G0 G_kind)` a solution.
///
/// Regular pairs are normalized `G0 = 1`, all others `F0 = 1`:
///
/// * regular: `2 G0 a'b'/c' + k2 F0 = 0`
/// * singular: `F0 (-i eps - nu + i M + 1/2) + i (1 - 2 nu) G0 = 0`
/// * out: `G0 = k2 / (1 - 2 i eps)`
/// * in: `G0 = k2 (1/2 + i eps) / (2 a'b')`
pub fn pair_amplitudes(kind: FamilyKind, p: &RadialParams) -> Result<(C64, C64)> {
    let (_, k2) = p.couplings();
    let one = C64::new(1.0, 0.0);
    let (_, _, g) = p.base(Channel::G)?;
    match kind {
        FamilyKind::Regular => {
            let k2 = nonzero("-eps + M + i nu - i/2", k2)?;
            let f0 = -2.0 * g.a() * g.b() / g.c() / k2;
            Ok((f0, one))
        }
        FamilyKind::Singular => {
            let den = nonzero("i (1 - 2 nu)", C64::new(0.0, 1.0 - 2.0 * p.nu))?;
            let num = C64::new(0.5 - p.nu, p.signed_mass() - p.eps);
            Ok((one, -num / den))
        }
        FamilyKind::Out => Ok((one, k2 / C64::new(1.0, -2.0 * p.eps))),
        FamilyKind::In => {
            let den = nonzero("2 a'b'", 2.0 * g.a() * g.b())?;
            Ok((one, k2 * C64::new(0.5, p.eps) / den))
        }
    }
}

/// A solution `(F0 F_kind(z), G0 G_kind(z))` of the first-order system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPair {
    pub params: RadialParams,
    pub f_family: SolutionFamily,
    pub g_family: SolutionFamily,
    pub f0: C64,
    pub g0: C64,
}

impl RadialPair {
    pub fn new(kind: FamilyKind, params: RadialParams) -> Result<Self> {
        let (f0, g0) = pair_amplitudes(kind, &params)?;
        Ok(Self {
            params,
            f_family: family_params(&params, Channel::F, kind)?,
            g_family: family_params(&params, Channel::G, kind)?,
            f0,
            g0,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.f_family.kind
    }

    /// `(F, G)` at `z`.
    pub fn eval(&self, z: f64) -> Result<(C64, C64)> {
        Ok((self.f0 * self.f_family.eval(z)?, self.g0 * self.g_family.eval(z)?))
    }

    pub fn jets(&self, z: f64) -> Result<(Jet, Jet)> {
        Ok((self.f_family.jet(z)? * self.f0, self.g_family.jet(z)? * self.g0))
    }

    /// `(f, g)` of the reduced real-form system.
    pub fn fg(&self, z: f64) -> Result<(C64, C64)> {
        let (f, g) = self.eval(z)?;
        Ok(fg_from_FG(f, g, z))
    }

    /// The four radial functions `f1..f4` entering the spinor.
    pub fn f1234(&self, z: f64) -> Result<[C64; 4]> {
        let (f, g) = self.fg(z)?;
        Ok(f1234_from_fg(f, g, self.params.delta))
    }
}
