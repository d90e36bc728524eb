//! Horizon behaviour and the change of basis between origin-adapted
//! (regular/singular) and horizon-adapted (in/out) radial solutions.
//!
//! Near `z = 1` the solutions behave as plane waves in the tortoise
//! coordinate `x = -ln(1 - z)/2`, since `(1 - z)^(-+ i eps/2) = e^(+- i eps x)`.
//! In/out names are shared by both channels: `F_out` and `G_out` carry the same
//! horizon phase.

use num_traits::Float;

use crate::radial::{family_params, Channel, FamilyKind, RadialPair, RadialParams, SolutionFamily};
use crate::special::{kummer_connection, ConnectionDirection};
use crate::{Error, Result, C64};

/// `x = -ln(1 - z)/2`.
pub fn tortoise(z: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain { what: "z", value: z });
    }
    Ok(-0.5 * (-z).ln_1p())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveDirection {
    In,
    Out,
}

impl WaveDirection {
    pub fn kind(self) -> FamilyKind {
        match self {
            Self::In => FamilyKind::In,
            Self::Out => FamilyKind::Out,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OriginKind {
    Regular,
    Singular,
}

impl OriginKind {
    pub fn kind(self) -> FamilyKind {
        match self {
            Self::Regular => FamilyKind::Regular,
            Self::Singular => FamilyKind::Singular,
        }
    }
}

/// In or out family of one channel. For the `j_min` sector pass
/// `jmin::jmin_radial_params`, i.e. `nu = 0`.
pub fn wave_family(channel: Channel, direction: WaveDirection, p: &RadialParams) -> Result<SolutionFamily> {
    family_params(p, channel, direction.kind())
}

/// `(F_out, G_out)` or `(F_in, G_in)` with amplitudes solving the first-order system.
pub fn wave_pair(direction: WaveDirection, p: &RadialParams) -> Result<RadialPair> {
    RadialPair::new(direction.kind(), *p)
}

/// `source = coeff_out * out + coeff_in * in` in one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizonDecomposition {
    pub source: OriginKind,
    pub channel: Channel,
    pub coeff_out: C64,
    pub coeff_in: C64,
}

/// `target = coeff_regular * regular + coeff_singular * singular` in one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginDecomposition {
    pub target: WaveDirection,
    pub channel: Channel,
    pub coeff_regular: C64,
    pub coeff_singular: C64,
}

/// Gamma-ratio coefficients of a regular or singular family over the in/out pair.
///
/// For `F` the `z = 1` partner with the `(1-z)^(c-a-b)` factor is the in
/// wave; for `G` it is the out wave.
pub fn decompose(channel: Channel, kind: OriginKind, p: &RadialParams) -> Result<HorizonDecomposition> {
    let (_, _, base) = p.base(channel)?;
    let dir = match kind {
        OriginKind::Regular => ConnectionDirection::U1ToHorizon,
        OriginKind::Singular => ConnectionDirection::U5ToHorizon,
    };
    let k = kummer_connection(base, dir)?;
    let (coeff_out, coeff_in) = match channel {
        Channel::F => (k.c_first, k.c_second),
        Channel::G => (k.c_second, k.c_first),
    };
    Ok(HorizonDecomposition {
        source: kind,
        channel,
        coeff_out,
        coeff_in,
    })
}

/// Inverse basis change: an in or out wave over regular and singular families.
pub fn compose(channel: Channel, direction: WaveDirection, p: &RadialParams) -> Result<OriginDecomposition> {
    let (_, _, base) = p.base(channel)?;
    let u2_side = matches!(
        (channel, direction),
        (Channel::F, WaveDirection::Out) | (Channel::G, WaveDirection::In)
    );
    let dir = if u2_side {
        ConnectionDirection::U2ToOrigin
    } else {
        ConnectionDirection::U6ToOrigin
    };
    let k = kummer_connection(base, dir)?;
    Ok(OriginDecomposition {
        target: direction,
        channel,
        coeff_regular: k.c_first,
        coeff_singular: k.c_second,
    })
}

/// `|source(z) - coeff_out out(z) - coeff_in in(z)|` relative to `|source(z)|`.
pub fn decomposition_residual(d: &HorizonDecomposition, p: &RadialParams, z: f64) -> Result<f64> {
    let src = family_params(p, d.channel, d.source.kind())?.eval(z)?;
    let out = wave_family(d.channel, WaveDirection::Out, p)?.eval(z)?;
    let inn = wave_family(d.channel, WaveDirection::In, p)?.eval(z)?;
    Ok((src - d.coeff_out * out - d.coeff_in * inn).norm() / src.norm().max(f64::MIN_POSITIVE))
}

/// Same check for a composition.
pub fn composition_residual(d: &OriginDecomposition, p: &RadialParams, z: f64) -> Result<f64> {
    let tgt = wave_family(d.channel, d.target, p)?.eval(z)?;
    let reg = family_params(p, d.channel, FamilyKind::Regular)?.eval(z)?;
    let sing = family_params(p, d.channel, FamilyKind::Singular)?.eval(z)?;
    Ok((tgt - d.coeff_regular * reg - d.coeff_singular * sing).norm() / tgt.norm().max(f64::MIN_POSITIVE))
}

/// The 2x2 matrix taking (regular, singular) coefficients to (out, in)
/// coefficients in one channel: columns are `decompose(Regular)`, `decompose(Singular)`.
pub fn horizon_matrix(channel: Channel, p: &RadialParams) -> Result<[[C64; 2]; 2]> {
    let r = decompose(channel, OriginKind::Regular, p)?;
    let s = decompose(channel, OriginKind::Singular, p)?;
    Ok([[r.coeff_out, s.coeff_out], [r.coeff_in, s.coeff_in]])
}

/// The 2x2 matrix taking (out, in) coefficients to (regular, singular) coefficients.
pub fn origin_matrix(channel: Channel, p: &RadialParams) -> Result<[[C64; 2]; 2]> {
    let o = compose(channel, WaveDirection::Out, p)?;
    let i = compose(channel, WaveDirection::In, p)?;
    Ok([[o.coeff_regular, i.coeff_regular], [o.coeff_singular, i.coeff_singular]])
}

/// Least-squares slope of `ln |X(z)|` against `ln(1 - z)` on the given points.
pub fn fitted_horizon_exponent(fam: &SolutionFamily, zs: &[f64]) -> Result<f64> {
    let mut pts = alloc::vec::Vec::with_capacity(zs.len());
    for &z in zs {
        pts.push(((1.0 - z).ln(), fam.eval(z)?.norm().ln()));
    }
    Ok(crate::fit::slope(&pts))
}
