use num_traits::Float;

use super::{Channel, RadialPair, RadialParams, SolutionFamily};
use crate::{Result, C64, I};

/// The four terms of each first-order equation, in the order
/// `2 sqrt(z(1-z)) X'`, `+- nu sqrt((1-z)/z) X`, `-+ i eps sqrt(z/(1-z)) X`, `k Y`.
pub fn first_order_terms(pair: &RadialPair, z: f64) -> Result<[[C64; 4]; 2]> {
    let p = &pair.params;
    let (jf, jg) = pair.jets(z)?;
    let (k1, k2) = p.couplings();
    let w = 2.0 * (z * (1.0 - z)).sqrt();
    let near = p.nu * ((1.0 - z) / z).sqrt();
    let far = I * p.eps * (z / (1.0 - z)).sqrt();
    Ok([
        [w * jf.d1, near * jf.value, -far * jf.value, k1 * jg.value],
        [w * jg.d1, -near * jg.value, far * jg.value, k2 * jf.value],
    ])
}

/// Left-hand sides of the two first-order equations.
pub fn first_order_residual(pair: &RadialPair, z: f64) -> Result<[C64; 2]> {
    let t = first_order_terms(pair, z)?;
    Ok([t[0].iter().sum(), t[1].iter().sum()])
}

/// Residuals divided by the sum of the moduli of the terms in each equation.
pub fn relative_first_order_residual(pair: &RadialPair, z: f64) -> Result<[f64; 2]> {
    let t = first_order_terms(pair, z)?;
    let rel = |row: &[C64; 4]| {
        let scale: f64 = row.iter().map(|x| x.norm()).sum();
        let sum: C64 = row.iter().sum();
        if scale == 0.0 {
            0.0
        } else {
            sum.norm() / scale
        }
    };
    Ok([rel(&t[0]), rel(&t[1])])
}

/// `(z(1-z), 1/2 - z, V(z))` of `z(1-z) X'' + (1/2 - z) X' + V X = 0`:
///
/// ```text
/// F: V = -(M - i/2)^2/4 + eps(eps - i)/(4(1-z)) - nu(nu + 1)/(4z)
/// G: V = -(M - i/2)^2/4 + eps(eps + i)/(4(1-z)) - nu(nu - 1)/(4z)
/// ```
pub fn second_order_coefficients(channel: Channel, p: &RadialParams, z: f64) -> [C64; 3] {
    let m = C64::new(p.signed_mass(), -0.5);
    let (eps, nu) = (C64::new(p.eps, 0.0), p.nu);
    let (e_term, n_term) = match channel {
        Channel::F => (eps * (eps - I), nu * (nu + 1.0)),
        Channel::G => (eps * (eps + I), nu * (nu - 1.0)),
    };
    let v = -m * m / 4.0 + e_term / (4.0 * (1.0 - z)) - n_term / (4.0 * z);
    [C64::new(z * (1.0 - z), 0.0), C64::new(0.5 - z, 0.0), v]
}

fn second_order_terms(fam: &SolutionFamily, p: &RadialParams, z: f64) -> Result<[C64; 3]> {
    let j = fam.jet(z)?;
    let k = second_order_coefficients(fam.channel, p, z);
    Ok([k[0] * j.d2, k[1] * j.d1, k[2] * j.value])
}

/// Left-hand side of the second-order equation of the family's channel.
pub fn second_order_residual(fam: &SolutionFamily, p: &RadialParams, z: f64) -> Result<C64> {
    Ok(second_order_terms(fam, p, z)?.iter().sum())
}

/// Second-order residual over the sum of the moduli of its three terms.
pub fn relative_second_order_residual(fam: &SolutionFamily, p: &RadialParams, z: f64) -> Result<f64> {
    let t = second_order_terms(fam, p, z)?;
    let scale: f64 = t.iter().map(|x| x.norm()).sum();
    let sum: C64 = t.iter().sum();
    Ok(if scale == 0.0 { 0.0 } else { sum.norm() / scale })
}

/// `u v' - u' v` of two solutions.
pub fn wronskian(u: &SolutionFamily, v: &SolutionFamily, z: f64) -> Result<C64> {
    let (ju, jv) = (u.jet(z)?, v.jet(z)?);
    Ok(ju.value * jv.d1 - ju.d1 * jv.value)
}
