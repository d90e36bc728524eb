//! Four-component wavefunctions assembled from radial pairs and Wigner
//! functions, with finite-difference checks of the Dirac and `K` operators.

use num_traits::Float;

use crate::angular::{angular_spinor, apply_sigma, fd5, QuantumNumbers};
use crate::gamma_matrices::{add, gamma0, gamma3, norm, scale, sub, Spinor};
use crate::jmin::{JminPair, KSign};
use crate::radial::{CoordinateChart, RadialPair};
use crate::{Error, Result, C64, I};

/// Radial samples are clamped to `[R_CLAMP, 1 - R_CLAMP]`.
pub const R_CLAMP: f64 = 1e-6;

const R_STEP: f64 = 1e-4;
const T_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Self {
        Self { t, r, theta, phi }
    }
}

/// One evaluation of the spinor. `r` is the radius actually used; `clamped`
/// is set when the requested radius had to be moved into range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorSample {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub components: Spinor,
    pub clamped: bool,
}

/// Anything that yields `f1..f4` at a given `z`.
pub trait RadialSource {
    fn f1234_at(&self, z: f64) -> Result<[C64; 4]>;
}

impl RadialSource for RadialPair {
    fn f1234_at(&self, z: f64) -> Result<[C64; 4]> {
        self.f1234(z)
    }
}

impl RadialSource for JminPair {
    fn f1234_at(&self, z: f64) -> Result<[C64; 4]> {
        self.f1234(z)
    }
}

fn clamp_r(r: f64) -> Result<(f64, bool)> {
    if !r.is_finite() {
        return Err(Error::Domain { what: "r", value: r });
    }
    let c = r.clamp(R_CLAMP, 1.0 - R_CLAMP);
    Ok((c, c != r))
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < core::f64::consts::PI {
        Ok(())
    } else {
        Err(Error::Domain { what: "theta (open interval (0, pi))", value: theta })
    }
}

/// `r^{-1} (1 - r^2)^{-1/4}`.
pub fn full_prefactor(r: f64) -> f64 {
    1.0 / (r * (1.0 - r * r).powf(0.25))
}

/// Reduced spinor `e^{-i eps t} (f1 D_{k-1/2}, f2 D_{k+1/2}, f3 D_{k-1/2}, f4 D_{k+1/2})`
/// with `f` already evaluated.
pub fn reduced_spinor(qn: &QuantumNumbers, f: &[C64; 4], t: f64, theta: f64, phi: f64) -> Spinor {
    let phase = C64::from_polar(1.0, -qn.epsilon * t);
    scale(phase, &angular_spinor(qn.j, qn.k, qn.m, f, theta, phi))
}

fn assemble_any<R: RadialSource>(qn: &QuantumNumbers, radial: &R, point: SpacetimePoint, full: bool) -> Result<SpinorSample> {
    check_theta(point.theta)?;
    let (r, clamped) = clamp_r(point.r)?;
    let chart = CoordinateChart::from_r(r)?;
    let f = radial.f1234_at(chart.z)?;
    let mut components = reduced_spinor(qn, &f, point.t, point.theta, point.phi);
    if full {
        components = scale(C64::new(full_prefactor(r), 0.0), &components);
    }
    Ok(SpinorSample {
        t: point.t,
        r,
        theta: point.theta,
        phi: point.phi,
        components,
        clamped,
    })
}

fn check_params(qn: &QuantumNumbers, eps: f64, mass: f64) -> Result<()> {
    if qn.epsilon != eps {
        return Err(Error::Domain { what: "radial pair energy differs from quantum numbers", value: eps });
    }
    if qn.mass != mass {
        return Err(Error::Domain { what: "radial pair mass differs from quantum numbers", value: mass });
    }
    Ok(())
}

/// Full wavefunction of a generic (`j > j_min`) mode.
///
/// With `full_prefactor` the result is `Psi = r^{-1} Phi^{-1/4} psi`,
/// otherwise the reduced `psi`.
pub fn assemble(qn: &QuantumNumbers, pair: &RadialPair, point: SpacetimePoint, full_prefactor: bool) -> Result<SpinorSample> {
    check_params(qn, pair.params.eps, pair.params.mass)?;
    if qn.is_jmin() {
        return Err(Error::Domain { what: "j = j_min needs assemble_jmin", value: qn.j.value() });
    }
    if pair.params.delta != qn.delta {
        return Err(Error::Domain { what: "radial pair delta differs from quantum numbers", value: pair.params.delta.sign() });
    }
    if (pair.params.nu - qn.nu()).abs() > 1e-12 {
        return Err(Error::Domain { what: "radial pair nu differs from quantum numbers", value: pair.params.nu });
    }
    assemble_any(qn, pair, point, full_prefactor)
}

/// Full wavefunction of a `j = j_min` mode. For `k > 0` the second and
/// fourth components vanish identically, for `k < 0` the first and third.
pub fn assemble_jmin(qn: &QuantumNumbers, pair: &JminPair, point: SpacetimePoint, full_prefactor: bool) -> Result<SpinorSample> {
    check_params(qn, pair.eps, pair.mass)?;
    if !qn.is_jmin() {
        return Err(Error::Domain { what: "assemble_jmin needs j = j_min", value: qn.j.value() });
    }
    if KSign::of(qn.k) != Some(pair.sign_k) {
        return Err(Error::Domain { what: "radial pair sign of k differs from quantum numbers", value: qn.k.value() });
    }
    assemble_any(qn, pair, point, full_prefactor)
}

/// Relative residual of
/// `(i g0 Phi^{-1/2} d_t + i Phi^{1/2} g3 d_r + Sigma / r - M) psi`
/// on the reduced spinor, every derivative taken by 5-point differences.
/// The result is `|sum| / sum |term|`.
pub fn dirac_residual<R: RadialSource>(qn: &QuantumNumbers, radial: &R, point: SpacetimePoint) -> Result<f64> {
    check_theta(point.theta)?;
    let r = point.r;
    if !(r - 2.0 * R_STEP > 0.0 && r + 2.0 * R_STEP < 1.0) {
        return Err(Error::Domain { what: "r (too close to 0 or 1 for differencing)", value: r });
    }
    let SpacetimePoint { t, theta, phi, .. } = point;
    let f_at = |r: f64| radial.f1234_at(r * r);
    let f0 = f_at(r)?;
    let (m2, m1, p1, p2) = (f_at(r - 2.0 * R_STEP)?, f_at(r - R_STEP)?, f_at(r + R_STEP)?, f_at(r + 2.0 * R_STEP)?);
    let mut df = [C64::new(0.0, 0.0); 4];
    for i in 0..4 {
        df[i] = (8.0 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / (12.0 * R_STEP);
    }
    let psi = reduced_spinor(qn, &f0, t, theta, phi);
    let d_r = reduced_spinor(qn, &df, t, theta, phi);
    let d_t = fd5(|s| reduced_spinor(qn, &f0, s, theta, phi), t, T_STEP);
    let sigma = apply_sigma(qn.k, |th, ph| reduced_spinor(qn, &f0, t, th, ph), theta, phi)?;
    let big_phi = 1.0 - r * r;
    let terms = [
        scale(I / big_phi.sqrt(), &gamma0(&d_t)),
        scale(I * big_phi.sqrt(), &gamma3(&d_r)),
        scale(C64::new(1.0 / r, 0.0), &sigma),
        scale(C64::new(-qn.mass, 0.0), &psi),
    ];
    let total = terms.iter().fold([C64::new(0.0, 0.0); 4], |acc, x| add(&acc, x));
    let size: f64 = terms.iter().map(norm).sum();
    Ok(if size == 0.0 { 0.0 } else { norm(&total) / size })
}

/// `K psi` with `K = -i g0 g3 Sigma^k`, applied by finite differences to the
/// angular spinor built from `f`.
pub fn apply_k(qn: &QuantumNumbers, f: &[C64; 4], theta: f64, phi: f64) -> Result<Spinor> {
    let sigma = apply_sigma(qn.k, |th, ph| angular_spinor(qn.j, qn.k, qn.m, f, th, ph), theta, phi)?;
    Ok(scale(-I, &gamma0(&gamma3(&sigma))))
}

/// Eigenvalue of `K` read off numerically: the Rayleigh quotient
/// `<psi, K psi> / <psi, psi>` and the relative defect `|K psi - lambda psi| / |psi|`.
pub fn k_eigenvalue(qn: &QuantumNumbers, f: &[C64; 4], theta: f64, phi: f64) -> Result<(C64, f64)> {
    let psi = angular_spinor(qn.j, qn.k, qn.m, f, theta, phi);
    let kpsi = apply_k(qn, f, theta, phi)?;
    let nn = norm(&psi);
    if nn == 0.0 {
        return Err(Error::Degenerate { what: "spinor vanishes at the probe point", value: C64::new(0.0, 0.0) });
    }
    let dot: C64 = psi.iter().zip(&kpsi).map(|(a, b)| a.conj() * b).sum();
    let lambda = dot / (nn * nn);
    let defect = norm(&sub(&kpsi, &scale(lambda, &psi))) / nn;
    Ok((lambda, defect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::{Delta, HalfInt};
    use crate::jmin::JminPairing;
    use crate::radial::{FamilyKind, RadialParams};

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn mode(k: i32, j: i32, m: i32, delta: Delta) -> (QuantumNumbers, RadialPair) {
        let qn = QuantumNumbers::new(1.3, 0.7, h(k), h(j), h(m), delta).unwrap();
        let p = RadialParams::new(qn.epsilon, qn.mass, qn.nu(), delta).unwrap();
        (qn, RadialPair::new(FamilyKind::Regular, p).unwrap())
    }

    #[test]
    fn delta_structure() {
        for delta in [Delta::Plus, Delta::Minus] {
            let (qn, pair) = mode(1, 4, 2, delta);
            let s = assemble(&qn, &pair, SpacetimePoint::new(0.2, 0.5, 1.1, 0.3), false).unwrap();
            let f = pair.f1234(0.25).unwrap();
            let dm = angular_spinor(qn.j, qn.k, qn.m, &[C64::new(1.0, 0.0); 4], 1.1, 0.3);
            // component ratios follow f4 = delta f1, f3 = delta f2
            let c = s.components;
            assert!((c[3] / dm[3] - delta.sign() * c[0] / dm[0]).norm() < 1e-12 * f[0].norm().max(1.0));
            assert!((c[2] / dm[2] - delta.sign() * c[1] / dm[1]).norm() < 1e-12 * f[1].norm().max(1.0));
        }
    }

    #[test]
    fn time_dependence_is_a_phase() {
        let (qn, pair) = mode(2, 3, -1, Delta::Plus);
        let a = assemble(&qn, &pair, SpacetimePoint::new(0.0, 0.4, 0.9, 0.1), true).unwrap();
        let b = assemble(&qn, &pair, SpacetimePoint::new(2.5, 0.4, 0.9, 0.1), true).unwrap();
        let ph = C64::from_polar(1.0, -qn.epsilon * 2.5);
        for i in 0..4 {
            assert!((b.components[i] - ph * a.components[i]).norm() < 1e-14);
        }
    }

    #[test]
    fn prefactor_is_common_scalar() {
        let (qn, pair) = mode(1, 2, 0, Delta::Minus);
        let pt = SpacetimePoint::new(0.3, 0.6, 0.8, 0.0);
        let a = assemble(&qn, &pair, pt, false).unwrap();
        let b = assemble(&qn, &pair, pt, true).unwrap();
        for i in 0..4 {
            assert!((b.components[i] - a.components[i] * full_prefactor(0.6)).norm() < 1e-14);
        }
    }

    #[test]
    fn dirac_operator_annihilates_modes() {
        for delta in [Delta::Plus, Delta::Minus] {
            for kind in FamilyKind::ALL {
                let qn = QuantumNumbers::new(1.3, 0.7, h(1), h(4), h(2), delta).unwrap();
                let p = RadialParams::new(qn.epsilon, qn.mass, qn.nu(), delta).unwrap();
                let pair = RadialPair::new(kind, p).unwrap();
                let res = dirac_residual(&qn, &pair, SpacetimePoint::new(0.4, 0.55, 1.2, 0.7)).unwrap();
                assert!(res < 1e-5, "{kind:?} {delta:?}: {res}");
            }
        }
    }

    #[test]
    fn jmin_components_and_residual() {
        let qn = QuantumNumbers::new(1.0, 1.0, h(2), h(1), h(1), Delta::Plus).unwrap();
        let pair = JminPair::new(JminPairing::FNonZeroGZero, 1.0, 1.0, KSign::Positive).unwrap();
        let s = assemble_jmin(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 1.0, 0.2), false).unwrap();
        assert_eq!(s.components[1], C64::new(0.0, 0.0));
        assert_eq!(s.components[3], C64::new(0.0, 0.0));
        assert!(dirac_residual(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 1.0, 0.2)).unwrap() < 1e-5);

        let qn = QuantumNumbers::new(1.0, 1.0, h(-1), h(0), h(0), Delta::Minus).unwrap();
        let pair = JminPair::new(JminPairing::GNonZeroFZero, 1.0, 1.0, KSign::Negative).unwrap();
        let a = assemble_jmin(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 0.4, 0.2), false).unwrap();
        let b = assemble_jmin(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 2.4, 1.9), false).unwrap();
        assert_eq!(a.components, b.components);
        assert_eq!(a.components[0], C64::new(0.0, 0.0));
        assert!(dirac_residual(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 1.0, 0.2)).unwrap() < 1e-5);
    }

    #[test]
    fn k_eigenvalues() {
        for delta in [Delta::Plus, Delta::Minus] {
            let (qn, pair) = mode(-1, 6, 2, delta);
            let (l, defect) = k_eigenvalue(&qn, &pair.f1234(0.3).unwrap(), 1.0, 0.5).unwrap();
            assert!((l - qn.lambda()).norm() < 1e-5 && defect < 1e-5, "{l} {defect}");
        }
        let qn = QuantumNumbers::new(1.0, 1.0, h(3), h(2), h(-2), Delta::Plus).unwrap();
        let pair = JminPair::new(JminPairing::FNonZeroGZero, 1.0, 1.0, KSign::Positive).unwrap();
        let (l, _) = k_eigenvalue(&qn, &pair.f1234(0.3).unwrap(), 0.8, 0.1).unwrap();
        assert!(l.norm() < 1e-5);
    }

    #[test]
    fn clamping_and_domain() {
        let (qn, pair) = mode(1, 2, 0, Delta::Plus);
        let s = assemble(&qn, &pair, SpacetimePoint::new(0.0, 1.0, 1.0, 0.0), true).unwrap();
        assert!(s.clamped && s.r == 1.0 - R_CLAMP);
        assert!(s.components.iter().all(|c| c.re.is_finite() && c.im.is_finite()));
        assert!(assemble(&qn, &pair, SpacetimePoint::new(0.0, 0.5, 0.0, 0.0), true).is_err());
        let jm = QuantumNumbers::new(1.3, 0.7, h(1), h(0), h(0), Delta::Plus).unwrap();
        assert!(assemble(&jm, &pair, SpacetimePoint::new(0.0, 0.5, 1.0, 0.0), true).is_err());
    }
}
