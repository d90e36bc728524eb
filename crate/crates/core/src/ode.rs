//! Adaptive Dormand-Prince 5(4) integration of the radial first-order
//! systems, used as an independent check of the closed forms.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Float;

use crate::jmin::{JminPair, JminPairing, KSign};
use crate::radial::{fg_from_FG, FamilyKind, RadialPair, RadialParams};
use crate::{Result, C64, I};

pub type State = [C64; 2];

/// Which first-order system to integrate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemSpec {
    /// `(f, g)` in `rho` (`r = sin rho`):
    /// `f' = -(nu/sin) f - (eps/cos + dM) g`, `g' = (nu/sin) g + (eps/cos - dM) f`.
    RhoForm(RadialParams),
    /// `(F, G)` in `z`, generic `j`.
    ZForm(RadialParams),
    /// `(F, G)` in `z`, `j = j_min`.
    JminZForm { eps: f64, mass: f64, sign_k: KSign },
    /// Flat `(h, g)` in `r`: `h' = -(eps + M) g`, `g' = (eps - M) h`.
    MinkowskiForm { eps: f64, mass: f64 },
}

impl SystemSpec {
    /// Right-hand side `y' = A(x) y`.
    pub fn rhs(&self, x: f64, y: &State) -> State {
        match *self {
            SystemSpec::RhoForm(p) => {
                let (s, c) = x.sin_cos();
                let dm = p.signed_mass();
                let nu_s = p.nu / s;
                [
                    -nu_s * y[0] - (p.eps / c + dm) * y[1],
                    nu_s * y[1] + (p.eps / c - dm) * y[0],
                ]
            }
            SystemSpec::ZForm(p) => {
                let (k1, k2) = p.couplings();
                let w = 2.0 * (x * (1.0 - x)).sqrt();
                let near = p.nu * ((1.0 - x) / x).sqrt();
                let far = I * p.eps * (x / (1.0 - x)).sqrt();
                [
                    -((near - far) * y[0] + k1 * y[1]) / w,
                    -((far - near) * y[1] + k2 * y[0]) / w,
                ]
            }
            SystemSpec::JminZForm { eps, mass, sign_k } => {
                let m = sign_k.sign() * mass;
                let w = (x * (1.0 - x)).sqrt();
                let phase = I * eps / (2.0 * (1.0 - x));
                let k1 = C64::new(m + eps, -0.5) / 2.0;
                let k2 = C64::new(m - eps, -0.5) / 2.0;
                [phase * y[0] - k1 * y[1] / w, -phase * y[1] - k2 * y[0] / w]
            }
            SystemSpec::MinkowskiForm { eps, mass } => [-(eps + mass) * y[1], (eps - mass) * y[0]],
        }
    }

    /// Open interval on which the coefficients are finite.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            SystemSpec::RhoForm(_) => (0.0, core::f64::consts::FRAC_PI_2),
            SystemSpec::ZForm(_) | SystemSpec::JminZForm { .. } => (0.0, 1.0),
            SystemSpec::MinkowskiForm { .. } => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }
}

/// Sampled solution. `est_error` is the largest accepted local error
/// estimate, in units of the requested tolerance.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Trajectory {
    pub grid: Vec<f64>,
    pub values: Vec<State>,
    pub est_error: f64,
    pub steps: usize,
    pub rejected: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// The interval touches a point where the coefficients blow up.
    OutsideDomain,
    /// Requested tolerance outside `[1e-14, 1e-3]`.
    Tolerance,
    /// Output points are not strictly monotone.
    Grid,
    /// Step size fell below the resolvable minimum.
    StepUnderflow,
    /// More than the step budget was needed.
    TooManySteps,
}

/// Failed integration, carrying everything computed before the failure.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationFailure {
    pub reason: FailureReason,
    pub at: f64,
    pub partial: Trajectory,
}

impl fmt::Display for IntegrationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "integration failed at x = {}: {:?}", self.at, self.reason)
    }
}

impl core::error::Error for IntegrationFailure {}

const MAX_STEPS: usize = 200_000;
const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;
// PI controller exponents for a fifth-order pair
const ALPHA: f64 = 0.7 / 5.0;
const BETA: f64 = 0.4 / 5.0;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth-order minus embedded fourth-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

fn lin(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    let mut out = *y;
    for &(c, k) in terms {
        out[0] += k[0] * (c * h);
        out[1] += k[1] * (c * h);
    }
    out
}

struct Step {
    y: State,
    err: f64,
    k_last: State,
}

fn dopri_step(sys: &SystemSpec, x: f64, y: &State, k1: &State, h: f64, tol: f64) -> Step {
    let k2 = sys.rhs(x + C2 * h, &lin(y, &[(A21, k1)], h));
    let k3 = sys.rhs(x + C3 * h, &lin(y, &[(A31, k1), (A32, &k2)], h));
    let k4 = sys.rhs(x + C4 * h, &lin(y, &[(A41, k1), (A42, &k2), (A43, &k3)], h));
    let k5 = sys.rhs(x + C5 * h, &lin(y, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)], h));
    let k6 = sys.rhs(x + h, &lin(y, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h));
    let y_new = lin(y, &[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)], h);
    let k7 = sys.rhs(x + h, &y_new);
    let zero = [C64::new(0.0, 0.0); 2];
    let e = lin(&zero, &[(E1, k1), (E3, &k3), (E4, &k4), (E5, &k5), (E6, &k6), (E7, &k7)], h);
    let mut err: f64 = 0.0;
    for i in 0..2 {
        // mixed absolute/relative scale, component-wise
        let sc = tol * (1e-3 + y[i].norm().max(y_new[i].norm()));
        err = err.max(e[i].norm() / sc);
    }
    Step { y: y_new, err, k_last: k7 }
}

/// Integrates from `points[0]` with value `initial`, reporting the solution
/// at every entry of `points` (strictly monotone, either direction).
pub fn integrate_at(sys: &SystemSpec, points: &[f64], initial: State, tol: f64) -> core::result::Result<Trajectory, IntegrationFailure> {
    let fail = |reason, at, partial| Err(IntegrationFailure { reason, at, partial });
    let mut traj = Trajectory::default();
    if !(1e-14..=1e-3).contains(&tol) {
        return fail(FailureReason::Tolerance, points.first().copied().unwrap_or(0.0), traj);
    }
    if points.len() < 2 {
        return fail(FailureReason::Grid, points.first().copied().unwrap_or(0.0), traj);
    }
    let dir = (points[1] - points[0]).signum();
    if points.windows(2).any(|w| (w[1] - w[0]) * dir <= 0.0) {
        return fail(FailureReason::Grid, points[0], traj);
    }
    let (lo, hi) = sys.domain();
    if points.iter().any(|&p| !(p > lo && p < hi)) {
        return fail(FailureReason::OutsideDomain, points[0], traj);
    }
    let mut x = points[0];
    let mut y = initial;
    traj.grid.push(x);
    traj.values.push(y);
    let span = (points[points.len() - 1] - x).abs();
    let mut h = dir * span * 1e-3;
    let mut k1 = sys.rhs(x, &y);
    let mut err_prev: f64 = 1e-4;
    for &target in &points[1..] {
        while (target - x) * dir > 0.0 {
            if traj.steps + traj.rejected >= MAX_STEPS {
                return fail(FailureReason::TooManySteps, x, traj);
            }
            let remaining = target - x;
            let last = h.abs() >= remaining.abs();
            let step = if last { remaining } else { h };
            if step.abs() < 1e-14 * (1.0 + x.abs()) && !last {
                return fail(FailureReason::StepUnderflow, x, traj);
            }
            let s = dopri_step(sys, x, &y, &k1, step, tol);
            if !s.err.is_finite() {
                traj.rejected += 1;
                h = step * MIN_FACTOR;
                continue;
            }
            if s.err <= 1.0 {
                x = if last { target } else { x + step };
                y = s.y;
                k1 = s.k_last;
                traj.steps += 1;
                traj.est_error = traj.est_error.max(s.err);
                let e = s.err.max(1e-10);
                let fac = SAFETY * e.powf(-ALPHA) * err_prev.powf(BETA);
                err_prev = e;
                h = step * fac.clamp(MIN_FACTOR, MAX_FACTOR);
                if last && h.abs() < step.abs() {
                    h = step;
                }
            } else {
                traj.rejected += 1;
                let fac = SAFETY * s.err.powf(-1.0 / 5.0);
                h = step * fac.clamp(MIN_FACTOR, 1.0);
            }
        }
        traj.grid.push(x);
        traj.values.push(y);
    }
    Ok(traj)
}

/// Integrates from `start` to `end`, reporting `count` equally spaced points.
pub fn integrate(
    sys: &SystemSpec,
    start: f64,
    end: f64,
    initial: State,
    tol: f64,
    count: usize,
) -> core::result::Result<Trajectory, IntegrationFailure> {
    let n = count.max(2);
    let pts: Vec<f64> = (0..n).map(|i| start + (end - start) * i as f64 / (n - 1) as f64).collect();
    integrate_at(sys, &pts, initial, tol)
}

/// Initial data at `z0` for the solution that is regular at the origin:
/// the closed-form regular pair (generic `j`, and the `F`-non-zero pairing
/// at `j_min`), `(1, 0)` for the flat system, and its `(f, g)` image for the
/// `rho` form (`z0 = sin^2 rho0`, `z0` is then the `rho` value).
pub fn seed_regular(sys: &SystemSpec, z0: f64) -> Result<State> {
    match *sys {
        SystemSpec::ZForm(p) => {
            let (f, g) = RadialPair::new(FamilyKind::Regular, p)?.eval(z0)?;
            Ok([f, g])
        }
        SystemSpec::RhoForm(p) => {
            let z = z0.sin().powi(2);
            let (f, g) = RadialPair::new(FamilyKind::Regular, p)?.eval(z)?;
            let (a, b) = fg_from_FG(f, g, z);
            Ok([a, b])
        }
        SystemSpec::JminZForm { eps, mass, sign_k } => {
            let (f, g) = JminPair::new(JminPairing::FNonZeroGZero, eps, mass, sign_k)?.eval(z0)?;
            Ok([f, g])
        }
        SystemSpec::MinkowskiForm { .. } => Ok([C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
    }
}


/// Comparison of an integrated trajectory against a closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub grid: Vec<f64>,
    /// `|y - exact| / max(|exact_1|, |exact_2|)` at every grid point.
    pub rel_error: Vec<f64>,
    pub max_rel_error: f64,
    pub steps: usize,
}

/// Seeds the integrator with `exact(points[0])` and compares against
/// `exact` at every point.
pub fn compare_with_closed_form(
    sys: &SystemSpec,
    points: &[f64],
    exact: impl Fn(f64) -> Result<State>,
    tol: f64,
) -> Result<core::result::Result<OracleReport, IntegrationFailure>> {
    let Some(&x0) = points.first() else {
        return Err(crate::Error::Domain { what: "empty oracle grid", value: 0.0 });
    };
    let traj = match integrate_at(sys, points, exact(x0)?, tol) {
        Ok(t) => t,
        Err(e) => return Ok(Err(e)),
    };
    let mut rel_error = Vec::with_capacity(points.len());
    for (x, y) in traj.grid.iter().zip(&traj.values) {
        let e = exact(*x)?;
        let scale = e[0].norm().max(e[1].norm());
        let diff = (y[0] - e[0]).norm().max((y[1] - e[1]).norm());
        rel_error.push(if scale == 0.0 { diff } else { diff / scale });
    }
    let max_rel_error = rel_error.iter().copied().fold(0.0, f64::max);
    Ok(Ok(OracleReport {
        grid: traj.grid,
        rel_error,
        max_rel_error,
        steps: traj.steps,
    }))
}
