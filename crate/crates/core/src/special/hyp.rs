use super::gamma::{is_nonpositive_integer, ln_gamma};
use super::{is_near_integer, real_pow, DEGENERATE_TOL};
use crate::{Error, Result, C64};

/// Maximum number of series terms before giving up.
pub const SERIES_TERM_CAP: usize = 10_000;

/// Above this argument the series is replaced by the `1 - z` connection.
pub const DIRECT_SERIES_LIMIT: f64 = 0.9;

const TERM_REL_TOL: f64 = 1e-17;
const SMALL_TERMS_NEEDED: usize = 3;

/// Parameters `(a, b, c)` of a Gauss hypergeometric function.
///
/// `c` may not be `0, -1, -2, ...`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    a: C64,
    b: C64,
    c: C64,
}

impl HypParams {
    pub fn new(a: C64, b: C64, c: C64) -> Result<Self> {
        if is_nonpositive_integer(c, 1e-10) {
            return Err(Error::Degenerate {
                what: "hypergeometric c (nonpositive integer)",
                value: c,
            });
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    pub fn c(&self) -> C64 {
        self.c
    }

    /// `c - a - b`, the exponent difference at `z = 1`.
    pub fn excess(&self) -> C64 {
        self.c - self.a - self.b
    }

    pub(crate) fn shifted(&self, da: f64, db: f64, dc: f64) -> Result<Self> {
        Self::new(self.a + da, self.b + db, self.c + dc)
    }
}

/// `2F1(a, b; c; z)` for `z in [0, 1)`.
pub fn hyp2f1(p: HypParams, z: f64) -> Result<C64> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain {
            what: "hypergeometric argument",
            value: z,
        });
    }
    if z == 0.0 {
        return Ok(C64::new(1.0, 0.0));
    }
    if z > DIRECT_SERIES_LIMIT && !is_near_integer(p.excess(), DEGENERATE_TOL) {
        return near_one(p, z);
    }
    hyp2f1_series(p, z, SERIES_TERM_CAP)
}

/// Plain Gauss series with an explicit term cap.
///
/// Stops once three consecutive terms fall below `1e-17` of the running sum.
pub fn hyp2f1_series(p: HypParams, z: f64, cap: usize) -> Result<C64> {
    let mut sum = C64::new(1.0, 0.0);
    let mut term = C64::new(1.0, 0.0);
    let mut small = 0;
    for n in 0..cap {
        let nf = n as f64;
        term = term * (p.a + nf) * (p.b + nf) / ((p.c + nf) * (nf + 1.0)) * z;
        if term == C64::new(0.0, 0.0) {
            return Ok(sum);
        }
        sum += term;
        if term.norm() < TERM_REL_TOL * sum.norm() {
            small += 1;
            if small >= SMALL_TERMS_NEEDED {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        partial_sum: sum,
        terms: cap,
    })
}

// F(a,b;c;z) = G1 F(a,b;a+b-c+1;1-z) + G2 (1-z)^(c-a-b) F(c-a,c-b;c-a-b+1;1-z)
fn near_one(p: HypParams, z: f64) -> Result<C64> {
    let w = 1.0 - z;
    let s = p.excess();
    let first = gamma_quotient(&[p.c, s], &[p.c - p.a, p.c - p.b])?;
    let second = gamma_quotient(&[p.c, -s], &[p.a, p.b])?;
    let mut out = C64::new(0.0, 0.0);
    if first != C64::new(0.0, 0.0) {
        let q = HypParams::new(p.a, p.b, C64::new(1.0, 0.0) - s)?;
        out += first * hyp2f1_series(q, w, SERIES_TERM_CAP)?;
    }
    if second != C64::new(0.0, 0.0) {
        let q = HypParams::new(p.c - p.a, p.c - p.b, s + 1.0)?;
        out += second * real_pow(w, s) * hyp2f1_series(q, w, SERIES_TERM_CAP)?;
    }
    Ok(out)
}

/// `prod Gamma(num) / prod Gamma(den)`; zero if a denominator sits on a pole.
pub(crate) fn gamma_quotient(num: &[C64], den: &[C64]) -> Result<C64> {
    let mut acc = C64::new(0.0, 0.0);
    for &x in num {
        acc += ln_gamma(x)?;
    }
    for &x in den {
        match ln_gamma(x) {
            Ok(l) => acc -= l,
            Err(_) => return Ok(C64::new(0.0, 0.0)),
        }
    }
    Ok(acc.exp())
}

/// `d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z)`.
pub fn hyp2f1_deriv(p: HypParams, z: f64) -> Result<C64> {
    let ab = p.a * p.b;
    if ab == C64::new(0.0, 0.0) {
        return Ok(ab);
    }
    Ok(ab / p.c * hyp2f1(p.shifted(1.0, 1.0, 1.0)?, z)?)
}

/// Second derivative, through the same contiguous relation twice.
pub fn hyp2f1_deriv2(p: HypParams, z: f64) -> Result<C64> {
    let ab = p.a * p.b;
    if ab == C64::new(0.0, 0.0) {
        return Ok(ab);
    }
    Ok(ab / p.c * hyp2f1_deriv(p.shifted(1.0, 1.0, 1.0)?, z)?)
}

/// Euler's transformation `(a, b, c) -> (c - a, c - b, c)`:
/// `F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z)`.
pub fn euler_transform(p: HypParams) -> HypParams {
    HypParams {
        a: p.c - p.a,
        b: p.c - p.b,
        c: p.c,
    }
}
