//! Special functions on the physical domain `z in [0, 1)`.
//!
//! Everything here is a pure function of its inputs. Powers `z^s` and
//! `(1 - z)^s` always have a positive real base, so they are evaluated as
//! `exp(s ln x)` and carry no branch ambiguity.

mod gamma;
mod hyp;
mod kummer;

pub use gamma::{gamma, is_nonpositive_integer, ln_gamma, recip_gamma};
pub use hyp::{
    euler_transform, hyp2f1, hyp2f1_deriv, hyp2f1_deriv2, hyp2f1_series, HypParams,
    DIRECT_SERIES_LIMIT, SERIES_TERM_CAP,
};
pub use kummer::{
    kummer_connection, kummer_series_params, kummer_u, ConnectionCoeffs, ConnectionDirection, KummerIndex,
};

use crate::C64;
use num_traits::Float;

/// Tolerance used to declare `c`, `c - a - b` or a Gamma argument integral.
pub const DEGENERATE_TOL: f64 = 1e-8;

/// `x^s` for a real base `x >= 0` on the principal branch.
///
/// `0^s` is `1` for `s == 0`, `0` for `Re s > 0` and infinite otherwise.
pub fn real_pow(x: f64, s: C64) -> C64 {
    if x == 0.0 {
        if s == C64::new(0.0, 0.0) {
            return C64::new(1.0, 0.0);
        }
        if s.re > 0.0 {
            return C64::new(0.0, 0.0);
        }
        return C64::new(f64::INFINITY, 0.0);
    }
    (s * x.ln()).exp()
}

/// Nearest-integer test with tolerance, ignoring sign.
pub(crate) fn is_near_integer(z: C64, tol: f64) -> bool {
    z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol
}
