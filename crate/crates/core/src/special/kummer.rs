use super::gamma::{is_nonpositive_integer, ln_gamma};
use super::hyp::{hyp2f1, HypParams};
use super::{is_near_integer, real_pow, DEGENERATE_TOL};
use crate::{Error, Result, C64};

/// The four Kummer solutions of the hypergeometric equation used here.
///
/// `U1` and `U5` are the pair adapted to `z = 0`, `U2` and `U6` the pair
/// adapted to `z = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KummerIndex {
    U1,
    U2,
    U5,
    U6,
}

/// Which basis change to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionDirection {
    /// `U1 = c_first U2 + c_second U6`
    U1ToHorizon,
    /// `U5 = c_first U2 + c_second U6`
    U5ToHorizon,
    /// `U2 = c_first U1 + c_second U5`
    U2ToOrigin,
    /// `U6 = c_first U1 + c_second U5`
    U6ToOrigin,
}

impl ConnectionDirection {
    pub fn source(self) -> KummerIndex {
        match self {
            Self::U1ToHorizon => KummerIndex::U1,
            Self::U5ToHorizon => KummerIndex::U5,
            Self::U2ToOrigin => KummerIndex::U2,
            Self::U6ToOrigin => KummerIndex::U6,
        }
    }

    /// The two target solutions, in the order of the coefficients.
    pub fn targets(self) -> (KummerIndex, KummerIndex) {
        match self {
            Self::U1ToHorizon | Self::U5ToHorizon => (KummerIndex::U2, KummerIndex::U6),
            Self::U2ToOrigin | Self::U6ToOrigin => (KummerIndex::U1, KummerIndex::U5),
        }
    }
}

/// Coefficients of a two-term Kummer relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionCoeffs {
    pub c_first: C64,
    pub c_second: C64,
}

/// Hypergeometric parameters of the series inside `U_index`.
pub fn kummer_series_params(index: KummerIndex, p: HypParams) -> Result<HypParams> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let one = C64::new(1.0, 0.0);
    match index {
        KummerIndex::U1 => Ok(p),
        KummerIndex::U5 => {
            if is_near_integer(c, DEGENERATE_TOL) {
                return Err(Error::Degenerate {
                    what: "c (integer, U5 coincides with U1)",
                    value: c,
                });
            }
            HypParams::new(a + one - c, b + one - c, 2.0 * one - c)
        }
        KummerIndex::U2 => HypParams::new(a, b, a + b - c + one),
        KummerIndex::U6 => {
            let s = p.excess();
            if is_near_integer(s, DEGENERATE_TOL) {
                return Err(Error::Degenerate {
                    what: "c - a - b (integer, U6 coincides with U2)",
                    value: s,
                });
            }
            HypParams::new(c - a, c - b, s + one)
        }
    }
}

/// Evaluates `U_index(a, b, c; z)` for `z` in `(0, 1)` (`U1` also at `0`).
pub fn kummer_u(index: KummerIndex, p: HypParams, z: f64) -> Result<C64> {
    let lower_ok = match index {
        KummerIndex::U1 => z >= 0.0,
        _ => z > 0.0,
    };
    if !lower_ok || z >= 1.0 || z.is_nan() {
        return Err(Error::Domain {
            what: "Kummer solution argument",
            value: z,
        });
    }
    let q = kummer_series_params(index, p)?;
    let one = C64::new(1.0, 0.0);
    match index {
        KummerIndex::U1 => hyp2f1(q, z),
        KummerIndex::U5 => Ok(real_pow(z, one - p.c()) * hyp2f1(q, z)?),
        KummerIndex::U2 => hyp2f1(q, 1.0 - z),
        KummerIndex::U6 => Ok(real_pow(1.0 - z, p.excess()) * hyp2f1(q, 1.0 - z)?),
    }
}

/// Gamma-ratio coefficients of the Kummer relation in `direction`.
///
/// A numerator argument on a pole is an error naming that argument; a
/// denominator argument on a pole makes the coefficient exactly zero.
pub fn kummer_connection(p: HypParams, direction: ConnectionDirection) -> Result<ConnectionCoeffs> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let one = C64::new(1.0, 0.0);
    let s = c - a - b;
    let (first, second) = match direction {
        ConnectionDirection::U1ToHorizon => (
            ratio(&[("c", c), ("c-a-b", s)], &[c - a, c - b])?,
            ratio(&[("c", c), ("a+b-c", -s)], &[a, b])?,
        ),
        ConnectionDirection::U5ToHorizon => (
            ratio(&[("2-c", 2.0 * one - c), ("c-a-b", s)], &[one - a, one - b])?,
            ratio(&[("2-c", 2.0 * one - c), ("a+b-c", -s)], &[a + one - c, b + one - c])?,
        ),
        ConnectionDirection::U2ToOrigin => (
            ratio(&[("a+b+1-c", one - s), ("1-c", one - c)], &[a + one - c, b + one - c])?,
            ratio(&[("a+b+1-c", one - s), ("c-1", c - one)], &[a, b])?,
        ),
        ConnectionDirection::U6ToOrigin => (
            ratio(&[("c+1-a-b", one + s), ("1-c", one - c)], &[one - a, one - b])?,
            ratio(&[("c+1-a-b", one + s), ("c-1", c - one)], &[c - a, c - b])?,
        ),
    };
    Ok(ConnectionCoeffs {
        c_first: first,
        c_second: second,
    })
}

fn ratio(num: &[(&'static str, C64)], den: &[C64]) -> Result<C64> {
    let mut acc = C64::new(0.0, 0.0);
    for &(name, x) in num {
        if is_nonpositive_integer(x, DEGENERATE_TOL) {
            return Err(Error::Pole {
                argument: name,
                value: x,
            });
        }
        acc += ln_gamma(x)?;
    }
    for &x in den {
        if is_nonpositive_integer(x, DEGENERATE_TOL) {
            return Ok(C64::new(0.0, 0.0));
        }
        acc -= ln_gamma(x)?;
    }
    Ok(acc.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> HypParams {
        HypParams::new(C64::new(a.0, a.1), C64::new(b.0, b.1), C64::new(c.0, c.1)).unwrap()
    }

    fn residual(p: HypParams, dir: ConnectionDirection, z: f64) -> f64 {
        let k = kummer_connection(p, dir).unwrap();
        let (t1, t2) = dir.targets();
        let lhs = kummer_u(dir.source(), p, z).unwrap();
        let rhs = k.c_first * kummer_u(t1, p, z).unwrap() + k.c_second * kummer_u(t2, p, z).unwrap();
        (lhs - rhs).norm() / lhs.norm().max(1.0)
    }

    #[test]
    fn boundary_values() {
        let p = hp((0.3, 1.2), (-0.7, 0.4), (1.6, -0.3));
        assert!((kummer_u(KummerIndex::U1, p, 1e-12).unwrap() - 1.0).norm() < 1e-10);
        assert!((kummer_u(KummerIndex::U2, p, 1.0 - 1e-12).unwrap() - 1.0).norm() < 1e-10);
    }

    #[test]
    fn u6_geometric() {
        let p = hp((1.0, 0.0), (1.0, 0.0), (2.0, 0.0));
        // c - a - b = 0 is integral, so U6 is rejected for this triple
        assert!(kummer_u(KummerIndex::U6, p, 0.25).is_err());
        // shift c slightly off the integer and compare with the limit value 4
        let q = hp((1.0, 0.0), (1.0, 0.0), (2.0 + 1e-6, 0.0));
        let v = kummer_u(KummerIndex::U6, q, 0.25).unwrap();
        assert!((v.re - 4.0).abs() < 1e-4);
    }

    #[test]
    fn all_relations_hold() {
        let p = hp((0.6, 0.9), (-0.2, -1.3), (1.35, 0.2));
        for dir in [
            ConnectionDirection::U1ToHorizon,
            ConnectionDirection::U5ToHorizon,
            ConnectionDirection::U2ToOrigin,
            ConnectionDirection::U6ToOrigin,
        ] {
            for i in 1..=9 {
                let z = i as f64 / 10.0;
                let r = residual(p, dir, z);
                assert!(r < 1e-10, "{dir:?} z={z} residual {r}");
            }
        }
    }

    #[test]
    fn zero_b_is_constant() {
        let p = hp((0.7, 0.5), (0.0, 0.0), (1.4, 0.3));
        for i in 1..=9 {
            let z = i as f64 / 10.0;
            assert!((kummer_u(KummerIndex::U1, p, z).unwrap() - 1.0).norm() < 1e-14);
            assert!(residual(p, ConnectionDirection::U1ToHorizon, z) < 1e-10);
        }
        // 1/Gamma(b) = 0 kills the U6 coefficient
        let k = kummer_connection(p, ConnectionDirection::U1ToHorizon).unwrap();
        assert_eq!(k.c_second, C64::new(0.0, 0.0));
    }

    #[test]
    fn zero_excess_is_a_pole() {
        let p = hp((0.5, 0.25), (0.5, -0.25), (1.0, 0.0));
        match kummer_connection(p, ConnectionDirection::U1ToHorizon) {
            Err(Error::Pole { argument, .. }) => assert_eq!(argument, "c-a-b"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let p = hp((0.45, -0.8), (0.15, 1.1), (1.7, 0.0));
        let h = kummer_connection(p, ConnectionDirection::U1ToHorizon).unwrap();
        let o2 = kummer_connection(p, ConnectionDirection::U2ToOrigin).unwrap();
        let o6 = kummer_connection(p, ConnectionDirection::U6ToOrigin).unwrap();
        let on_u1 = h.c_first * o2.c_first + h.c_second * o6.c_first;
        let on_u5 = h.c_first * o2.c_second + h.c_second * o6.c_second;
        assert!((on_u1 - 1.0).norm() < 1e-10);
        assert!(on_u5.norm() < 1e-10);
    }
}
