use desitter_monopole::special::{
    euler_transform, gamma, hyp2f1, kummer_connection, kummer_u, ln_gamma, real_pow, ConnectionDirection, HypParams,
};
use desitter_monopole::C64;
use proptest::prelude::*;

/// Plain term-by-term partial sum, independent of the library's summation.
fn naive_2f1(a: C64, b: C64, c: C64, z: f64) -> C64 {
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..4000 {
        let n = n as f64;
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

fn cplx(range: f64) -> impl Strategy<Value = C64> {
    (-range..range, -range..range).prop_map(|(re, im)| C64::new(re, im))
}

/// Parameters kept away from the Gamma poles and integral `c - a - b`.
fn params() -> impl Strategy<Value = HypParams> {
    (cplx(2.0), cplx(2.0), 0.6..3.0f64, -1.5..1.5f64)
        .prop_filter_map("near-integral excess", |(a, b, cr, ci)| {
            let c = C64::new(cr, ci);
            let e = c - a - b;
            let off = (e.re - e.re.round()).abs().max(e.im.abs());
            if off < 0.05 {
                None
            } else {
                HypParams::new(a, b, c).ok()
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn series_matches_naive_sum(p in params(), z in 0.0..0.5f64) {
        let got = hyp2f1(p, z).unwrap();
        let want = naive_2f1(p.a(), p.b(), p.c(), z);
        prop_assert!((got - want).norm() < 1e-11 * want.norm().max(1.0), "{got} vs {want}");
    }

    #[test]
    fn euler_identity(p in params(), z in 0.01..0.95f64) {
        let lhs = hyp2f1(p, z).unwrap();
        let rhs = real_pow(1.0 - z, p.excess()) * hyp2f1(euler_transform(p), z).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn kummer_relations_reconstruct(p in params(), z in 0.1..0.9f64) {
        for dir in [
            ConnectionDirection::U1ToHorizon,
            ConnectionDirection::U5ToHorizon,
            ConnectionDirection::U2ToOrigin,
            ConnectionDirection::U6ToOrigin,
        ] {
            let (Ok(k), Ok(src)) = (kummer_connection(p, dir), kummer_u(dir.source(), p, z)) else { continue };
            let (t1, t2) = dir.targets();
            let rebuilt = k.c_first * kummer_u(t1, p, z).unwrap() + k.c_second * kummer_u(t2, p, z).unwrap();
            let scale = src.norm().max((k.c_first * kummer_u(t1, p, z).unwrap()).norm());
            prop_assert!((src - rebuilt).norm() < 1e-9 * scale.max(1e-300), "{dir:?}: {src} vs {rebuilt}");
        }
    }

    #[test]
    fn kummer_round_trip(p in params()) {
        let (Ok(h), Ok(o2), Ok(o6)) = (
            kummer_connection(p, ConnectionDirection::U1ToHorizon),
            kummer_connection(p, ConnectionDirection::U2ToOrigin),
            kummer_connection(p, ConnectionDirection::U6ToOrigin),
        ) else { return Ok(()) };
        let on_u1 = h.c_first * o2.c_first + h.c_second * o6.c_first;
        let on_u5 = h.c_first * o2.c_second + h.c_second * o6.c_second;
        let scale = (h.c_first * o2.c_first).norm().max((h.c_second * o6.c_first).norm()).max(1.0);
        prop_assert!((on_u1 - 1.0).norm() < 1e-9 * scale);
        prop_assert!(on_u5.norm() < 1e-9 * scale);
    }

    #[test]
    fn gamma_recurrence(z in cplx(6.0)) {
        prop_assume!((z.re - z.re.round()).abs() > 0.05 || z.im.abs() > 0.05);
        let g = gamma(z).unwrap();
        let g1 = gamma(z + 1.0).unwrap();
        prop_assert!((g1 - z * g).norm() < 1e-11 * g1.norm().max(1e-300));
    }

    #[test]
    fn ln_gamma_reflection(z in cplx(3.0)) {
        prop_assume!((z.re - z.re.round()).abs() > 0.05 || z.im.abs() > 0.05);
        let lhs = (ln_gamma(z).unwrap() + ln_gamma(1.0 - z).unwrap()).exp();
        let rhs = C64::new(std::f64::consts::PI, 0.0) / (z * std::f64::consts::PI).sin();
        prop_assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
    }
}

#[test]
fn known_values() {
    let g = gamma(C64::new(0.5, 0.0)).unwrap();
    assert!((g.re - std::f64::consts::PI.sqrt()).abs() < 1e-14 && g.im.abs() < 1e-15);
    // F(1, 1; 2; z) = -ln(1 - z)/z
    let p = HypParams::new(C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(2.0, 0.0)).unwrap();
    let z: f64 = 0.7;
    assert!((hyp2f1(p, z).unwrap().re + (1.0 - z).ln() / z).abs() < 1e-12);
}
