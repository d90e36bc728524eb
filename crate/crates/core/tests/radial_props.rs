use desitter_monopole::angular::Delta;
use desitter_monopole::horizon::{
    compose, composition_residual, decompose, decomposition_residual, OriginKind, WaveDirection,
};
use desitter_monopole::jmin::{jmin_second_order_residual, JminPair, JminPairing, KSign};
use desitter_monopole::radial::{
    family_params, pair_amplitudes, relative_first_order_residual, relative_second_order_residual, Channel,
    FamilyKind, RadialPair, RadialParams,
};
use desitter_monopole::{C64, I};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn interior(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64 / (n + 1) as f64).collect()
}

/// Skips draws within reach of `nu = 1/2 + n`, where the singular pair degenerates.
fn draw(rng: &mut ChaCha8Rng) -> (f64, f64, f64, Delta) {
    loop {
        let eps = rng.gen_range(0.1..5.0);
        let mass = rng.gen_range(0.0..5.0);
        let nu: f64 = rng.gen_range(0.0..4.0);
        let delta = if rng.gen_bool(0.5) { Delta::Plus } else { Delta::Minus };
        if (nu - 0.5 - (nu - 0.5).round()).abs() > 1e-6 {
            return (eps, mass, nu, delta);
        }
    }
}

/// `z(1-z) X'' + (1/2 - z) X' + V X` with `V` written out independently.
fn second_order_lhs(ch: Channel, p: &RadialParams, x: [C64; 3], z: f64) -> (C64, f64) {
    let m = C64::new(p.signed_mass(), -0.5);
    let s = match ch {
        Channel::F => 1.0,
        Channel::G => -1.0,
    };
    let v = -m * m / 4.0 + p.eps * C64::new(p.eps, -s) / (4.0 * (1.0 - z)) - p.nu * (p.nu + s) / (4.0 * z);
    let terms = [z * (1.0 - z) * x[2], (0.5 - z) * x[1], v * x[0]];
    let scale = terms.iter().map(|t| t.norm()).sum();
    (terms.iter().sum(), scale)
}

#[test]
fn residual_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let zs = interior(20);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let (eps, mass, nu, delta) = draw(&mut rng);
        let p = RadialParams::new(eps, mass, nu, delta).unwrap();
        for kind in FamilyKind::ALL {
            let pair = RadialPair::new(kind, p).unwrap();
            for &z in &zs {
                let r = relative_first_order_residual(&pair, z).unwrap();
                worst = worst.max(r[0]).max(r[1]);
                for fam in [pair.f_family, pair.g_family] {
                    worst = worst.max(relative_second_order_residual(&fam, &p, z).unwrap());
                    let j = fam.jet(z).unwrap();
                    let (lhs, scale) = second_order_lhs(fam.channel, &p, [j.value, j.d1, j.d2], z);
                    worst = worst.max(lhs.norm() / scale);
                }
            }
        }
    }
    assert!(worst < 1e-8, "worst relative residual {worst:e}");
}

#[test]
fn jets_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-5;
    for _ in 0..20 {
        let (eps, mass, nu, delta) = draw(&mut rng);
        let p = RadialParams::new(eps, mass, nu, delta).unwrap();
        for kind in FamilyKind::ALL {
            for ch in [Channel::F, Channel::G] {
                let fam = family_params(&p, ch, kind).unwrap();
                for &z in &[0.2, 0.5, 0.8] {
                    let j = fam.jet(z).unwrap();
                    let f = |x: f64| fam.eval(x).unwrap();
                    let d1 = (f(z + h) - f(z - h)) / (2.0 * h);
                    let d2 = (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
                    let s = j.value.norm().max(1.0);
                    assert!((j.d1 - d1).norm() < 1e-6 * s.max(j.d1.norm()));
                    assert!((j.d2 - d2).norm() < 1e-3 * s.max(j.d2.norm()));
                }
            }
        }
    }
}

#[test]
fn amplitude_couplings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let (eps, mass, nu, delta) = draw(&mut rng);
        let p = RadialParams::new(eps, mass, nu, delta).unwrap();
        let m = p.signed_mass();
        // a', b', c' of the regular G solution
        let shift = (I * m + 0.5) / 2.0;
        let mid = C64::new(nu, eps) / 2.0;
        let (a, b, c) = (mid + shift, mid - shift, nu + 0.5);

        let (f0, g0) = pair_amplitudes(FamilyKind::Regular, &p).unwrap();
        let reg = 2.0 * g0 * a * b / c + C64::new(-eps + m, nu - 0.5) * f0;
        assert!(reg.norm() < 1e-12 * f0.norm().max(1.0), "{reg}");

        let (f0, g0) = pair_amplitudes(FamilyKind::Singular, &p).unwrap();
        let sing = f0 * C64::new(0.5 - nu, m - eps) + I * (1.0 - 2.0 * nu) * g0;
        assert!(sing.norm() < 1e-12 * g0.norm().max(1.0), "{sing}");
    }
}

#[test]
fn jmin_residual_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let zs = interior(20);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let (eps, mass, _, _) = draw(&mut rng);
        for sign_k in [KSign::Positive, KSign::Negative] {
            for pairing in JminPairing::ALL {
                let pair = JminPair::new(pairing, eps, mass, sign_k).unwrap();
                for &z in &zs {
                    let r = pair.relative_residual(z).unwrap();
                    worst = worst.max(r[0]).max(r[1]);
                    for fam in [pair.f_family, pair.g_family] {
                        worst = worst.max(jmin_second_order_residual(&fam, eps, mass, sign_k, z).unwrap());
                    }
                }
            }
        }
    }
    assert!(worst < 1e-8, "worst relative residual {worst:e}");
}

#[test]
fn horizon_bases_reconstruct() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..20 {
        let (eps, mass, nu, delta) = draw(&mut rng);
        let p = RadialParams::new(eps, mass, nu, delta).unwrap();
        for ch in [Channel::F, Channel::G] {
            for kind in [OriginKind::Regular, OriginKind::Singular] {
                let d = decompose(ch, kind, &p).unwrap();
                for &z in &[0.15, 0.5, 0.9] {
                    assert!(decomposition_residual(&d, &p, z).unwrap() < 1e-9);
                }
            }
            for dir in [WaveDirection::In, WaveDirection::Out] {
                let d = compose(ch, dir, &p).unwrap();
                for &z in &[0.15, 0.5, 0.9] {
                    assert!(composition_residual(&d, &p, z).unwrap() < 1e-9);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairs_solve_the_system(
        eps in 0.1..5.0f64,
        mass in 0.0..5.0f64,
        nu in 0.0..4.0f64,
        plus in any::<bool>(),
        z in 0.01..0.99f64,
    ) {
        prop_assume!((nu - 0.5 - (nu - 0.5).round()).abs() > 1e-4);
        let delta = if plus { Delta::Plus } else { Delta::Minus };
        let p = RadialParams::new(eps, mass, nu, delta).unwrap();
        for kind in FamilyKind::ALL {
            let r = relative_first_order_residual(&RadialPair::new(kind, p).unwrap(), z).unwrap();
            prop_assert!(r[0] < 1e-8 && r[1] < 1e-8, "{kind:?}: {r:?}");
        }
    }

    #[test]
    fn delta_flip_is_mass_flip(eps in 0.1..5.0f64, mass in 0.0..5.0f64, nu in 0.0..4.0f64, z in 0.05..0.95f64) {
        let a = RadialPair::new(FamilyKind::Regular, RadialParams::new(eps, mass, nu, Delta::Minus).unwrap()).unwrap();
        let b = RadialPair::new(FamilyKind::Regular, RadialParams::new(eps, -mass, nu, Delta::Plus).unwrap()).unwrap();
        let (fa, ga) = a.eval(z).unwrap();
        let (fb, gb) = b.eval(z).unwrap();
        prop_assert!((fa - fb).norm() <= 1e-12 * fa.norm().max(1.0));
        prop_assert!((ga - gb).norm() <= 1e-12 * ga.norm().max(1.0));
    }
}
