use desitter_monopole::angular::{
    check_recursions, jmin_annihilation, sigma_action, sigma_direct, validate, wigner_d, AngularSector, Delta,
    HalfInt, LatticeViolation, QuantumNumbers,
};
use desitter_monopole::gamma_matrices::{norm, sub};
use desitter_monopole::C64;
use proptest::prelude::*;

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

/// `d^j(theta) = exp(-theta (J+ - J-)/2)` by scaling and squaring of the
/// Taylor series, in the basis `m = j, j-1, ..., -j`.
fn rotation_matrix(twice_j: i32, theta: f64) -> Vec<Vec<f64>> {
    let n = (twice_j + 1) as usize;
    let j = twice_j as f64 / 2.0;
    let mut gen = vec![vec![0.0; n]; n];
    for col in 0..n {
        let m = j - col as f64;
        // J+ |m> = sqrt((j - m)(j + m + 1)) |m + 1>
        if col > 0 {
            gen[col - 1][col] -= theta / 2.0 * ((j - m) * (j + m + 1.0)).sqrt();
        }
        // J- |m> = sqrt((j + m)(j - m + 1)) |m - 1>
        if col + 1 < n {
            gen[col + 1][col] += theta / 2.0 * ((j + m) * (j - m + 1.0)).sqrt();
        }
    }
    let squarings = 10;
    let s = 0.5f64.powi(squarings);
    let mut out = vec![vec![0.0; n]; n];
    let mut term: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect()).collect();
    for i in 0..n {
        out[i][i] = 1.0;
    }
    for order in 1..30 {
        term = mul(&term, &gen);
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x *= s / order as f64;
            }
        }
        for i in 0..n {
            for k in 0..n {
                out[i][k] += term[i][k];
            }
        }
    }
    for _ in 0..squarings {
        out = mul(&out, &out);
    }
    out
}

fn mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|k| (0..n).map(|l| a[i][l] * b[l][k]).sum()).collect()).collect()
}

#[test]
fn wigner_matches_matrix_exponential() {
    for twice_j in 0..=9 {
        for &theta in &[0.3, 1.1, 2.0, 2.9] {
            let d = rotation_matrix(twice_j, theta);
            for r in 0..=twice_j {
                for c in 0..=twice_j {
                    let mp = h(twice_j - 2 * r);
                    let ms = h(twice_j - 2 * c);
                    let got = wigner_d(h(twice_j), mp, ms, theta).unwrap();
                    let want = d[r as usize][c as usize];
                    assert!((got - want).abs() < 1e-10, "j={twice_j}/2 {mp} {ms}: {got} vs {want}");
                }
            }
        }
    }
}

#[test]
fn wigner_rows_are_orthonormal() {
    for twice_j in 0..=9 {
        for &theta in &[0.2, 0.9, 1.6, 2.7] {
            for r1 in 0..=twice_j {
                for r2 in 0..=twice_j {
                    let dot: f64 = (0..=twice_j)
                        .map(|c| {
                            let s = h(twice_j - 2 * c);
                            wigner_d(h(twice_j), h(twice_j - 2 * r1), s, theta).unwrap()
                                * wigner_d(h(twice_j), h(twice_j - 2 * r2), s, theta).unwrap()
                        })
                        .sum();
                    let want = if r1 == r2 { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-10);
                }
            }
        }
    }
}

/// Every `(k, j, m)` with `|k| <= 3`, `j <= 9/2` and the explicit rule for
/// membership in the lattice.
#[test]
fn lattice_grid() {
    for tk in -6..=6 {
        for tj in -1..=9 {
            for tm in -10..=10 {
                let got = validate(h(tk), h(tj), h(tm));
                let member = tk != 0
                    && tj >= tk.abs() - 1
                    && (tj - tk.abs() + 1) % 2 == 0
                    && tm.abs() <= tj
                    && (tj - tm) % 2 == 0;
                assert_eq!(got.is_ok(), member, "k={tk}/2 j={tj}/2 m={tm}/2");
            }
        }
    }
    assert_eq!(validate(h(0), h(1), h(1)), Err(LatticeViolation::ZeroCharge));
    assert!(matches!(validate(h(3), h(0), h(0)), Err(LatticeViolation::BelowMinimum { .. })));
    assert!(matches!(validate(h(3), h(3), h(1)), Err(LatticeViolation::OffLattice { .. })));
    assert!(matches!(validate(h(1), h(2), h(4)), Err(LatticeViolation::ProjectionRange { .. })));
    assert!(matches!(validate(h(1), h(2), h(1)), Err(LatticeViolation::ProjectionParity { .. })));
}

fn lattice_points(max_twice_j: i32) -> Vec<(i32, i32, i32)> {
    let mut out = Vec::new();
    for tk in -6..=6 {
        for tj in 0..=max_twice_j {
            for tm in -tj..=tj {
                if validate(h(tk), h(tj), h(tm)).is_ok() {
                    out.push((tk, tj, tm));
                }
            }
        }
    }
    out
}

#[test]
fn recursion_sweep() {
    for (tk, tj, tm) in lattice_points(9) {
        for &theta in &[0.25, 1.0, 1.9, 2.8] {
            let r = check_recursions(h(tj), h(tk), h(tm), theta).unwrap();
            assert!(r < 1e-6, "k={tk}/2 j={tj}/2 m={tm}/2 theta={theta}: {r}");
        }
    }
}

#[test]
fn jmin_annihilation_sweep() {
    for tk in (-6..=6).filter(|&t| t != 0) {
        for &theta in &[0.4, 1.3, 2.6] {
            assert!(jmin_annihilation(h(tk), theta).unwrap() < 1e-6);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_closed_form_matches_operator(
        idx in 0usize..1000,
        theta in 0.2..2.9f64,
        f in proptest::array::uniform4((-2.0..2.0f64, -2.0..2.0f64)),
    ) {
        let pts = lattice_points(9);
        let (tk, tj, tm) = pts[idx % pts.len()];
        let qn = QuantumNumbers::new(1.0, 1.0, h(tk), h(tj), h(tm), Delta::Plus).unwrap();
        let s = AngularSector::new(qn);
        let f = f.map(|(re, im)| C64::new(re, im));
        let a = sigma_action(&s, &f, theta).unwrap();
        let d = sigma_direct(&s, &f, theta).unwrap();
        prop_assert!(norm(&sub(&a, &d)) < 1e-6);
    }

    #[test]
    fn half_int_parse_round_trip(t in -200i32..200) {
        let x = h(t);
        let back: HalfInt = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
        let dec: HalfInt = format!("{}", t as f64 / 2.0).parse().unwrap();
        prop_assert_eq!(dec, x);
    }
}
