//! Dirac matrices in the spinor basis of the monopole problem:
//!
//! ```text
//! g0 = [[0, I], [I, 0]],  gj = [[0, -s_j], [s_j, 0]],  i s12 = 1/2 diag(s3, s3)
//! ```
//!
//! Spinors are plain `[C64; 4]`; the matrices are applied as explicit
//! component permutations.

use num_traits::Float;

use crate::{C64, I};

pub type Spinor = [C64; 4];

pub const ZERO: Spinor = [C64::new(0.0, 0.0); 4];

pub fn gamma0(p: &Spinor) -> Spinor {
    [p[2], p[3], p[0], p[1]]
}

pub fn gamma1(p: &Spinor) -> Spinor {
    [-p[3], -p[2], p[1], p[0]]
}

pub fn gamma2(p: &Spinor) -> Spinor {
    [I * p[3], -I * p[2], -I * p[1], I * p[0]]
}

pub fn gamma3(p: &Spinor) -> Spinor {
    [-p[2], p[3], p[0], -p[1]]
}

/// `i sigma^12 = 1/2 diag(1, -1, 1, -1)`.
pub fn i_sigma12(p: &Spinor) -> Spinor {
    [p[0] * 0.5, -p[1] * 0.5, p[2] * 0.5, -p[3] * 0.5]
}

pub fn add(a: &Spinor, b: &Spinor) -> Spinor {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn sub(a: &Spinor, b: &Spinor) -> Spinor {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn scale(k: C64, a: &Spinor) -> Spinor {
    [k * a[0], k * a[1], k * a[2], k * a[3]]
}

pub fn norm(a: &Spinor) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    type Mat = [[C64; 4]; 4];

    fn matrix(op: fn(&Spinor) -> Spinor) -> Mat {
        let mut m = [[C64::new(0.0, 0.0); 4]; 4];
        for col in 0..4 {
            let mut e = ZERO;
            e[col] = C64::new(1.0, 0.0);
            let v = op(&e);
            for row in 0..4 {
                m[row][col] = v[row];
            }
        }
        m
    }

    fn mul(a: &Mat, b: &Mat) -> Mat {
        let mut m = [[C64::new(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    m[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        m
    }

    #[test]
    fn clifford_algebra() {
        let g = [matrix(gamma0), matrix(gamma1), matrix(gamma2), matrix(gamma3)];
        let eta = [1.0, -1.0, -1.0, -1.0];
        for a in 0..4 {
            for b in 0..4 {
                let ab = mul(&g[a], &g[b]);
                let ba = mul(&g[b], &g[a]);
                for i in 0..4 {
                    for j in 0..4 {
                        let want = if a == b && i == j { 2.0 * eta[a] } else { 0.0 };
                        assert!((ab[i][j] + ba[i][j] - want).norm() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn sigma12_from_commutator() {
        // sigma^ab = 1/4 [g^a, g^b], g^1 = g_1 up to sign, which cancels in the product
        let g1 = matrix(gamma1);
        let g2 = matrix(gamma2);
        let s = matrix(i_sigma12);
        let c12 = mul(&g1, &g2);
        let c21 = mul(&g2, &g1);
        for i in 0..4 {
            for j in 0..4 {
                let want = I * (c12[i][j] - c21[i][j]) * 0.25;
                assert!((s[i][j] - want).norm() < 1e-15);
            }
        }
    }
}
