//! Angular sector: the monopole quantization lattice, Wigner functions, the
//! angular operator `Sigma^k` and the background potential.

mod half_int;
mod monopole;
mod operator;
mod wigner;

use core::fmt;

use num_traits::Float;

pub use half_int::{HalfInt, ParseHalfIntError};
pub use monopole::{maxwell_residual, MonopolePotential};
pub use operator::{
    apply_sigma, jmin_annihilation, jmin_spinor_angular, sigma_action, sigma_direct,
    angular_spinor,
};
pub use wigner::{check_recursions, wigner_d, THETA_STEP};
pub(crate) use operator::fd5;

pub(crate) use wigner::small_d_or_zero;

/// Why a `(k, j, m)` triple is not an allowed monopole harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeViolation {
    ZeroCharge,
    BelowMinimum { j: HalfInt, k: HalfInt },
    OffLattice { j: HalfInt, k: HalfInt },
    ProjectionRange { j: HalfInt, m: HalfInt },
    ProjectionParity { j: HalfInt, m: HalfInt },
}

impl fmt::Display for LatticeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::ZeroCharge => f.write_str("k = 0: the monopole charge must be a nonzero half-integer"),
            Self::BelowMinimum { j, k } => write!(
                f,
                "j = {j} is below j_min = |k| - 1/2 = {} for k = {k}",
                k.abs() - HalfInt::HALF
            ),
            Self::OffLattice { j, k } => write!(
                f,
                "j = {j} is not on the lattice |k| - 1/2, |k| + 1/2, ... for k = {k} (j - |k| + 1/2 must be an integer)"
            ),
            Self::ProjectionRange { j, m } => write!(f, "|m| = |{m}| exceeds j = {j}"),
            Self::ProjectionParity { j, m } => {
                write!(f, "m = {m} is not in -j, -j+1, ..., j for j = {j} (m - j must be an integer)")
            }
        }
    }
}

impl core::error::Error for LatticeViolation {}

/// A validated `(k, j, m)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Harmonic {
    pub k: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
}

impl Harmonic {
    pub fn j_min(&self) -> HalfInt {
        self.k.abs() - HalfInt::HALF
    }

    pub fn is_jmin(&self) -> bool {
        self.j == self.j_min()
    }
}

/// Checks `k != 0`, `j - (|k| - 1/2) in {0, 1, 2, ...}` and `m in {-j, ..., j}`.
pub fn validate(k: HalfInt, j: HalfInt, m: HalfInt) -> Result<Harmonic, LatticeViolation> {
    if k.twice() == 0 {
        return Err(LatticeViolation::ZeroCharge);
    }
    let above = j - (k.abs() - HalfInt::HALF);
    if above.twice() < 0 {
        return Err(LatticeViolation::BelowMinimum { j, k });
    }
    if !above.is_integer() {
        return Err(LatticeViolation::OffLattice { j, k });
    }
    if m.abs() > j {
        return Err(LatticeViolation::ProjectionRange { j, m });
    }
    if !(j - m).is_integer() {
        return Err(LatticeViolation::ProjectionParity { j, m });
    }
    Ok(Harmonic { k, j, m })
}

/// `nu = sqrt((j + 1/2)^2 - k^2)`, exact zero at `j = j_min`.
pub fn nu(j: HalfInt, k: HalfInt) -> f64 {
    let t = (j.twice() + 1) as i64;
    let q = t * t - (k.twice() as i64).pow(2);
    if q <= 0 {
        0.0
    } else {
        (q as f64).sqrt() / 2.0
    }
}

/// The three coefficients of the angular recursions.
///
/// A negative radicand marks a neighbour `D` that does not exist at this
/// `(j, k)`; its coefficient is then 0 and the matching flag is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub b_absent: bool,
    pub c_absent: bool,
}

pub fn coupling_coeffs(j: HalfInt, k: HalfInt) -> Coupling {
    let (tj, tk) = (j.twice() as i64, k.twice() as i64);
    // b^2 = (2j - 2k - 1)(2j + 2k + 3) / 16, c^2 = (2j + 2k - 1)(2j - 2k + 3) / 16
    let rb = (tj - tk - 1) * (tj + tk + 3);
    let rc = (tj + tk - 1) * (tj - tk + 3);
    let root = |r: i64| if r <= 0 { 0.0 } else { (r as f64).sqrt() / 4.0 };
    Coupling {
        a: nu(j, k) / 2.0,
        b: root(rb),
        c: root(rc),
        b_absent: rb < 0,
        c_absent: rc < 0,
    }
}

/// Sign choice `delta` of the generalized Dirac operator eigenvalue
/// `lambda = -delta nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Delta {
    Plus,
    Minus,
}

impl Delta {
    pub fn sign(self) -> f64 {
        match self {
            Delta::Plus => 1.0,
            Delta::Minus => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Option<Self> {
        match s {
            1 => Some(Delta::Plus),
            -1 => Some(Delta::Minus),
            _ => None,
        }
    }
}

/// Quantum numbers of one mode: energy and mass in units of the inverse
/// curvature radius, the monopole harmonic and `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    pub epsilon: f64,
    pub mass: f64,
    pub k: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
    pub delta: Delta,
}

impl QuantumNumbers {
    pub fn new(
        epsilon: f64,
        mass: f64,
        k: HalfInt,
        j: HalfInt,
        m: HalfInt,
        delta: Delta,
    ) -> Result<Self, LatticeViolation> {
        validate(k, j, m)?;
        Ok(Self {
            epsilon,
            mass,
            k,
            j,
            m,
            delta,
        })
    }

    pub fn harmonic(&self) -> Harmonic {
        Harmonic {
            k: self.k,
            j: self.j,
            m: self.m,
        }
    }

    pub fn is_jmin(&self) -> bool {
        self.harmonic().is_jmin()
    }

    pub fn nu(&self) -> f64 {
        nu(self.j, self.k)
    }

    /// Eigenvalue of the generalized Dirac operator; 0 at `j_min`.
    pub fn lambda(&self) -> f64 {
        if self.is_jmin() {
            0.0
        } else {
            -self.delta.sign() * self.nu()
        }
    }
}

/// Quantum numbers together with the derived angular constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularSector {
    pub qn: QuantumNumbers,
    pub nu: f64,
    pub a_ang: f64,
    pub b_ang: f64,
    pub c_ang: f64,
}

impl AngularSector {
    pub fn new(qn: QuantumNumbers) -> Self {
        let cc = coupling_coeffs(qn.j, qn.k);
        Self {
            qn,
            nu: qn.nu(),
            a_ang: cc.a,
            b_ang: cc.b,
            c_ang: cc.c,
        }
    }
}
