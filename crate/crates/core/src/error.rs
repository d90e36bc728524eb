use core::fmt;

use crate::angular::LatticeViolation;
use crate::C64;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Quantum numbers outside the monopole quantization lattice.
    Lattice(LatticeViolation),
    /// A Gamma function argument sits on a pole (a nonpositive integer).
    Pole { argument: &'static str, value: C64 },
    /// Parameters for which a requested construction does not exist
    /// (integer `c`, integer `c - a - b`, vanishing amplitude denominators).
    Degenerate { what: &'static str, value: C64 },
    /// The hypergeometric series did not settle within the term cap.
    NonConvergence { partial_sum: C64, terms: usize },
    /// A real argument outside the domain of the operation.
    Domain { what: &'static str, value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Lattice(v) => write!(f, "invalid quantum numbers: {v}"),
            Error::Pole { argument, value } => write!(
                f,
                "Gamma pole: argument {argument} = {} {:+}i is a nonpositive integer",
                value.re, value.im
            ),
            Error::Degenerate { what, value } => write!(
                f,
                "degenerate parameters: {what} = {} {:+}i",
                value.re, value.im
            ),
            Error::NonConvergence { partial_sum, terms } => write!(
                f,
                "hypergeometric series not converged after {terms} terms (last partial sum {} {:+}i)",
                partial_sum.re, partial_sum.im
            ),
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<LatticeViolation> for Error {
    fn from(v: LatticeViolation) -> Self {
        Error::Lattice(v)
    }
}
