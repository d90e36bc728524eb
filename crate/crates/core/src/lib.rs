//! Exact spinor wave solutions of the Dirac equation for a spin-1/2 particle
//! in the field of a Dirac monopole string on the static patch of de Sitter
//! space, together with the numerical machinery used to cross-check them.
//!
//! The crate is `no_std` (it needs `alloc` only for trajectories and study
//! tables). Units: the de Sitter curvature radius is 1, so the static patch is
//! `0 <= r < 1` and `z = r^2`.
//!
//! Module map:
//!
//! * [`special`] - complex log-Gamma, Gauss hypergeometric series, Kummer
//!   connection formulas.
//! * [`angular`] - half-integer bookkeeping, quantization lattice, Wigner
//!   d-functions and the angular operator.
//! * [`radial`] - the four radial solution families for `j > j_min`.
//! * [`jmin`] - the minimal angular momentum sector.
//! * [`horizon`] - tortoise coordinate, in/out waves and basis changes.
//! * [`flat_limit`] - Minkowski reference solutions and the curvature limit.
//! * [`ode`] - adaptive Runge-Kutta oracle for the first-order systems.
//! * [`spinor`] - assembly of the four-component wavefunction.

#![no_std]
// `Float` imports go unused when a dev-dependency pulls std float methods in
#![allow(unused_imports)]

extern crate alloc;

pub mod angular;
pub mod error;
pub mod fit;
pub mod flat_limit;
pub mod gamma_matrices;
pub mod horizon;
pub mod jmin;
pub mod ode;
pub mod profile;
pub mod radial;
pub mod special;
pub mod spinor;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Library version, recorded in every output file.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Shorthand used throughout the crate.
pub type C64 = Complex64;

/// The imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);
