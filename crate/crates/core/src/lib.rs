//! Constructions and verifiers for complete sets of mutually unbiased bases,
//! Galois phase operators, character sums, and maximally entangled basis
//! families, built from exact finite-field and Galois-ring arithmetic.

mod arith;
mod error;
mod polynomial;

pub mod characters;
pub mod entanglement;
pub mod finite_field;
pub mod format;
pub mod galois_ring;
pub mod mub;
pub mod phase_operator;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use scalar::{quarter_phase, root_of_unity, Scalar};

/// Concrete scalar used by the CLI and the built-in verification suite.
pub type Real = f64;
/// Complex value over [`Real`].
pub type C64 = num_complex::Complex<f64>;
/// Single-precision complex value.
pub type C32 = num_complex::Complex<f32>;

pub use num_complex::Complex;
