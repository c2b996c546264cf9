use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar underlying all complex-valued computation.
///
/// The exact algebra (field and ring elements) is integer-based; everything
/// downstream of a character evaluation is generic over this trait, so the
/// same constructions run at f32 or f64. The tolerance constants scale with
/// the precision of the type.
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Tolerance asserted at construction time (unit norms, cross-validated builds).
    const BUILD_TOL: Self;
    /// Default tolerance for verification gates.
    const VERIFY_TOL: Self;
}

impl Scalar for f64 {
    const BUILD_TOL: f64 = 1e-10;
    const VERIFY_TOL: f64 = 1e-9;
}

impl Scalar for f32 {
    const BUILD_TOL: f32 = 1e-4;
    const VERIFY_TOL: f32 = 1e-3;
}

/// e^{2 pi i num/den}, with num reduced mod den before any float math so the
/// angle is always an exact rational multiple of 2 pi in [0, 2 pi).
pub fn root_of_unity<T: Scalar>(num: i64, den: u64) -> Complex<T> {
    debug_assert!(den > 0);
    let r = num.rem_euclid(den as i64) as u64;
    let angle = T::TAU() * T::from_u64(r).unwrap() / T::from_u64(den).unwrap();
    Complex::from_polar(T::one(), angle)
}

/// i^k for k mod 4, exact (no trigonometry).
pub fn quarter_phase<T: Scalar>(k: u64) -> Complex<T> {
    let one = T::one();
    let zero = T::zero();
    match k % 4 {
        0 => Complex::new(one, zero),
        1 => Complex::new(zero, one),
        2 => Complex::new(-one, zero),
        _ => Complex::new(zero, -one),
    }
}
