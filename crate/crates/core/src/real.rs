//! Scalar abstraction for the numeric core.
//!
//! Everything downstream is generic over [`Real`], so the same formulas run
//! in `f32` or `f64`. Concrete `f64` aliases live at the crate root; the
//! stated tolerances throughout the crate assume `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: IEEE arithmetic, math constants, and conversion
/// from the `f64` literals that tabulated coefficients are written in.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + 'static
{
    /// Rounds an `f64` coefficient into `Self` once.
    #[inline]
    fn cast(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 coefficient")
    }

    /// Converts a count into `Self`.
    #[inline]
    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("count representable as float")
    }

    /// Converts a quantum number into `Self`.
    #[inline]
    fn of_u32(value: u32) -> Self {
        Self::from_u32(value).expect("u32 representable as float")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// ħc in eV·Å (CODATA 2018).
pub const HBARC_EV_ANGSTROM: f64 = 1973.269804;

/// One atomic mass unit in eV/c² (CODATA 2018).
pub const AMU_EV: f64 = 931.494_102_42e6;
