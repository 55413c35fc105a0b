//! Scalar abstractions behind the arithmetic.
//!
//! Counting code is generic over [`CountScalar`], satisfied by any exact
//! integer type (`u64`, `u128`, `BigUint`, `BigInt`, ...). Field-like code
//! (harmonic numbers, expectations) is generic over [`Scalar`], implemented
//! for `f32`/`f64` and, exactly, for [`Ratio`] over any [`CountScalar`].
//! The crate-root aliases [`Count`](crate::Count) and
//! [`Rational`](crate::Rational) pick the big-integer instantiations that
//! the verification work actually runs on; the float instantiations evaluate
//! the same formulas approximately.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// An exact integer scalar suitable for counting.
///
/// Blanket-implemented, so any `Integer + Clone + FromPrimitive` type (the
/// primitive ints, `BigUint`, `BigInt`) qualifies automatically.
pub trait CountScalar: Integer + Clone + FromPrimitive {}

impl<T: Integer + Clone + FromPrimitive> CountScalar for T {}

/// A scalar with field arithmetic, ordered enough to compare results.
pub trait Scalar: Num + Clone + PartialOrd {
    /// Embeds a machine-sized count into the scalar.
    fn from_usize(n: usize) -> Self;
}

impl Scalar for f32 {
    fn from_usize(n: usize) -> Self {
        n as f32
    }
}

impl Scalar for f64 {
    fn from_usize(n: usize) -> Self {
        n as f64
    }
}

impl<T: CountScalar> Scalar for Ratio<T> {
    fn from_usize(n: usize) -> Self {
        Ratio::from_integer(T::from_usize(n).expect("count does not fit the integer scalar"))
    }
}

/// `n` as a [`CountScalar`]; panics only if the target type cannot hold `n`.
pub(crate) fn count<C: CountScalar>(n: usize) -> C {
    C::from_usize(n).expect("count does not fit the integer scalar")
}
