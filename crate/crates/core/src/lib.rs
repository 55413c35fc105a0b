//! Lucky cars and Quicksort, verified against each other in exact arithmetic.
//!
//! `n` cars drive down a one-way street with parking spots `1..=n`. Car `i`
//! heads for its preferred spot `p_i` and takes the first free spot at or
//! beyond it; if none is free it leaves the street. A car that parks exactly
//! on its preference is *lucky*. Among all `n^n` preference lists, let `L_n`
//! count those with exactly `n - 1` lucky cars. Then
//!
//! ```text
//! L_n  =  n! * Q_n  =  A_n,
//! ```
//!
//! where `Q_n` is the expected number of pivot comparisons Quicksort (always
//! picking the rightmost element as pivot) performs on a uniformly random
//! ordering of `n` distinct keys, and `A_n` is the comparison count totalled
//! over all `n!` orderings (OEIS A288964).
//!
//! The crate computes both sides of that identity by independent routes:
//!
//! - [`parking`] — the parking process and lucky statistic for one list;
//! - [`enumeration`] — brute-force sweeps over all `n^n` lists;
//! - [`quicksort`] — instrumented sorting, and totals over all `n!` orderings;
//! - [`sequences`] — closed forms, recurrences, and identities, exactly;
//! - [`polynomial`] — the generating polynomial of the lucky statistic.
//!
//! Arithmetic is generic over the scalar type (see [`scalar`]); the aliases
//! [`Count`] and [`Rational`] fix the exact instantiations used throughout.

pub mod enumeration;
mod error;
pub mod parking;
pub mod polynomial;
pub mod quicksort;
pub mod scalar;
pub mod sequences;

pub use error::Error;
pub use parking::{ParkingOutcome, PreferenceList};
pub use polynomial::LuckyPolynomial;
pub use scalar::{CountScalar, Scalar};

/// Arbitrary-precision nonnegative integer; every count in the crate is one.
pub type Count = num_bigint::BigUint;

/// Exact nonnegative rational with [`Count`] numerator and denominator.
pub type Rational = num_rational::Ratio<Count>;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
