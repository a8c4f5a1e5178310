//! Exact scalar abstraction for the polynomial and matrix layers.
//!
//! Everything in this crate is exact arithmetic over the integers, but the
//! same elimination and interpolation code is useful at three widths:
//! `i64` for tiny fixed-size problems, `i128` for the 0/1-grid determinant
//! evaluations (Hadamard-bounded), and `BigInt` when nothing is known about
//! coefficient growth. `Scalar` pins down the operations they share.

use num_traits::{FromPrimitive, Signed};
use std::fmt::{Debug, Display};

/// An exact signed integer scalar.
pub trait Scalar:
    Clone + Ord + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Conversion from the `i128` values produced by grid determinants.
    /// Panics on overflow; callers pick a wide enough scalar up front.
    fn from_wide(v: i128) -> Self {
        Self::from_i128(v).expect("scalar overflow converting from i128")
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for num_bigint::BigInt {}
