//! Coefficient traits shared by every polynomial type in the crate.
//!
//! [`Scalar`] is a commutative ring with cheap cloning; [`FieldScalar`] adds
//! division. Exact types ([`BigRational`](num_rational::BigRational) and
//! [`Cyclotomic`](super::Cyclotomic)) drive the main pipeline, `f64` is
//! available for quick numeric sanity checks.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(v: i64) -> Self;
}

pub trait FieldScalar: Scalar + Div<Output = Self> {
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;
}

/// Formatting hook for the canonical polynomial grammar.
pub trait CoeffFormat {
    /// Returns `(negative, magnitude)`; magnitude `None` means exactly one.
    fn split_sign(&self) -> (bool, Option<String>);
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FieldScalar for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl CoeffFormat for BigRational {
    fn split_sign(&self) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let mag = self.abs();
        if mag.is_one() {
            (neg, None)
        } else if mag.is_integer() {
            (neg, Some(mag.numer().to_string()))
        } else {
            (neg, Some(format!("{}/{}", mag.numer(), mag.denom())))
        }
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
}

impl FieldScalar for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl CoeffFormat for f64 {
    fn split_sign(&self) -> (bool, Option<String>) {
        let neg = *self < 0.0;
        let mag = self.abs();
        if mag == 1.0 {
            (neg, None)
        } else {
            (neg, Some(format!("{mag}")))
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_int(v)
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
