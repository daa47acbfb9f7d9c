//! Scalar abstractions shared by the exact-arithmetic layers.
//!
//! Polynomials and the small linear solver are written once against these
//! traits and instantiated with [`Gf4`](crate::Gf4) (cyclic codes),
//! [`BigInt`] (basis expansions) and [`BigRational`] (exact elimination).

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with identity.
pub trait Ring:
    Clone + Debug + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Debug + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for Ratio<i128> {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Lossless lift of small integers into a ring.
pub trait FromInteger {
    fn from_i64(v: i64) -> Self;
}

impl FromInteger for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl FromInteger for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FromInteger for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}

impl FromInteger for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}
