//! Scalar traits the algebra is generic over.
//!
//! Everything in this crate is exact. The coefficient ring of Laurent
//! polynomials only needs ring operations plus a sign, so any signed
//! integer type works (`BigInt` by default, `i64`/`i128` when the caller
//! knows the values stay small). The graded-module oracle solves linear
//! systems and therefore needs a field; `BigRational` is the default, and
//! `Ratio<i64>`/`Ratio<i128>` are accepted for quick experiments.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// An exact, signed, integer-like coefficient ring.
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + Signed
    + ToPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;
}

impl<T> Coeff for T
where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Eq
        + Ord
        + Hash
        + Zero
        + One
        + Signed
        + ToPrimitive
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        <T as FromPrimitive>::from_i64(n).expect("coefficient type cannot represent an i64")
    }
}

/// An exact field, used for the linear algebra in the module oracle.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;
}

impl<T> Field for T
where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        <T as FromPrimitive>::from_i64(n).expect("field type cannot represent an i64")
    }
}
