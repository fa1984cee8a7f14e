//! Scalar rings for the linear-algebra core.
//!
//! The crate is generic over the entry type of its matrices and complexes;
//! the two rings in use are arbitrary-precision integers and exact
//! rationals. Rationals produced by `num-rational` are always in lowest
//! terms with positive denominator, which is exactly the invariant the
//! matrix types want.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Exact commutative ring scalar. Implemented by [`Integer`] and
/// [`Rational`]; nothing here admits a floating-point instance.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + Ord
{
    /// Parse from the exact string form used in the JSON interfaces
    /// (`"-3"` or `"3/2"`).
    fn parse(s: &str) -> Option<Self>;
    /// Exact string form (integers bare, fractions as `a/b`).
    fn render(&self) -> String;
}

impl Scalar for Integer {
    fn parse(s: &str) -> Option<Self> {
        BigInt::from_str(s).ok()
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational {
    fn parse(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((n, d)) => {
                let num = BigInt::from_str(n).ok()?;
                let den = BigInt::from_str(d).ok()?;
                if den.is_zero() {
                    return None;
                }
                Some(BigRational::new(num, den))
            }
            None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
        }
    }

    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Embed an integer into the rationals.
pub fn to_rational(n: &Integer) -> Rational {
    BigRational::from_integer(n.clone())
}

/// Reduce a rational into `[0, 1)`, the canonical representative mod `Z`.
pub fn mod_one(x: &Rational) -> Rational {
    let f = x.floor();
    x - f
}

/// True when the rational has denominator 1.
pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// Exact absolute value, used by pivot selection.
pub fn abs_int(x: &Integer) -> Integer {
    x.abs()
}
