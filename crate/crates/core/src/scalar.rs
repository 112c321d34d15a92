//! Coefficient fields.
//!
//! Everything in the crate is written once against [`Scalar`]. The exact
//! instantiation is [`Rational`]; [`BigFloat`] gives decimal floating point
//! at a chosen number of significant digits, and [`ComplexRational`] is used
//! where complex entries need exact elimination.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use crate::bigfloat::BigFloat;

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

/// Gaussian rational `a + b i` with exact parts.
pub type ComplexRational = Complex<BigRational>;

/// A field usable as the coefficient ring of multivectors and matrices.
///
/// Division by zero is never attempted by the library; implementations may
/// panic on it.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: &Rational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
}

/// Ordered scalars with an absolute value.
pub trait RealScalar: Scalar + PartialOrd {
    fn magnitude(&self) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl RealScalar for Rational {
    fn magnitude(&self) -> Self {
        self.abs()
    }
}

impl Scalar for ComplexRational {
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }
}

impl Scalar for BigFloat {
    /// Rounds to [`crate::bigfloat::DEFAULT_DIGITS`] significant digits.
    fn from_rational(r: &Rational) -> Self {
        BigFloat::from_rational(r, crate::bigfloat::DEFAULT_DIGITS)
    }

    fn from_integer(n: i64) -> Self {
        BigFloat::from(n)
    }
}

impl RealScalar for BigFloat {
    fn magnitude(&self) -> Self {
        self.abs()
    }
}

/// Shorthand for `n / d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
