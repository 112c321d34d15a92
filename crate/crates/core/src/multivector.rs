//! Sparse multivectors ("Clifford polynomials") over a fixed signature.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::blade::{blade_product, Blade, Signature};
use crate::error::{Error, Result};
use crate::scalar::{BigFloat, Rational, RealScalar, Scalar};

/// Polynomial norm applied to the coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    /// Largest absolute coefficient.
    Inf,
    /// Sum of absolute coefficients.
    One,
}

/// Linear combination of basis blades. Zero coefficients are never stored,
/// and iteration follows the canonical blade order.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S = Rational> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `Id`.
    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn scalar(sig: Signature, c: S) -> Self {
        let mut m = Self::zero(sig);
        m.accumulate(Blade::ID, c);
        m
    }

    /// A single basis blade with coefficient one.
    ///
    /// Panics if the blade does not fit the signature.
    pub fn blade(sig: Signature, b: Blade) -> Self {
        assert!(sig.contains(b), "blade {b} does not fit {sig}");
        let mut m = Self::zero(sig);
        m.terms.insert(b, S::one());
        m
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(sig: Signature, i: usize) -> Self {
        Self::blade(sig, Blade::generator(i))
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Result<Self> {
        let mut m = Self::zero(sig);
        for (b, c) in terms {
            if !sig.contains(b) {
                return Err(Error::BladeOutOfRange {
                    blade: b.to_string(),
                    algebra: sig.to_string(),
                });
            }
            m.accumulate(b, c);
        }
        Ok(m)
    }

    /// Coordinates in canonical blade order, length `2^n`.
    pub fn to_coordinates(&self) -> Vec<S> {
        self.sig.blades().into_iter().map(|b| self.coeff(b)).collect()
    }

    pub fn from_coordinates(sig: Signature, coords: &[S]) -> Result<Self> {
        if coords.len() != sig.algebra_dim() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a {}-dimensional algebra",
                coords.len(),
                sig.algebra_dim()
            )));
        }
        Self::from_terms(sig, sig.blades().into_iter().zip(coords.iter().cloned()))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeff(&self, b: Blade) -> S {
        self.terms.get(&b).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * b` in place, dropping the term if it cancels.
    pub fn accumulate(&mut self, b: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&b) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(b, sum);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (*b, x.clone() * c.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) -> Result<()> {
        self.check_context(other)?;
        for (b, x) in &other.terms {
            self.accumulate(*b, x.clone() * c.clone());
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one())?;
        Ok(out)
    }

    /// Clifford product.
    pub fn cmul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = Self::zero(self.sig);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, c) = blade_product(*a, *b, self.sig);
                let v = x.clone() * y.clone();
                out.accumulate(c, if sign < 0 { -v } else { v });
            }
        }
        Ok(out)
    }

    /// Exterior product; blades sharing a generator contribute nothing.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = Self::zero(self.sig);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.mask() & b.mask() != 0 {
                    continue;
                }
                let (sign, c) = blade_product(*a, *b, self.sig);
                let v = x.clone() * y.clone();
                out.accumulate(c, if sign < 0 { -v } else { v });
            }
        }
        Ok(out)
    }

    /// `self^k` under the Clifford product.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::one(self.sig);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        let mut out = Multivector::zero(self.sig);
        for (b, x) in &self.terms {
            out.accumulate(*b, f(x));
        }
        out
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::ContextMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            });
        }
        Ok(())
    }
}

impl<S: RealScalar> Multivector<S> {
    pub fn coeff_norm(&self, kind: NormKind) -> S {
        match kind {
            NormKind::Inf => self
                .terms
                .values()
                .map(|c| c.magnitude())
                .fold(S::zero(), |m, c| if c > m { c } else { m }),
            NormKind::One => self
                .terms
                .values()
                .fold(S::zero(), |acc, c| acc + c.magnitude()),
        }
    }
}

impl Multivector<Rational> {
    /// Coefficients rounded to `digits` significant decimal digits.
    pub fn to_float(&self, digits: u32) -> Multivector<BigFloat> {
        self.map(|c| BigFloat::from_rational(c, digits))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<S: Scalar> $tr<&Multivector<S>> for &Multivector<S> {
            type Output = Multivector<S>;

            fn $method(self, rhs: &Multivector<S>) -> Multivector<S> {
                let f: fn(&Multivector<S>, &Multivector<S>) -> Result<Multivector<S>> = $body;
                f(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<S: Scalar> $tr for Multivector<S> {
            type Output = Multivector<S>;

            fn $method(self, rhs: Multivector<S>) -> Multivector<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

// Operator forms panic on mismatched signatures; use the checked methods
// when the operands come from different sources.
binop!(Add, add, |a, b| a.checked_add(b));
binop!(Sub, sub, |a, b| a.checked_sub(b));
binop!(Mul, mul, |a, b| a.cmul(b));

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        -&self
    }
}

/// How a coefficient is rendered in the `c e12` text form.
pub trait CoefficientFormat {
    fn is_negative_coeff(&self) -> bool;
    /// Magnitude text; `None` when it is exactly one and may be omitted.
    fn magnitude_text(&self) -> Option<String>;
}

impl CoefficientFormat for Rational {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }

    fn magnitude_text(&self) -> Option<String> {
        let a = self.abs();
        if a.is_one() {
            None
        } else {
            Some(a.to_string())
        }
    }
}

impl CoefficientFormat for BigFloat {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }

    fn magnitude_text(&self) -> Option<String> {
        Some(self.abs().to_string())
    }
}

impl<S: Scalar + CoefficientFormat> fmt::Display for Multivector<S> {
    /// `Id - 1/2 e1 + 2 e13`, terms in canonical order; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_coeff();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match c.magnitude_text() {
                Some(t) => write!(f, "{t} {b}")?,
                None => write!(f, "{b}")?,
            }
        }
        Ok(())
    }
}
