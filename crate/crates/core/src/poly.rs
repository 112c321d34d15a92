//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ComplexRational, Rational, Scalar};

/// Coefficients stored lowest degree first with no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

pub type RealPolynomial = Polynomial<Rational>;
pub type ComplexPolynomial = Polynomial<ComplexRational>;

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![S::one()])
    }

    /// `c x^k`.
    pub fn monomial(k: usize, c: S) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(1, S::one())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                self.map(|c| c.clone() / l.clone())
            }
            None => Self::zero(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Long division: `self = q * den + r` with `deg r < deg den`.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self)> {
        let dd = den.degree().ok_or(Error::ZeroDivisor)?;
        let lead = den.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![S::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder of `self * x` modulo a monic `modulus` of degree `d`, for
    /// `self` already reduced (degree below `d`).
    pub fn shift_mod(&self, modulus: &Self) -> Self {
        let d = modulus.degree().expect("nonzero modulus");
        let mut c = vec![S::zero(); d];
        for (k, a) in self.coeffs.iter().enumerate() {
            if k + 1 < d {
                c[k + 1] = a.clone();
            }
        }
        let top = self.coeff(d - 1);
        if !top.is_zero() {
            for (ck, mk) in c.iter_mut().zip(&modulus.coeffs) {
                *ck = ck.clone() - top.clone() * mk.clone();
            }
        }
        Self::new(c)
    }
}

macro_rules! poly_op {
    ($tr:ident, $method:ident, $f:expr) => {
        impl<S: Scalar> $tr<&Polynomial<S>> for &Polynomial<S> {
            type Output = Polynomial<S>;

            fn $method(self, rhs: &Polynomial<S>) -> Polynomial<S> {
                let f: fn(&Polynomial<S>, &Polynomial<S>) -> Polynomial<S> = $f;
                f(self, rhs)
            }
        }
    };
}

poly_op!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Polynomial::new((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
});
poly_op!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    Polynomial::new((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
});
poly_op!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let mut out = vec![S::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    Polynomial::new(out)
});

/// `x^k mod modulus` by square-and-multiply with exact remainders.
pub fn poly_powmod<S: Scalar>(k: u64, modulus: &Polynomial<S>) -> Result<Polynomial<S>> {
    if modulus.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let reduce = |p: &Polynomial<S>| -> Result<Polynomial<S>> { Ok(p.div_rem(modulus)?.1) };
    let mut result = reduce(&Polynomial::one())?;
    let mut base = reduce(&Polynomial::x())?;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = reduce(&(&result * &base))?;
        }
        base = reduce(&(&base * &base))?;
        e >>= 1;
    }
    Ok(result)
}

/// Exact complex long division, `(quotient, remainder)`.
pub fn cpoly_divide(
    num: &ComplexPolynomial,
    den: &ComplexPolynomial,
) -> Result<(ComplexPolynomial, ComplexPolynomial)> {
    num.div_rem(den)
}

impl RealPolynomial {
    pub fn to_complex(&self) -> ComplexPolynomial {
        self.map(<ComplexRational as Scalar>::from_rational)
    }
}

impl ComplexPolynomial {
    /// The polynomial itself when every coefficient is real.
    pub fn to_real(&self) -> Option<RealPolynomial> {
        self.coeffs
            .iter()
            .all(|c| c.im.is_zero())
            .then(|| Polynomial::new(self.coeffs.iter().map(|c| c.re.clone()).collect()))
    }
}

/// One printed term: sign, and the coefficient text (`None` for a unit
/// coefficient that can be elided in front of a power of `x`).
pub trait PolyCoefficient {
    fn parts(&self, degree: usize) -> Vec<(bool, Option<String>)>;
}

fn rational_part(r: &Rational) -> (bool, Option<String>) {
    let a = r.abs();
    (r.is_negative(), (!a.is_one()).then(|| a.to_string()))
}

impl PolyCoefficient for Rational {
    fn parts(&self, _degree: usize) -> Vec<(bool, Option<String>)> {
        vec![rational_part(self)]
    }
}

impl PolyCoefficient for ComplexRational {
    fn parts(&self, degree: usize) -> Vec<(bool, Option<String>)> {
        let imag = |b: &Rational| {
            let (neg, t) = rational_part(b);
            (neg, Some(t.map_or("I".to_string(), |t| format!("{t}*I"))))
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => vec![rational_part(&self.re)],
            (true, false) => vec![imag(&self.im)],
            (false, false) if degree == 0 => vec![rational_part(&self.re), imag(&self.im)],
            (false, false) => {
                let (neg, t) = imag(&self.im);
                let body = format!(
                    "({} {} {})",
                    self.re,
                    if neg { "-" } else { "+" },
                    t.unwrap_or_default()
                );
                vec![(false, Some(body))]
            }
        }
    }
}

impl<S: Scalar + PolyCoefficient> fmt::Display for Polynomial<S> {
    /// Descending powers of `x`, e.g. `x^4 - 2*x^3 + 13*x^2 - 12*x + 40`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            for (neg, text) in c.parts(k) {
                let power = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                let body = match (text, power.is_empty()) {
                    (Some(t), true) => t,
                    (None, true) => "1".to_string(),
                    (Some(t), false) => format!("{t}*{power}"),
                    (None, false) => power,
                };
                match (first, neg) {
                    (true, true) => write!(f, "-{body}")?,
                    (true, false) => write!(f, "{body}")?,
                    (false, true) => write!(f, " - {body}")?,
                    (false, false) => write!(f, " + {body}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}
