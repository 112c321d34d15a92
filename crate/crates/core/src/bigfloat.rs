//! Decimal floating point with a fixed number of significant digits.
//!
//! A value is `mantissa * 10^exponent`. Every arithmetic result is rounded
//! to the working number of significant digits with round-half-even, which
//! mirrors how a computer algebra session with `Digits := 20` evaluates
//! floats. A precision of zero marks an exact value (integers, or results
//! of exact additions/multiplications of exact values).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Precision used when none is requested.
pub const DEFAULT_DIGITS: u32 = 20;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

fn pow10(n: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u8), n as usize)
}

fn decimal_len(n: &BigInt) -> u64 {
    if n.is_zero() {
        0
    } else {
        n.magnitude().to_string().len() as u64
    }
}

fn combine(a: u32, b: u32) -> u32 {
    match (a, b) {
        (0, d) | (d, 0) => d,
        (a, b) => a.max(b),
    }
}

impl BigFloat {
    fn from_parts(mantissa: BigInt, exponent: i64, digits: u32, sticky: bool) -> Self {
        let (mut m, mut e) = (mantissa, exponent);
        if digits > 0 {
            let len = decimal_len(&m);
            if len > digits as u64 {
                let drop = len - digits as u64;
                let scale = pow10(drop);
                let negative = m.is_negative();
                let (mut q, r) = m.abs().div_rem(&scale);
                let half = &scale / 2u8;
                let up = match r.cmp(&half) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => sticky || q.is_odd(),
                };
                if up {
                    q += 1u8;
                }
                m = if negative { -q } else { q };
                e += drop as i64;
            }
        }
        if m.is_zero() {
            e = 0;
        } else {
            let ten = BigInt::from(10u8);
            loop {
                let (q, r) = m.div_rem(&ten);
                if !r.is_zero() {
                    break;
                }
                m = q;
                e += 1;
            }
        }
        BigFloat {
            mantissa: m,
            exponent: e,
            digits,
        }
    }

    /// Zero carrying a working precision.
    pub fn zero_with_digits(digits: u32) -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
            digits,
        }
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &BigRational, digits: u32) -> Self {
        let digits = if digits == 0 { DEFAULT_DIGITS } else { digits };
        if r.is_zero() {
            return Self::zero_with_digits(digits);
        }
        let negative = r.is_negative();
        let num = r.numer().abs();
        let den = r.denom().clone();
        let mut shift =
            digits as i64 + 1 - (decimal_len(&num) as i64 - decimal_len(&den) as i64);
        loop {
            let (n2, d2) = if shift >= 0 {
                (&num * pow10(shift as u64), den.clone())
            } else {
                (num.clone(), &den * pow10((-shift) as u64))
            };
            let (q, rem) = n2.div_rem(&d2);
            let len = decimal_len(&q);
            if len > digits as u64 {
                let q = if negative { -q } else { q };
                return Self::from_parts(q, -shift, digits, !rem.is_zero());
            }
            shift += 1 + digits as i64 - len as i64;
        }
    }

    /// Parses a plain decimal literal such as `-2.5`, `1e-3` or `.25`.
    pub fn parse_decimal(text: &str, digits: u32) -> Option<Self> {
        let t = text.trim();
        let (body, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
            None => (t, 0),
        };
        let (sign, body) = match body.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = match body.find('.') {
            Some(i) => (&body[..i], &body[i + 1..]),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let joined = format!("{int_part}{frac_part}");
        let m: BigInt = joined.parse().ok()?;
        Some(Self::from_parts(
            m * sign,
            exp - frac_part.len() as i64,
            digits,
            false,
        ))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_exact(&self) -> bool {
        self.digits == 0
    }

    /// Rounds to `digits` significant digits.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_parts(self.mantissa.clone(), self.exponent, digits, false)
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
            digits: self.digits,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Square root rounded to the working precision; `None` for negative input.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let digits = if self.digits == 0 {
            DEFAULT_DIGITS
        } else {
            self.digits
        };
        if self.mantissa.is_zero() {
            return Some(Self::zero_with_digits(digits));
        }
        let (mut m, mut e) = (self.mantissa.clone(), self.exponent);
        if e.rem_euclid(2) == 1 {
            m *= 10u8;
            e -= 1;
        }
        let need = 2 * (digits as i64 + 1) - decimal_len(&m) as i64;
        if need > 0 {
            let t = (need + 1) / 2;
            m *= pow10(2 * t as u64);
            e -= 2 * t;
        }
        let s = m.sqrt();
        let sticky = &s * &s != m;
        Some(Self::from_parts(s, e / 2, digits, sticky))
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa * pow10(self.exponent as u64))
        } else {
            BigRational::new(self.mantissa.clone(), pow10((-self.exponent) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        format!("{}e{}", self.mantissa, self.exponent)
            .parse()
            .unwrap_or(f64::NAN)
    }

    /// Decimal exponent of the leading digit (`floor(log10|x|)`), `None` for zero.
    pub fn leading_exponent(&self) -> Option<i64> {
        if self.mantissa.is_zero() {
            None
        } else {
            Some(self.exponent + decimal_len(&self.mantissa) as i64 - 1)
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa * pow10((self.exponent - e) as u64);
        let b = &other.mantissa * pow10((other.exponent - e) as u64);
        (a, b, e)
    }
}

impl From<i64> for BigFloat {
    fn from(n: i64) -> Self {
        Self::from_parts(BigInt::from(n), 0, 0, false)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.mantissa == other.mantissa && self.exponent == other.exponent
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        Some(a.cmp(&b))
    }
}

impl Add for BigFloat {
    type Output = BigFloat;

    fn add(self, rhs: BigFloat) -> BigFloat {
        let digits = combine(self.digits, rhs.digits);
        let (a, b, e) = self.aligned(&rhs);
        Self::from_parts(a + b, e, digits, false)
    }
}

impl Sub for BigFloat {
    type Output = BigFloat;

    fn sub(self, rhs: BigFloat) -> BigFloat {
        self + (-rhs)
    }
}

impl Mul for BigFloat {
    type Output = BigFloat;

    fn mul(self, rhs: BigFloat) -> BigFloat {
        let digits = combine(self.digits, rhs.digits);
        Self::from_parts(
            self.mantissa * rhs.mantissa,
            self.exponent + rhs.exponent,
            digits,
            false,
        )
    }
}

impl Div for BigFloat {
    type Output = BigFloat;

    fn div(self, rhs: BigFloat) -> BigFloat {
        assert!(!rhs.mantissa.is_zero(), "BigFloat division by zero");
        let digits = match combine(self.digits, rhs.digits) {
            0 => DEFAULT_DIGITS,
            d => d,
        };
        Self::from_rational(&(self.to_rational() / rhs.to_rational()), digits)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;

    fn neg(self) -> BigFloat {
        BigFloat {
            mantissa: -self.mantissa,
            exponent: self.exponent,
            digits: self.digits,
        }
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        Self::zero_with_digits(0)
    }

    fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat::from(1)
    }
}

impl fmt::Display for BigFloat {
    /// Positional notation for moderate magnitudes, otherwise `d.ddde-N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(lead) = self.leading_exponent() else {
            return f.write_str("0");
        };
        let sign = if self.is_negative() { "-" } else { "" };
        let s = self.mantissa.magnitude().to_string();
        let len = s.len() as i64;
        if (-5..21).contains(&lead) {
            let body = if self.exponent >= 0 {
                format!("{s}{}", "0".repeat(self.exponent as usize))
            } else {
                let point = len + self.exponent;
                if point > 0 {
                    format!("{}.{}", &s[..point as usize], &s[point as usize..])
                } else {
                    format!("0.{}{s}", "0".repeat((-point) as usize))
                }
            };
            write!(f, "{sign}{body}")
        } else if len > 1 {
            write!(f, "{sign}{}.{}e{lead}", &s[..1], &s[1..])
        } else {
            write!(f, "{sign}{s}e{lead}")
        }
    }
}
