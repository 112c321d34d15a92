//! Matrix-side tools used to check the Clifford computations: norms, a
//! direct matrix exponential and minimal polynomials of real or complex
//! matrices.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::bigfloat::BigFloat;
use crate::error::{Error, Result};
use crate::kmatrix::{FieldKind, KMatrix, KScalar};
use crate::linalg::SpanReducer;
use crate::poly::{ComplexPolynomial, Polynomial, RealPolynomial};
use crate::scalar::{ComplexRational, Rational, Scalar};

/// Extra digits carried by [`reference_expm`] beyond the requested ones.
pub const GUARD_DIGITS: u32 = 10;

/// Euclidean norm of the coordinate vector.
pub fn entry_magnitude(x: &KScalar<BigFloat>) -> BigFloat {
    match x.coords.as_slice() {
        [a] => a.abs(),
        cs => {
            let sq = cs
                .iter()
                .fold(BigFloat::zero(), |acc, c| acc + c.clone() * c.clone());
            sq.sqrt().expect("sum of squares is non-negative")
        }
    }
}

/// Largest column sum of entry magnitudes.
pub fn matrix_1norm(a: &KMatrix<BigFloat>) -> BigFloat {
    (0..a.cols())
        .map(|j| {
            (0..a.rows()).fold(BigFloat::zero(), |acc, i| acc + entry_magnitude(a.get(i, j)))
        })
        .fold(BigFloat::zero(), |m, s| if s > m { s } else { m })
}

type Dense = Vec<Vec<BigFloat>>;

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![BigFloat::zero(); m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out[i].iter_mut().zip(&b[k]) {
                if !y.is_zero() {
                    *o = o.clone() + x.clone() * y.clone();
                }
            }
        }
    }
    out
}

fn max_abs(a: &Dense) -> BigFloat {
    a.iter()
        .flatten()
        .map(BigFloat::abs)
        .fold(BigFloat::zero(), |m, x| if x > m { x } else { m })
}

fn inf_norm(a: &Dense) -> BigFloat {
    a.iter()
        .map(|r| r.iter().fold(BigFloat::zero(), |acc, x| acc + x.abs()))
        .fold(BigFloat::zero(), |m, x| if x > m { x } else { m })
}

/// `exp(A)` by scaling and squaring around a Taylor polynomial, evaluated in
/// decimal floating point with [`GUARD_DIGITS`] extra digits and rounded to
/// `digits` at the end. Quaternionic matrices go through their real
/// left-regular embedding.
pub fn reference_expm(a: &KMatrix<Rational>, digits: u32) -> Result<KMatrix<BigFloat>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "exponential of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let digits = if digits == 0 { crate::bigfloat::DEFAULT_DIGITS } else { digits };
    let w = digits + GUARD_DIGITS;
    let real: Dense = a
        .to_real_embedding()
        .iter()
        .map(|r| r.iter().map(|x| BigFloat::from_rational(x, w)).collect())
        .collect();
    let n = real.len();

    // Scale until the norm is at most 1/2.
    let half = BigFloat::from_rational(&Rational::new(1.into(), 2.into()), w);
    let mut norm = inf_norm(&real);
    let mut s = 0u32;
    while norm > half {
        norm = norm * half.clone();
        s += 1;
    }
    let factor = BigFloat::from_rational(&Rational::new(1.into(), BigInt::from(2).pow(s)), w);
    let scaled: Dense = real
        .iter()
        .map(|r| r.iter().map(|x| x.clone() * factor.clone()).collect())
        .collect();

    let tol = BigFloat::from_rational(&Rational::new(1.into(), BigInt::from(10).pow(w + 2)), w);
    let mut sum: Dense = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigFloat::one().with_digits(w)
                    } else {
                        BigFloat::zero_with_digits(w)
                    }
                })
                .collect()
        })
        .collect();
    let mut term = sum.clone();
    for k in 1.. {
        let inv_k = BigFloat::from_rational(&Rational::new(1.into(), BigInt::from(k)), w);
        term = dense_mul(&term, &scaled)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * inv_k.clone()).collect())
            .collect();
        for (sr, tr) in sum.iter_mut().zip(&term) {
            for (x, t) in sr.iter_mut().zip(tr) {
                *x = x.clone() + t.clone();
            }
        }
        if max_abs(&term) < tol {
            break;
        }
    }
    for _ in 0..s {
        sum = dense_mul(&sum, &sum);
    }
    let rounded: Dense = sum
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.with_digits(digits)).collect())
        .collect();
    KMatrix::from_real_embedding(a.ring().clone(), a.rows(), a.cols(), &rounded)
}

/// Minimal polynomial of a matrix over its own (commutative) entry field.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixMinpoly {
    Real(RealPolynomial),
    Complex(ComplexPolynomial),
}

impl MatrixMinpoly {
    /// Complex form, for dividing real minimal polynomials.
    pub fn to_complex(&self) -> ComplexPolynomial {
        match self {
            MatrixMinpoly::Real(p) => p.to_complex(),
            MatrixMinpoly::Complex(p) => p.clone(),
        }
    }
}

impl fmt::Display for MatrixMinpoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixMinpoly::Real(p) => p.fmt(f),
            MatrixMinpoly::Complex(p) => p.fmt(f),
        }
    }
}

/// Monic minimal polynomial from the first linear dependence among
/// `I, A, A^2, ...`.
pub fn dense_minpoly<S: Scalar>(a: &[Vec<S>]) -> Polynomial<S> {
    let n = a.len();
    let flat = |m: &[Vec<S>]| m.iter().flatten().cloned().collect::<Vec<S>>();
    let mut reducer = SpanReducer::new(n * n);
    let mut power: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    loop {
        match reducer.try_insert(&flat(&power)) {
            Ok(_) => power = dense_mul_exact(&power, a),
            Err(c) => {
                let mut coeffs: Vec<S> = c.into_iter().map(|x| -x).collect();
                coeffs.push(S::one());
                return Polynomial::new(coeffs);
            }
        }
    }
}

fn dense_mul_exact<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(S::zero(), |acc, (x, br)| acc + x.clone() * br[j].clone())
                })
                .collect()
        })
        .collect()
}

/// Minimal polynomial of a real or complex matrix.
pub fn matrix_minpoly(a: &KMatrix<Rational>) -> Result<MatrixMinpoly> {
    if !a.is_square() {
        return Err(Error::Dimension("minimal polynomial of a non-square matrix".into()));
    }
    match a.ring().kind() {
        FieldKind::Real => {
            let m: Vec<Vec<Rational>> = (0..a.rows())
                .map(|i| (0..a.cols()).map(|j| a.get(i, j).coords[0].clone()).collect())
                .collect();
            Ok(MatrixMinpoly::Real(dense_minpoly(&m)))
        }
        FieldKind::Complex => {
            let m: Vec<Vec<ComplexRational>> = (0..a.rows())
                .map(|i| {
                    (0..a.cols())
                        .map(|j| {
                            let c = &a.get(i, j).coords;
                            Complex::new(c[0].clone(), c[1].clone())
                        })
                        .collect()
                })
                .collect();
            Ok(MatrixMinpoly::Complex(dense_minpoly(&m)))
        }
        FieldKind::Quaternionic => Err(Error::Unsupported(
            "minimal polynomials of quaternionic matrices".into(),
        )),
    }
}
