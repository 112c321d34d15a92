//! Real minimal polynomials of multivectors and the exponential series
//! reduced modulo them.

use num_traits::{One, Signed, Zero};

use crate::bigfloat::BigFloat;
use crate::blade::Signature;
use crate::error::{Error, Result};
use crate::linalg::SpanReducer;
use crate::multivector::{Multivector, NormKind};
use crate::poly::RealPolynomial;
use crate::scalar::{int, Rational};

/// `[Id, p, p^2, ..., p^(d-1)]` for a minimal polynomial of degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerLadder {
    sig: Signature,
    powers: Vec<Multivector>,
}

impl PowerLadder {
    pub fn powers(&self) -> &[Multivector] {
        &self.powers
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    /// Substitutes `p` into a polynomial of degree below the ladder length.
    pub fn evaluate(&self, poly: &RealPolynomial) -> Result<Multivector> {
        if poly.coeffs().len() > self.powers.len() {
            return Err(Error::Dimension(format!(
                "polynomial of degree {} on a ladder of length {}",
                poly.coeffs().len() - 1,
                self.powers.len()
            )));
        }
        let mut out = Multivector::zero(self.sig);
        for (c, pk) in poly.coeffs().iter().zip(&self.powers) {
            if !c.is_zero() {
                out.add_scaled(pk, c)?;
            }
        }
        Ok(out)
    }
}

/// Monic real polynomial of least degree annihilating `p`, with the powers of
/// `p` below that degree.
pub fn climinpoly(p: &Multivector) -> (RealPolynomial, PowerLadder) {
    let sig = p.signature();
    let mut reducer = SpanReducer::new(sig.algebra_dim());
    let one = Multivector::one(sig);
    reducer.insert(&one.to_coordinates());
    let mut powers = vec![one];
    loop {
        let next = powers.last().expect("ladder starts at Id") * p;
        match reducer.try_insert(&next.to_coordinates()) {
            Ok(_) => powers.push(next),
            Err(a) => {
                // x^d - sum a_k x^k
                let mut coeffs: Vec<Rational> = a.into_iter().map(|c| -c).collect();
                coeffs.push(Rational::one());
                let poly = RealPolynomial::new(coeffs);
                return (poly, PowerLadder { sig, powers });
            }
        }
    }
}

/// Partial sums `sum_{k<=n} x^k / k!` kept modulo the minimal polynomial.
///
/// Each [`advance`](Self::advance) costs one shift-and-reduce and one
/// factorial update.
#[derive(Clone, Debug)]
pub struct ExpSeries {
    minpoly: RealPolynomial,
    ladder: PowerLadder,
    order: usize,
    power: RealPolynomial,
    factorial: Rational,
    sum: RealPolynomial,
}

impl ExpSeries {
    pub fn new(p: &Multivector) -> Self {
        let (minpoly, ladder) = climinpoly(p);
        Self::from_minpoly(minpoly, ladder)
    }

    pub fn from_minpoly(minpoly: RealPolynomial, ladder: PowerLadder) -> Self {
        let one = RealPolynomial::one();
        ExpSeries {
            minpoly,
            ladder,
            order: 0,
            power: one.clone(),
            factorial: Rational::one(),
            sum: one,
        }
    }

    pub fn minpoly(&self) -> &RealPolynomial {
        &self.minpoly
    }

    pub fn ladder(&self) -> &PowerLadder {
        &self.ladder
    }

    /// Highest power included so far.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The reduced partial sum as a polynomial in `x`.
    pub fn polynomial(&self) -> &RealPolynomial {
        &self.sum
    }

    pub fn advance(&mut self) {
        self.order += 1;
        self.power = self.power.shift_mod(&self.minpoly);
        self.factorial *= int(self.order as i64);
        let term = self.power.scale(&(Rational::one() / self.factorial.clone()));
        self.sum = &self.sum + &term;
    }

    pub fn value(&self) -> Multivector {
        self.ladder
            .evaluate(&self.sum)
            .expect("reduced sum fits the ladder")
    }
}

/// `sum_{k=0}^{n} p^k / k!` computed modulo the minimal polynomial of `p`.
pub fn sexp(p: &Multivector, n: usize) -> Multivector {
    let mut s = ExpSeries::new(p);
    for _ in 0..n {
        s.advance();
    }
    s.value()
}

/// `[sexp(p,1), ..., sexp(p,n)]`, sharing one minimal polynomial.
pub fn sexp_sequence(p: &Multivector, n: usize) -> Vec<Multivector> {
    let mut s = ExpSeries::new(p);
    (0..n)
        .map(|_| {
            s.advance();
            s.value()
        })
        .collect()
}

pub const DEFAULT_MAX_N: usize = 64;

/// `10^-19`.
pub fn default_eps() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 19))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Converged {
    pub value: Multivector,
    pub n_used: usize,
    /// Infinity norm of the last increment.
    pub last_step: Rational,
}

/// Sums the series until an increment has infinity norm below `eps`.
pub fn exp_converged(p: &Multivector, eps: &Rational, max_n: usize) -> Result<Converged> {
    if !eps.is_positive() {
        return Err(Error::Unsupported("eps must be positive".into()));
    }
    let mut s = ExpSeries::new(p);
    let mut prev = s.value();
    let mut last_step = Rational::zero();
    for n in 1..=max_n {
        s.advance();
        let value = s.value();
        last_step = (&value - &prev).coeff_norm(NormKind::Inf);
        if last_step < *eps {
            return Ok(Converged {
                value,
                n_used: n,
                last_step,
            });
        }
        prev = value;
    }
    Err(Error::NotConverged {
        max_n,
        last_step: BigFloat::from_rational(&last_step, 20).to_string(),
    })
}

/// Per-blade convergence estimate over a sequence of partial sums: for each
/// blade of the last element, the smallest change between consecutive sums,
/// then the largest of those.
pub fn cross_term_error(seq: &[Multivector]) -> Rational {
    cross_term_with(seq, |a, b| (a - b).abs())
}

/// [`cross_term_error`] with every coefficient first rounded to `digits`
/// significant digits and differences taken in that arithmetic.
pub fn cross_term_error_float(seq: &[Multivector], digits: u32) -> BigFloat {
    let floats: Vec<Multivector<BigFloat>> = seq.iter().map(|m| m.to_float(digits)).collect();
    let Some(last) = floats.last() else {
        return BigFloat::zero_with_digits(digits);
    };
    let mut worst = BigFloat::zero_with_digits(digits);
    for (b, _) in last.terms() {
        let col: Vec<BigFloat> = floats.iter().map(|m| m.coeff(b)).collect();
        let best = col
            .windows(2)
            .map(|w| (w[1].clone() - w[0].clone()).abs())
            .reduce(|x, y| if y < x { y } else { x });
        if let Some(best) = best {
            if best > worst {
                worst = best;
            }
        }
    }
    worst
}

fn cross_term_with(seq: &[Multivector], diff: impl Fn(&Rational, &Rational) -> Rational) -> Rational {
    let Some(last) = seq.last() else {
        return Rational::zero();
    };
    let mut worst = Rational::zero();
    for (b, _) in last.terms() {
        let col: Vec<Rational> = seq.iter().map(|m| m.coeff(b)).collect();
        if let Some(best) = col.windows(2).map(|w| diff(&w[1], &w[0])).min() {
            worst = worst.max(best);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Blade;
    use crate::scalar::ratio;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn minpoly_of_scalars_and_zero() {
        let s = sig(2, 0);
        let (m, ladder) = climinpoly(&Multivector::zero(s));
        assert_eq!(m, RealPolynomial::new(vec![int(0), int(1)]));
        assert_eq!(ladder.len(), 1);
        let (m, _) = climinpoly(&Multivector::scalar(s, int(3)));
        assert_eq!(m, RealPolynomial::new(vec![int(-3), int(1)]));
    }

    #[test]
    fn minpoly_of_generator() {
        let s = sig(1, 1);
        let (m, _) = climinpoly(&Multivector::generator(s, 2));
        assert_eq!(m.to_string(), "x^2 + 1");
        let (m, _) = climinpoly(&Multivector::generator(s, 1));
        assert_eq!(m.to_string(), "x^2 - 1");
    }

    #[test]
    fn exp_of_zero_and_identity() {
        let s = sig(3, 0);
        let c = exp_converged(&Multivector::zero(s), &default_eps(), DEFAULT_MAX_N).unwrap();
        assert_eq!(c.value, Multivector::one(s));
        assert_eq!(c.n_used, 1);
        assert!(c.last_step.is_zero());
        let c = exp_converged(&Multivector::one(s), &default_eps(), DEFAULT_MAX_N).unwrap();
        assert_eq!(
            BigFloat::from_rational(&c.value.coeff(Blade::ID), 20).to_string(),
            "2.7182818284590452354"
        );
    }

    #[test]
    fn not_converged_reports_step() {
        let s = sig(1, 0);
        let p = Multivector::scalar(s, int(50));
        let err = exp_converged(&p, &default_eps(), 10).unwrap_err();
        assert!(matches!(err, Error::NotConverged { max_n: 10, .. }));
        assert!(exp_converged(&p, &int(0), 10).is_err());
    }

    #[test]
    fn rotation_generator_series() {
        // e12 squares to -1, so the series approaches cos 1 + sin 1 e12.
        let s = sig(2, 0);
        let p = Multivector::blade(s, Blade::from_mask(0b11));
        let v = sexp(&p, 4);
        assert_eq!(v.coeff(Blade::ID), ratio(13, 24));
        assert_eq!(v.coeff(Blade::from_mask(0b11)), ratio(5, 6));
    }

    #[test]
    fn cross_term_error_picks_smallest_change_per_blade() {
        let s = sig(1, 0);
        let e1 = Blade::from_mask(1);
        let mk = |a: i64, b: i64| {
            Multivector::from_terms(s, [(Blade::ID, int(a)), (e1, int(b))]).unwrap()
        };
        let seq = [mk(0, 0), mk(5, 1), mk(6, 4)];
        // Id changes 5 then 1, e1 changes 1 then 3.
        assert_eq!(cross_term_error(&seq), int(1));
        assert_eq!(cross_term_error(&seq[..1]), int(0));
        assert_eq!(cross_term_error_float(&seq, 20).to_string(), "1");
    }
}
