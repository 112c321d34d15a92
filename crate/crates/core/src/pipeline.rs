//! Matrix exponential through the Clifford algebra, end to end.

use crate::bigfloat::BigFloat;
use crate::error::Result;
use crate::kmatrix::KMatrix;
use crate::multivector::Multivector;
use crate::poly::RealPolynomial;
use crate::reference::{matrix_1norm, reference_expm};
use crate::repr::ReprTable;
use crate::scalar::Rational;
use crate::series::{exp_converged, ExpSeries};

/// When to stop summing the series.
#[derive(Clone, Debug, PartialEq)]
pub enum Stop {
    /// Include powers up to and including this one.
    Order(usize),
    /// Stop once an increment has infinity norm below `eps`.
    Tolerance { eps: Rational, max_n: usize },
}

#[derive(Clone, Debug)]
pub struct CliffordExp {
    /// `phi(A)`.
    pub image: Multivector,
    pub minpoly: RealPolynomial,
    /// The partial sum in the algebra.
    pub value: Multivector,
    /// Highest power of the image included.
    pub order: usize,
    /// Infinity norm of the last increment, for [`Stop::Tolerance`].
    pub last_step: Option<Rational>,
    /// `unphi(value)`, exact.
    pub matrix: KMatrix,
}

/// `exp(A)` as `unphi(sexp(phi(A)))`.
pub fn clifford_expm(table: &ReprTable, a: &KMatrix, stop: &Stop) -> Result<CliffordExp> {
    let image = table.phi(a)?;
    let (minpoly, value, order, last_step) = match stop {
        Stop::Order(n) => {
            let mut s = ExpSeries::new(&image);
            for _ in 0..*n {
                s.advance();
            }
            (s.minpoly().clone(), s.value(), *n, None)
        }
        Stop::Tolerance { eps, max_n } => {
            let c = exp_converged(&image, eps, *max_n)?;
            let (minpoly, _) = crate::series::climinpoly(&image);
            (minpoly, c.value, c.n_used, Some(c.last_step))
        }
    };
    let matrix = table.unphi(&value)?;
    Ok(CliffordExp {
        image,
        minpoly,
        value,
        order,
        last_step,
        matrix,
    })
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub exp: CliffordExp,
    /// The Clifford result rounded to `digits`.
    pub float: KMatrix<BigFloat>,
    pub reference: KMatrix<BigFloat>,
    /// 1-norm of `reference - float`, in `digits`-digit arithmetic.
    pub norm: BigFloat,
}

/// Runs [`clifford_expm`] and compares against [`reference_expm`].
pub fn verify(table: &ReprTable, a: &KMatrix, stop: &Stop, digits: u32) -> Result<Verification> {
    let exp = clifford_expm(table, a, stop)?;
    let reference = reference_expm(a, digits)?;
    let float = exp
        .matrix
        .to_float(digits)
        .with_ring(reference.ring().clone())?;
    let norm = matrix_1norm(&reference.checked_sub(&float)?);
    Ok(Verification {
        exp,
        float,
        reference,
        norm,
    })
}
