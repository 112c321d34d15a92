#![allow(dead_code)]

use cliffexp::kmatrix::{FieldKind, KMatrix};
use cliffexp::multivector::Multivector;
use cliffexp::parse::parse_matrix_literal;
use cliffexp::scalar::Rational;
use cliffexp::{Blade, RealPolynomial, Signature};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub const REAL_A: &str = "[[0,1,0,0],[-1,2,0,0],[-1,1,1,0],[-1,1,0,1]]";
pub const COMPLEX_A: &str = "[[1+2*I,1-3*I],[1-I,-2*I]]";
pub const QUATERNION_A: &str = "[[1+2*ii-3*kk, 2+ii-2*jj],[kk-3*ii, 2*kk-2*jj]]";

pub fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

pub fn real_a() -> KMatrix {
    parse_matrix_literal(REAL_A, FieldKind::Real).unwrap()
}

pub fn complex_a() -> KMatrix {
    parse_matrix_literal(COMPLEX_A, FieldKind::Complex).unwrap()
}

pub fn quaternion_a() -> KMatrix {
    parse_matrix_literal(QUATERNION_A, FieldKind::Quaternionic).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational in [-3, 3] with denominator up to 3.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let d: i64 = rng.gen_range(1..=3);
    let n: i64 = rng.gen_range(-3 * d..=3 * d);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse multivector with about `density` of the blades present.
pub fn random_multivector(rng: &mut impl Rng, s: Signature, density: f64) -> Multivector {
    let mut terms: Vec<(Blade, Rational)> = Vec::new();
    for b in s.blades() {
        if rng.gen_bool(density) {
            terms.push((b, small_rational(rng)));
        }
    }
    Multivector::from_terms(s, terms).unwrap()
}

pub fn random_blade(rng: &mut impl Rng, s: Signature) -> Blade {
    Blade::from_mask(rng.gen_range(0..s.algebra_dim() as u32))
}

/// Matrix over `like`'s ring and shape with random coordinates.
pub fn random_kmatrix(rng: &mut impl Rng, like: &KMatrix) -> KMatrix {
    let mut m = KMatrix::zeros(like.ring().clone(), like.rows(), like.cols());
    for i in 0..like.rows() {
        for j in 0..like.cols() {
            for c in m.get_mut(i, j).coords.iter_mut() {
                *c = small_rational(rng);
            }
        }
    }
    m
}

/// `sum c_k p^k` by Horner's rule in the algebra.
pub fn eval_at(poly: &RealPolynomial, p: &Multivector) -> Multivector {
    let s = p.signature();
    poly.coeffs().iter().rev().fold(Multivector::zero(s), |acc, c| {
        &(&acc * p) + &Multivector::scalar(s, c.clone())
    })
}

/// Every simple signature with `1 <= p + q <= n`.
pub fn simple_signatures(n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for total in 1..=n {
        for p in 0..=total {
            let s = sig(p, total - p);
            if s.is_simple() {
                out.push(s);
            }
        }
    }
    out
}
