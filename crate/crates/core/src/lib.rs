//! Exact matrix exponentials over the reals, complex numbers and quaternions,
//! computed inside an isomorphic Clifford algebra Cl(p,q).
//!
//! A square `K`-matrix is mapped to a multivector with [`ReprTable::phi`], its
//! minimal polynomial is found in the algebra, the exponential series is
//! reduced modulo that polynomial, and the result is mapped back with
//! [`ReprTable::unphi`].

pub mod bigfloat;
pub mod blade;
pub mod error;
pub mod kmatrix;
pub mod linalg;
pub mod multivector;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod reference;
pub mod repr;
pub mod scalar;
pub mod series;
pub mod structure;

pub use bigfloat::BigFloat;
pub use blade::{blade_product, Blade, Signature};
pub use error::{Error, Result};
pub use kmatrix::{DivisionRing, FieldKind, KMatrix, KScalar};
pub use multivector::{Multivector, NormKind};
pub use poly::{poly_powmod, ComplexPolynomial, Polynomial, RealPolynomial};
pub use repr::{Context, ReprTable};
pub use scalar::{ComplexRational, Rational, Scalar};
pub use structure::{clidata, AlgebraData};
pub use parse::{parse_k_entry, parse_matrix, parse_matrix_literal, parse_multivector, MatrixDocument};
pub use pipeline::{clifford_expm, verify, CliffordExp, Stop, Verification};
pub use reference::{matrix_1norm, matrix_minpoly, reference_expm, MatrixMinpoly};
pub use series::{climinpoly, exp_converged, sexp, sexp_sequence, Converged, ExpSeries, PowerLadder};
