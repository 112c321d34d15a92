//! The division ring `K = f Cl f` and matrices with entries in it.
//!
//! A [`KScalar`] is a coordinate vector over the ring's unit basis
//! (`1`; `1, I`; or `1, ii, jj, kk`). Products of units come from a table
//! computed once from the Clifford product, so quaternionic entries
//! multiply noncommutatively and matrix products keep left-to-right order.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::linalg::SpanReducer;
use crate::multivector::{CoefficientFormat, Multivector};
use crate::scalar::{BigFloat, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Real,
    Complex,
    Quaternionic,
}

impl FieldKind {
    /// Real dimension of the ring.
    pub fn dim(&self) -> usize {
        match self {
            FieldKind::Real => 1,
            FieldKind::Complex => 2,
            FieldKind::Quaternionic => 4,
        }
    }

    /// Names used for the units in entry text.
    pub fn unit_names(&self) -> &'static [&'static str] {
        match self {
            FieldKind::Real => &["1"],
            FieldKind::Complex => &["1", "I"],
            FieldKind::Quaternionic => &["1", "ii", "jj", "kk"],
        }
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        match dim {
            1 => Some(FieldKind::Real),
            2 => Some(FieldKind::Complex),
            4 => Some(FieldKind::Quaternionic),
            _ => None,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Real => "real",
            FieldKind::Complex => "complex",
            FieldKind::Quaternionic => "quaternionic",
        })
    }
}

impl std::str::FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "real" | "r" => Ok(FieldKind::Real),
            "complex" | "c" => Ok(FieldKind::Complex),
            "quaternion" | "quaternionic" | "h" => Ok(FieldKind::Quaternionic),
            other => Err(Error::parse(0, format!("unknown entry kind '{other}'"))),
        }
    }
}

/// Multiplication table of a real division algebra of dimension 1, 2 or 4
/// over a unit basis with `units[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionRing {
    kind: FieldKind,
    /// `table[a * dim + b] = (s, c)` means `unit_a * unit_b = s * unit_c`.
    table: Vec<(i8, usize)>,
}

impl DivisionRing {
    pub fn real() -> Self {
        DivisionRing {
            kind: FieldKind::Real,
            table: vec![(1, 0)],
        }
    }

    /// `I * I = -1`.
    pub fn complex() -> Self {
        DivisionRing {
            kind: FieldKind::Complex,
            table: vec![(1, 0), (1, 1), (1, 1), (-1, 0)],
        }
    }

    /// Hamilton's quaternions: `ii jj = kk`, `jj kk = ii`, `kk ii = jj`.
    pub fn quaternion() -> Self {
        #[rustfmt::skip]
        let table = vec![
            (1, 0), (1, 1), (1, 2), (1, 3),
            (1, 1), (-1, 0), (1, 3), (-1, 2),
            (1, 2), (-1, 3), (-1, 0), (1, 1),
            (1, 3), (1, 2), (-1, 1), (-1, 0),
        ];
        DivisionRing {
            kind: FieldKind::Quaternionic,
            table,
        }
    }

    pub fn standard(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Real => Self::real(),
            FieldKind::Complex => Self::complex(),
            FieldKind::Quaternionic => Self::quaternion(),
        }
    }

    /// Ring spanned by `g f` for the given blade generators, with the
    /// product read off from `(g_a f)(g_b f) = g_a g_b f`.
    pub fn from_generators(f: &Multivector, generators: &[Blade]) -> Result<Self> {
        let sig = f.signature();
        let kind = FieldKind::from_dim(generators.len()).ok_or_else(|| {
            Error::Internal(format!("K basis has {} elements", generators.len()))
        })?;
        if generators.first() != Some(&Blade::ID) {
            return Err(Error::Internal("K basis must start with Id".into()));
        }
        let elements: Vec<Multivector> = generators
            .iter()
            .map(|g| Multivector::blade(sig, *g) * f.clone())
            .collect();
        let mut span = SpanReducer::new(sig.algebra_dim());
        for e in &elements {
            if !span.insert(&e.to_coordinates()) {
                return Err(Error::Internal("K basis is dependent".into()));
            }
        }
        let dim = generators.len();
        let mut table = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let prod = &elements[a] * &elements[b];
                let coords = span
                    .express(&prod.to_coordinates())
                    .ok_or_else(|| Error::Internal("K is not closed under the product".into()))?;
                table.push(unit_entry(&coords)?);
            }
        }
        Ok(DivisionRing { kind, table })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// `unit_a * unit_b` as `(sign, index)`.
    pub fn unit_product(&self, a: usize, b: usize) -> (i8, usize) {
        self.table[a * self.dim() + b]
    }

    pub fn mul<S: Scalar>(&self, a: &[S], b: &[S]) -> Vec<S> {
        let d = self.dim();
        let mut out = vec![S::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (s, c) = self.table[i * d + j];
                let v = x.clone() * y.clone();
                out[c] = if s < 0 {
                    out[c].clone() - v
                } else {
                    out[c].clone() + v
                };
            }
        }
        out
    }

    /// Real matrix of left multiplication by `a`: `L(a) coords(b) = coords(a b)`.
    pub fn left_regular<S: Scalar>(&self, a: &[S]) -> Vec<Vec<S>> {
        let d = self.dim();
        let mut m = vec![vec![S::zero(); d]; d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..d {
                let (s, c) = self.table[i * d + j];
                m[c][j] = if s < 0 {
                    m[c][j].clone() - x.clone()
                } else {
                    m[c][j].clone() + x.clone()
                };
            }
        }
        m
    }
}

fn unit_entry(coords: &[Rational]) -> Result<(i8, usize)> {
    let nonzero: Vec<(usize, &Rational)> =
        coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    match nonzero.as_slice() {
        [(i, c)] if c.is_one() => Ok((1, *i)),
        [(i, c)] if (-(*c).clone()).is_one() => Ok((-1, *i)),
        _ => Err(Error::Internal("product of K units is not a signed unit".into())),
    }
}

/// Element of `K` as real coordinates over the unit basis.
#[derive(Clone, Debug, PartialEq)]
pub struct KScalar<S = Rational> {
    pub coords: Vec<S>,
}

impl<S: Scalar> KScalar<S> {
    pub fn zero(dim: usize) -> Self {
        KScalar {
            coords: vec![S::zero(); dim],
        }
    }

    pub fn real(dim: usize, x: S) -> Self {
        let mut k = Self::zero(dim);
        k.coords[0] = x;
        k
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl<S: Scalar + CoefficientFormat> KScalar<S> {
    /// Text such as `1 - 3*I` or `-3*ii + kk`.
    pub fn display_with(&self, names: &[&str]) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_coeff();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (i, c.magnitude_text()) {
                (0, Some(t)) => out.push_str(&t),
                (0, None) => out.push('1'),
                (_, Some(t)) => {
                    out.push_str(&t);
                    out.push('*');
                    out.push_str(names[i]);
                }
                (_, None) => out.push_str(names[i]),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Dense matrix over a [`DivisionRing`], stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct KMatrix<S = Rational> {
    ring: Arc<DivisionRing>,
    rows: usize,
    cols: usize,
    data: Vec<KScalar<S>>,
}

impl<S: Scalar> KMatrix<S> {
    pub fn zeros(ring: Arc<DivisionRing>, rows: usize, cols: usize) -> Self {
        let d = ring.dim();
        KMatrix {
            ring,
            rows,
            cols,
            data: vec![KScalar::zero(d); rows * cols],
        }
    }

    pub fn identity(ring: Arc<DivisionRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        let d = m.ring.dim();
        for i in 0..n {
            m.data[i * n + i] = KScalar::real(d, S::one());
        }
        m
    }

    pub fn from_entries(
        ring: Arc<DivisionRing>,
        rows: usize,
        cols: usize,
        entries: Vec<KScalar<S>>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.coords.len() != ring.dim()) {
            return Err(Error::RingMismatch(format!(
                "entries must have {} coordinates",
                ring.dim()
            )));
        }
        Ok(KMatrix {
            ring,
            rows,
            cols,
            data: entries,
        })
    }

    /// Real matrix from rows of scalars.
    pub fn from_real_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .into_iter()
            .flatten()
            .map(|x| KScalar { coords: vec![x] })
            .collect();
        Self::from_entries(Arc::new(DivisionRing::real()), r, c, entries)
    }

    pub fn ring(&self) -> &Arc<DivisionRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &KScalar<S> {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut KScalar<S> {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[KScalar<S>] {
        &self.data
    }

    /// Same coordinates read in another ring of the same dimension.
    pub fn with_ring(&self, ring: Arc<DivisionRing>) -> Result<Self> {
        if ring.dim() != self.ring.dim() {
            return Err(Error::RingMismatch(format!(
                "cannot reinterpret {} entries as {}",
                self.ring.kind(),
                ring.kind()
            )));
        }
        Ok(KMatrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        })
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} and {} entries",
                self.ring.kind(),
                other.ring.kind()
            )));
        }
        Ok(())
    }

    /// Matrix product; entry products keep left-to-right order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let d = self.ring.dim();
        let mut out = Self::zeros(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = vec![S::zero(); d];
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    for (x, y) in acc.iter_mut().zip(self.ring.mul(&a.coords, &b.coords)) {
                        *x = x.clone() + y;
                    }
                }
                out.get_mut(i, j).coords = acc;
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Result<Self> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| KScalar {
                coords: a
                    .coords
                    .iter()
                    .zip(&b.coords)
                    .map(|(x, y)| f(x.clone(), y.clone()))
                    .collect(),
            })
            .collect();
        Ok(KMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Multiplies every entry by a real scalar.
    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> KMatrix<T> {
        KMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|e| KScalar {
                    coords: e.coords.iter().map(&f).collect(),
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// All real coordinates: row-major over entries, unit index fastest.
    pub fn flat_coordinates(&self) -> Vec<S> {
        self.data
            .iter()
            .flat_map(|e| e.coords.iter().cloned())
            .collect()
    }

    /// Real block matrix whose `(i, j)` block is the left-regular matrix of
    /// entry `(i, j)`. This is a ring homomorphism `K(n) -> R(dn)`.
    pub fn to_real_embedding(&self) -> Vec<Vec<S>> {
        let d = self.ring.dim();
        let mut out = vec![vec![S::zero(); self.cols * d]; self.rows * d];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.ring.left_regular(&self.get(i, j).coords);
                for (a, row) in block.into_iter().enumerate() {
                    for (b, x) in row.into_iter().enumerate() {
                        out[i * d + a][j * d + b] = x;
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`Self::to_real_embedding`]: reads the first column of
    /// each block, which is the coordinate vector of the entry.
    pub fn from_real_embedding(
        ring: Arc<DivisionRing>,
        rows: usize,
        cols: usize,
        real: &[Vec<S>],
    ) -> Result<Self> {
        let d = ring.dim();
        if real.len() != rows * d || real.iter().any(|r| r.len() != cols * d) {
            return Err(Error::Dimension("embedding has the wrong shape".into()));
        }
        let mut out = Self::zeros(ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.get_mut(i, j).coords = (0..d).map(|a| real[i * d + a][j * d].clone()).collect();
            }
        }
        Ok(out)
    }
}

impl KMatrix<Rational> {
    pub fn to_float(&self, digits: u32) -> KMatrix<BigFloat> {
        self.map(|c| BigFloat::from_rational(c, digits))
    }
}

impl<S: Scalar + CoefficientFormat> fmt::Display for KMatrix<S> {
    /// One bracketed row per line: `[1 + 2*I, 1 - 3*I]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ring.kind().unit_names();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).display_with(names))
                .collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Vec<Rational> {
        vec![int(a), int(b), int(c), int(d)]
    }

    #[test]
    fn quaternion_units() {
        let h = DivisionRing::quaternion();
        let (i, j, k) = (q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1));
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &i), q(0, 0, 0, -1));
        assert_eq!(h.mul(&j, &k), i);
        assert_eq!(h.mul(&k, &i), j);
        for u in [&i, &j, &k] {
            assert_eq!(h.mul(u, u), q(-1, 0, 0, 0));
        }
    }

    #[test]
    fn left_regular_is_multiplicative() {
        let h = DivisionRing::quaternion();
        let a = q(1, 2, -1, 3);
        let b = q(0, -2, 5, 1);
        let lab = h.left_regular(&h.mul(&a, &b));
        let la = h.left_regular(&a);
        let lb = h.left_regular(&b);
        let mut prod = vec![vec![int(0); 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                for k in 0..4 {
                    prod[r][c] = prod[r][c].clone() + la[r][k].clone() * lb[k][c].clone();
                }
            }
        }
        assert_eq!(lab, prod);
    }

    #[test]
    fn product_against_identity_and_dimension_errors() {
        let a = KMatrix::from_real_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]).unwrap();
        let id = KMatrix::identity(a.ring().clone(), 2);
        assert_eq!(a.mul(&id).unwrap(), a);
        let row = KMatrix::from_real_rows(vec![vec![int(1), int(2), int(3)]]).unwrap();
        assert!(matches!(a.mul(&row), Err(Error::Dimension(_))));
        let c = KMatrix::<Rational>::identity(Arc::new(DivisionRing::complex()), 2);
        assert!(matches!(a.mul(&c), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn entry_text() {
        let names = FieldKind::Quaternionic.unit_names();
        let k = KScalar { coords: q(0, -3, 0, 1) };
        assert_eq!(k.display_with(names), "-3*ii + kk");
        let c = KScalar { coords: vec![int(1), int(-3)] };
        assert_eq!(c.display_with(FieldKind::Complex.unit_names()), "1 - 3*I");
    }
}
