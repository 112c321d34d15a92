//! The isomorphism between `K(n)` and a simple Cl(p,q), in both directions.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::blade::{Blade, Signature};
use crate::error::{Error, Result};
use crate::kmatrix::KMatrix;
use crate::linalg::SpanReducer;
use crate::multivector::Multivector;
use crate::scalar::Rational;
use crate::structure::{analyze, AlgebraData, SpinorBasis};

/// Matrices `m[i] = gamma(blade_i)` for every blade in canonical order,
/// plus an exact solver for the inverse map.
#[derive(Debug)]
pub struct ReprTable {
    data: AlgebraData,
    basis: SpinorBasis,
    blades: Vec<Blade>,
    index: HashMap<Blade, usize>,
    matrices: Vec<KMatrix>,
    solver: SpanReducer<Rational>,
}

impl ReprTable {
    pub fn new(sig: Signature) -> Result<Self> {
        let (data, basis) = analyze(sig)?;
        let blades = sig.blades();
        let index = blades.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let matrices = blades
            .iter()
            .map(|b| basis.mat_k_repr(&Multivector::blade(sig, *b)))
            .collect::<Result<Vec<_>>>()?;
        let n = basis.dim();
        let width = n * n * basis.ring().dim();
        if width != blades.len() {
            return Err(Error::Internal(format!(
                "K({n}) has real dimension {width} but {sig} has {}",
                blades.len()
            )));
        }
        let mut solver = SpanReducer::new(width);
        for (b, m) in blades.iter().zip(&matrices) {
            if !solver.insert(&m.flat_coordinates()) {
                return Err(Error::Internal(format!(
                    "representation of {b} is dependent on earlier blades"
                )));
            }
        }
        Ok(ReprTable {
            data,
            basis,
            blades,
            index,
            matrices,
            solver,
        })
    }

    pub fn signature(&self) -> Signature {
        self.data.signature
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    pub fn basis(&self) -> &SpinorBasis {
        &self.basis
    }

    /// Blades in the order of [`Self::matrices`].
    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn matrices(&self) -> &[KMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, b: Blade) -> Option<&KMatrix> {
        self.index.get(&b).map(|&i| &self.matrices[i])
    }

    /// Spinor dimension, i.e. the size of the matrices.
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Clifford image of a `K`-matrix: the unique `p` with `unphi(p) = a`,
    /// solved exactly from `a = sum_j p_j m[j]` in real coordinates.
    ///
    /// Entry coordinates are read against this algebra's `K` generators
    /// (`I` or `ii, jj, kk` become the non-identity generators in order).
    pub fn phi(&self, a: &KMatrix) -> Result<Multivector> {
        let n = self.dim();
        if a.rows() != n || a.cols() != n {
            return Err(Error::Dimension(format!(
                "{}x{} matrix, but {} needs {n}x{n}",
                a.rows(),
                a.cols(),
                self.signature()
            )));
        }
        let ring = self.basis.ring();
        if a.ring().kind() != ring.kind() {
            return Err(Error::RingMismatch(format!(
                "{} entries, but {} represents {} matrices",
                a.ring().kind(),
                self.signature(),
                ring.kind()
            )));
        }
        let coords = self
            .solver
            .express(&a.flat_coordinates())
            .ok_or_else(|| Error::Inconsistent("matrix is outside the representation".into()))?;
        Multivector::from_terms(self.signature(), self.blades.iter().copied().zip(coords))
    }

    /// Matrix of a multivector: `sum_i coeff(x, blade_i) m[i]`.
    pub fn unphi(&self, x: &Multivector) -> Result<KMatrix> {
        if x.signature() != self.signature() {
            return Err(Error::ContextMismatch {
                left: x.signature().to_string(),
                right: self.signature().to_string(),
            });
        }
        let mut out = KMatrix::zeros(self.basis.ring().clone(), self.dim(), self.dim());
        for (b, c) in x.terms() {
            let m = &self.matrices[self.index[&b]];
            out = out.checked_add(&m.scale(c))?;
        }
        Ok(out)
    }
}

/// Cl(p,q) with its representation table built on first use.
#[derive(Debug)]
pub struct Context {
    sig: Signature,
    table: OnceLock<Result<Arc<ReprTable>>>,
}

impl Context {
    pub fn new(sig: Signature) -> Self {
        Context {
            sig,
            table: OnceLock::new(),
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn table(&self) -> Result<Arc<ReprTable>> {
        self.table
            .get_or_init(|| ReprTable::new(self.sig).map(Arc::new))
            .clone()
    }

    pub fn data(&self) -> Result<AlgebraData> {
        self.table().map(|t| t.data().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn identity_maps_to_identity() {
        let sig = Signature::new(3, 0).unwrap();
        let table = ReprTable::new(sig).unwrap();
        let id = table.unphi(&Multivector::one(sig)).unwrap();
        assert_eq!(id, KMatrix::identity(table.basis().ring().clone(), 2));
        assert_eq!(table.matrices()[0], id);
        assert_eq!(table.phi(&id).unwrap(), Multivector::one(sig));
    }

    #[test]
    fn wrong_shapes_and_kinds_are_rejected() {
        let table = ReprTable::new(Signature::new(3, 1).unwrap()).unwrap();
        let small = KMatrix::from_real_rows(vec![vec![int(1)]]).unwrap();
        assert!(matches!(table.phi(&small), Err(Error::Dimension(_))));
        let c = ReprTable::new(Signature::new(3, 0).unwrap()).unwrap();
        let real2 = KMatrix::from_real_rows(vec![vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
        assert!(matches!(c.phi(&real2), Err(Error::RingMismatch(_))));
        let other = Multivector::<Rational>::one(Signature::new(3, 0).unwrap());
        assert!(table.unphi(&other).is_err());
    }

    #[test]
    fn semisimple_context_reports_error() {
        let ctx = Context::new(Signature::new(2, 1).unwrap());
        assert!(matches!(ctx.table(), Err(Error::Semisimple { .. })));
    }

    #[test]
    fn context_caches_table() {
        let ctx = Context::new(Signature::new(1, 3).unwrap());
        let a = ctx.table().unwrap();
        let b = ctx.table().unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
