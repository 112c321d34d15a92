//! Exact incremental Gaussian elimination.

use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Row<S> {
    pivot: usize,
    vec: Vec<S>,
    /// `vec = sum_j combo[j] * basis[j]` over the vectors inserted so far.
    combo: Vec<S>,
}

/// Row-echelon basis of a growing set of vectors, remembering how each
/// echelon row was formed so that any vector in the span can be expressed in
/// terms of the inserted vectors.
#[derive(Clone, Debug)]
pub struct SpanReducer<S> {
    width: usize,
    rows: Vec<Row<S>>,
}

impl<S: Scalar> SpanReducer<S> {
    pub fn new(width: usize) -> Self {
        SpanReducer {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of (independent) vectors inserted.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[S]) -> (Vec<S>, Vec<S>) {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut residual = v.to_vec();
        let mut coords = vec![S::zero(); self.rows.len()];
        for row in &self.rows {
            let x = &residual[row.pivot];
            if x.is_zero() {
                continue;
            }
            let factor = x.clone() / row.vec[row.pivot].clone();
            for (r, a) in residual.iter_mut().zip(&row.vec).skip(row.pivot) {
                if !a.is_zero() {
                    *r = r.clone() - factor.clone() * a.clone();
                }
            }
            for (c, a) in coords.iter_mut().zip(&row.combo) {
                if !a.is_zero() {
                    *c = c.clone() + factor.clone() * a.clone();
                }
            }
        }
        (residual, coords)
    }

    /// Coefficients `c` with `v = sum c[j] * basis[j]`, or `None` if `v` is
    /// outside the span.
    pub fn express(&self, v: &[S]) -> Option<Vec<S>> {
        let (residual, coords) = self.reduce(v);
        residual.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.express(v).is_some()
    }

    /// Inserts `v` if it is independent of the current basis.
    ///
    /// Returns `Err(coords)` with its expansion when it is already in the span.
    pub fn try_insert(&mut self, v: &[S]) -> Result<usize, Vec<S>> {
        let (residual, coords) = self.reduce(v);
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return Err(coords);
        };
        let k = self.rows.len();
        let mut combo: Vec<S> = coords.into_iter().map(|c| -c).collect();
        combo.push(S::one());
        for row in &mut self.rows {
            row.combo.push(S::zero());
        }
        self.rows.push(Row {
            pivot,
            vec: residual,
            combo,
        });
        Ok(k)
    }

    /// Inserts `v` if independent; reports whether it was added.
    pub fn insert(&mut self, v: &[S]) -> bool {
        self.try_insert(v).is_ok()
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut r = SpanReducer::new(first.len());
    for v in vectors {
        r.insert(v);
    }
    r.rank()
}
