//! Structure of simple Clifford algebras: primitive idempotents, minimal
//! left ideals, the division ring `K = f Cl f`, spinor bases over `K` and
//! the spinor (left-regular) representation of multivectors.

use std::fmt;
use std::sync::Arc;

use crate::blade::{blade_product, Blade, Signature};
use crate::error::{Error, Result};
use crate::kmatrix::{DivisionRing, FieldKind, KMatrix};
use crate::linalg::SpanReducer;
use crate::multivector::Multivector;
use crate::scalar::{ratio, Rational};

const RADON_HURWITZ_BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];

/// Radon–Hurwitz number `r_i`, extended to all integers by `r_{i+8} = r_i + 4`.
pub fn radon_hurwitz(i: i64) -> i64 {
    RADON_HURWITZ_BASE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

fn require_simple(sig: Signature) -> Result<()> {
    if sig.is_simple() {
        Ok(())
    } else {
        Err(Error::Semisimple {
            p: sig.p(),
            q: sig.q(),
        })
    }
}

/// Division ring `f Cl f` by `(p - q) mod 8`.
pub fn field_kind(sig: Signature) -> Result<FieldKind> {
    require_simple(sig)?;
    Ok(match sig.difference().rem_euclid(8) {
        0 | 2 => FieldKind::Real,
        3 | 7 => FieldKind::Complex,
        4 | 6 => FieldKind::Quaternionic,
        _ => unreachable!("semisimple residues rejected above"),
    })
}

/// Number `k = q - r_{q-p}` of factors `(1 + e_T)/2` in a primitive idempotent.
pub fn idempotent_factor_count(sig: Signature) -> Result<usize> {
    require_simple(sig)?;
    let k = sig.q() as i64 - radon_hurwitz(sig.q() as i64 - sig.p() as i64);
    usize::try_from(k).map_err(|_| Error::Internal(format!("negative factor count for {sig}")))
}

/// Factor choices that reproduce the worked examples literally.
fn pinned_factors(sig: Signature) -> Option<Vec<Blade>> {
    let b = |idx: &[usize]| Blade::from_indices(idx).expect("valid pinned blade");
    match (sig.p(), sig.q()) {
        (3, 1) => Some(vec![b(&[1]), b(&[3, 4])]),
        (3, 0) => Some(vec![b(&[1])]),
        (1, 3) => Some(vec![b(&[1, 4])]),
        _ => None,
    }
}

fn independent_mask(basis: &[u32], mask: u32) -> bool {
    // Gaussian elimination over GF(2) on the blade masks.
    let mut reduced: Vec<u32> = Vec::new();
    for &m in basis.iter().chain(std::iter::once(&mask)) {
        let mut x = m;
        for &r in &reduced {
            x = x.min(x ^ r);
        }
        if x == 0 {
            return false;
        }
        reduced.push(x);
        reduced.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

fn search_factors(
    candidates: &[Blade],
    start: usize,
    k: usize,
    chosen: &mut Vec<Blade>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    for idx in start..candidates.len() {
        let c = candidates[idx];
        if !chosen.iter().all(|t| t.commutes_with(c)) {
            continue;
        }
        let masks: Vec<u32> = chosen.iter().map(|t| t.mask()).collect();
        if !independent_mask(&masks, c.mask()) {
            continue;
        }
        chosen.push(c);
        if search_factors(candidates, idx + 1, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The `k` commuting blades squaring to `+1` whose factors `(1 + e_T)/2`
/// form the primitive idempotent. The first such set in canonical order is
/// used, except for the pinned signatures (3,1), (3,0) and (1,3).
pub fn idempotent_factors(sig: Signature) -> Result<Vec<Blade>> {
    let k = idempotent_factor_count(sig)?;
    if let Some(fixed) = pinned_factors(sig) {
        return Ok(fixed);
    }
    let candidates: Vec<Blade> = sig
        .blades()
        .into_iter()
        .filter(|b| !b.is_id() && blade_product(*b, *b, sig).0 == 1)
        .collect();
    let mut chosen = Vec::with_capacity(k);
    if search_factors(&candidates, 0, k, &mut chosen) {
        Ok(chosen)
    } else {
        Err(Error::Internal(format!(
            "no commuting set of {k} blades squaring to 1 in {sig}"
        )))
    }
}

/// `(1 + e_T)/2` for each factor, multiplied out.
pub fn idempotent_from_factors(sig: Signature, factors: &[Blade]) -> Multivector {
    let half = ratio(1, 2);
    factors.iter().fold(Multivector::one(sig), |acc, t| {
        let factor = Multivector::scalar(sig, half.clone())
            + Multivector::blade(sig, *t).scale(&half);
        acc * factor
    })
}

/// Primitive idempotent of a simple Cl(p,q), all signs `+`.
pub fn primitive_idempotent(sig: Signature) -> Result<Multivector> {
    let factors = idempotent_factors(sig)?;
    Ok(idempotent_from_factors(sig, &factors))
}

/// Real basis `{g f}` of the left ideal `Cl f`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    pub elements: Vec<Multivector>,
    pub generators: Vec<Blade>,
}

/// Basis of `Cl f` from blades in canonical order, skipping any `b f` that is
/// a real combination of the earlier ones.
pub fn minimal_ideal_basis(f: &Multivector) -> Result<IdealBasis> {
    let sig = f.signature();
    if &(f * f) != f {
        return Err(Error::NotIdempotent);
    }
    let mut span = SpanReducer::new(sig.algebra_dim());
    let mut basis = IdealBasis {
        elements: Vec::new(),
        generators: Vec::new(),
    };
    for b in sig.blades() {
        let y = Multivector::blade(sig, b) * f.clone();
        if !y.is_zero() && span.insert(&y.to_coordinates()) {
            basis.elements.push(y);
            basis.generators.push(b);
        }
    }
    Ok(basis)
}

/// Basis `{f g f}` of `K = f Cl f` drawn from the ideal's generators.
pub fn k_field_basis(ideal: &IdealBasis, f: &Multivector) -> Result<IdealBasis> {
    let sig = f.signature();
    let mut span = SpanReducer::new(sig.algebra_dim());
    let mut basis = IdealBasis {
        elements: Vec::new(),
        generators: Vec::new(),
    };
    for g in &ideal.generators {
        let y = f * &(Multivector::blade(sig, *g) * f.clone());
        if !y.is_zero() && span.insert(&y.to_coordinates()) {
            basis.elements.push(y);
            basis.generators.push(*g);
        }
    }
    let expected = field_kind(sig)?;
    if basis.generators.len() != expected.dim() {
        return Err(Error::Internal(format!(
            "K has dimension {} in {sig}, expected {} for {expected}",
            basis.generators.len(),
            expected.dim()
        )));
    }
    Ok(basis)
}

/// Spinor space `S = Cl f` as a right `K`-module with basis `f_i = g_i f`.
#[derive(Clone, Debug)]
pub struct SpinorBasis {
    signature: Signature,
    idempotent: Multivector,
    elements: Vec<Multivector>,
    generators: Vec<Blade>,
    k_elements: Vec<Multivector>,
    k_generators: Vec<Blade>,
    ring: Arc<DivisionRing>,
    /// Real basis `f_j * kappa_l`, inserted with index `j * dim K + l`.
    real_span: SpanReducer<Rational>,
}

/// Picks, in order, the real-ideal generators `g` whose `g f` is not already
/// in the right `K`-span of the earlier picks.
pub fn spinor_k_basis(
    sb_generators: &[Blade],
    f: &Multivector,
    fb_generators: &[Blade],
) -> Result<SpinorBasis> {
    let sig = f.signature();
    let ring = Arc::new(DivisionRing::from_generators(f, fb_generators)?);
    let dk = fb_generators.len();
    if sb_generators.len() % dk != 0 {
        return Err(Error::Dimension(format!(
            "{} real spinor generators are not a multiple of dim K = {dk}",
            sb_generators.len()
        )));
    }
    let expected = sb_generators.len() / dk;
    let mut real_span = SpanReducer::new(sig.algebra_dim());
    let mut elements = Vec::new();
    let mut generators = Vec::new();
    for g in sb_generators {
        let fi = Multivector::blade(sig, *g) * f.clone();
        if real_span.contains(&fi.to_coordinates()) {
            continue;
        }
        for kg in fb_generators {
            let v = &fi * &Multivector::blade(sig, *kg);
            if !real_span.insert(&v.to_coordinates()) {
                return Err(Error::Internal(format!(
                    "spinor element {fi} is not K-independent"
                )));
            }
        }
        elements.push(fi);
        generators.push(*g);
    }
    if generators.len() != expected {
        return Err(Error::Dimension(format!(
            "found {} spinor generators over K, expected {expected}",
            generators.len()
        )));
    }
    let k_elements = fb_generators
        .iter()
        .map(|g| Multivector::blade(sig, *g) * f.clone())
        .collect();
    Ok(SpinorBasis {
        signature: sig,
        idempotent: f.clone(),
        elements,
        generators,
        k_elements,
        k_generators: fb_generators.to_vec(),
        ring,
        real_span,
    })
}

impl SpinorBasis {
    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn idempotent(&self) -> &Multivector {
        &self.idempotent
    }

    /// The spinor basis `f_1, ..., f_n` over `K`.
    pub fn elements(&self) -> &[Multivector] {
        &self.elements
    }

    /// Blades `g_i` with `f_i = g_i f`.
    pub fn generators(&self) -> &[Blade] {
        &self.generators
    }

    /// Basis `g f` of `K`.
    pub fn k_elements(&self) -> &[Multivector] {
        &self.k_elements
    }

    pub fn k_generators(&self) -> &[Blade] {
        &self.k_generators
    }

    pub fn ring(&self) -> &Arc<DivisionRing> {
        &self.ring
    }

    /// Spinor dimension `n` (size of the representing matrices).
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Matrix `gamma_x` of left multiplication by `x` on the spinor space:
    /// `x f_i = sum_j f_j gamma[j][i]`, with `K` acting on the right.
    pub fn mat_k_repr(&self, x: &Multivector) -> Result<KMatrix> {
        if x.signature() != self.signature {
            return Err(Error::ContextMismatch {
                left: x.signature().to_string(),
                right: self.signature.to_string(),
            });
        }
        let n = self.dim();
        let dk = self.ring.dim();
        let mut m = KMatrix::zeros(self.ring.clone(), n, n);
        for (i, fi) in self.elements.iter().enumerate() {
            let y = x * fi;
            let coords = self.real_span.express(&y.to_coordinates()).ok_or_else(|| {
                Error::Internal(format!("x f_{} left the spinor space", i + 1))
            })?;
            for j in 0..n {
                m.get_mut(j, i).coords = coords[j * dk..(j + 1) * dk].to_vec();
            }
        }
        Ok(m)
    }
}

/// Summary of a simple Clifford algebra: the seven-part listing
/// `[kind, n, simple, f, real S generators, K generators, K-basis generators]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraData {
    pub signature: Signature,
    pub field_kind: FieldKind,
    pub spinor_dim: usize,
    pub simple: bool,
    pub idempotent: Multivector,
    pub idempotent_factors: Vec<Blade>,
    pub real_spinor_generators: Vec<Blade>,
    pub k_generators: Vec<Blade>,
    pub k_spinor_generators: Vec<Blade>,
}

fn blade_list(blades: &[Blade]) -> String {
    let names: Vec<String> = blades.iter().map(|b| b.to_string()).collect();
    format!("[{}]", names.join(", "))
}

impl fmt::Display for AlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}, {}, {}]",
            self.field_kind,
            self.spinor_dim,
            if self.simple { "simple" } else { "semisimple" },
            self.idempotent,
            blade_list(&self.real_spinor_generators),
            blade_list(&self.k_generators),
            blade_list(&self.k_spinor_generators),
        )
    }
}

/// Structure data and spinor basis of Cl(p,q).
pub fn analyze(sig: Signature) -> Result<(AlgebraData, SpinorBasis)> {
    let kind = field_kind(sig)?;
    let factors = idempotent_factors(sig)?;
    let f = idempotent_from_factors(sig, &factors);
    let ideal = minimal_ideal_basis(&f)?;
    let expected_ideal_dim = sig.algebra_dim() >> factors.len();
    if ideal.generators.len() != expected_ideal_dim {
        return Err(Error::Internal(format!(
            "Cl f has dimension {}, expected {expected_ideal_dim}",
            ideal.generators.len()
        )));
    }
    let k = k_field_basis(&ideal, &f)?;
    let spinor = spinor_k_basis(&ideal.generators, &f, &k.generators)?;
    if spinor.ring().kind() != kind {
        return Err(Error::Internal("K kind disagrees with (p - q) mod 8".into()));
    }
    let data = AlgebraData {
        signature: sig,
        field_kind: kind,
        spinor_dim: spinor.dim(),
        simple: true,
        idempotent: f,
        idempotent_factors: factors,
        real_spinor_generators: ideal.generators,
        k_generators: k.generators,
        k_spinor_generators: spinor.generators().to_vec(),
    };
    Ok((data, spinor))
}

/// The algebra's structure listing; semisimple signatures are rejected.
pub fn clidata(sig: Signature) -> Result<AlgebraData> {
    analyze(sig).map(|(data, _)| data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn b(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    #[test]
    fn radon_hurwitz_values() {
        assert_eq!(radon_hurwitz(2), 2);
        assert_eq!(radon_hurwitz(0), 0);
        assert_eq!(radon_hurwitz(-2), -1);
        assert_eq!(radon_hurwitz(8), 4);
        assert_eq!(radon_hurwitz(-8), -4);
    }

    #[test]
    fn factor_counts() {
        assert_eq!(idempotent_factor_count(sig(3, 1)).unwrap(), 2);
        assert_eq!(idempotent_factor_count(sig(3, 0)).unwrap(), 1);
        assert_eq!(idempotent_factor_count(sig(1, 3)).unwrap(), 1);
        assert!(matches!(
            idempotent_factor_count(sig(2, 1)),
            Err(Error::Semisimple { p: 2, q: 1 })
        ));
    }

    #[test]
    fn pinned_idempotents() {
        let f31 = primitive_idempotent(sig(3, 1)).unwrap();
        let quarter = ratio(1, 4);
        let expect = Multivector::from_terms(
            sig(3, 1),
            [b(&[]), b(&[3, 4]), b(&[1]), b(&[1, 3, 4])].map(|x| (x, quarter.clone())),
        )
        .unwrap();
        assert_eq!(f31, expect);
        assert_eq!(primitive_idempotent(sig(3, 0)).unwrap().to_string(), "1/2 Id + 1/2 e1");
        assert_eq!(primitive_idempotent(sig(1, 3)).unwrap().to_string(), "1/2 Id + 1/2 e14");
    }

    #[test]
    fn searched_idempotents_are_primitive() {
        for (p, q) in [(2, 0), (1, 1), (0, 2), (2, 2), (4, 0), (0, 4), (1, 2), (0, 1), (3, 3), (0, 6)] {
            let s = sig(p, q);
            let (data, spinor) = analyze(s).unwrap();
            let f = &data.idempotent;
            assert_eq!(&(f * f), f, "{s}");
            assert_eq!(
                data.k_generators.len(),
                field_kind(s).unwrap().dim(),
                "{s}"
            );
            assert_eq!(spinor.dim() * spinor.dim() * spinor.ring().dim(), s.algebra_dim(), "{s}");
        }
    }

    #[test]
    fn ideal_of_unit_is_everything() {
        let s = sig(2, 1);
        let basis = minimal_ideal_basis(&Multivector::one(s)).unwrap();
        assert_eq!(basis.generators, s.blades());
    }

    #[test]
    fn non_idempotent_rejected() {
        let s = sig(3, 0);
        let x = Multivector::generator(s, 1).scale(&int(2));
        assert_eq!(minimal_ideal_basis(&x), Err(Error::NotIdempotent));
    }

    #[test]
    fn gamma_squares_to_metric() {
        for (p, q) in [(3, 1), (3, 0), (1, 3), (2, 2), (0, 2)] {
            let s = sig(p, q);
            let (_, spinor) = analyze(s).unwrap();
            let id = KMatrix::identity(spinor.ring().clone(), spinor.dim());
            assert_eq!(spinor.mat_k_repr(&Multivector::one(s)).unwrap(), id);
            for i in 1..=s.dim() {
                let g = spinor.mat_k_repr(&Multivector::generator(s, i)).unwrap();
                assert_eq!(g.mul(&g).unwrap(), id.scale(&int(s.metric(i) as i64)), "{s} e{i}");
            }
        }
    }

    #[test]
    fn completeness_of_sign_choices_in_cl31() {
        let s = sig(3, 1);
        let factors = idempotent_factors(s).unwrap();
        let half = ratio(1, 2);
        let mut all = Vec::new();
        for signs in 0..4u32 {
            let mut f = Multivector::one(s);
            for (k, t) in factors.iter().enumerate() {
                let sign = if signs >> k & 1 == 1 { -half.clone() } else { half.clone() };
                f = f * (Multivector::scalar(s, half.clone()) + Multivector::blade(s, *t).scale(&sign));
            }
            all.push(f);
        }
        let sum = all.iter().fold(Multivector::zero(s), |acc, f| acc + f.clone());
        assert_eq!(sum, Multivector::one(s));
        for (i, a) in all.iter().enumerate() {
            assert_eq!(&(a * a), a);
            for (j, c) in all.iter().enumerate() {
                if i != j {
                    assert!((a * c).is_zero());
                }
            }
        }
    }
}
