//! Signatures and basis blades.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Diagonal quadratic form with `p` generators squaring to `+1` followed by
/// `q` generators squaring to `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Largest supported `p + q`; blade masks fit in 16 bits.
    pub const MAX_GENERATORS: usize = 16;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(Error::InvalidSignature {
                p,
                q,
                reason: "at least one generator is required",
            });
        }
        if n > Self::MAX_GENERATORS {
            return Err(Error::InvalidSignature {
                p,
                q,
                reason: "at most 16 generators are supported",
            });
        }
        Ok(Signature {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    /// Number of generators `n = p + q`.
    pub fn dim(&self) -> usize {
        self.p() + self.q()
    }

    /// Dimension `2^n` of the algebra.
    pub fn algebra_dim(&self) -> usize {
        1 << self.dim()
    }

    /// Square of generator `i` (1-based).
    pub fn metric(&self, i: usize) -> i8 {
        debug_assert!(i >= 1 && i <= self.dim());
        if i <= self.p() {
            1
        } else {
            -1
        }
    }

    /// `p - q`.
    pub fn difference(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    /// Cl(p,q) is simple unless `p - q = 1 mod 4`.
    pub fn is_simple(&self) -> bool {
        self.difference().rem_euclid(4) != 1
    }

    /// All blades in canonical order: by grade, then lexicographically.
    pub fn blades(&self) -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..self.algebra_dim() as u32).map(Blade).collect();
        all.sort();
        all
    }

    pub fn contains(&self, blade: Blade) -> bool {
        (blade.0 >> self.dim()) == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Basis monomial `e_{i1...ik}`, stored as a bitmask where bit `i-1` stands
/// for generator `e_i`. The empty mask is the unit `Id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const ID: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(i: usize) -> Self {
        assert!((1..=Signature::MAX_GENERATORS).contains(&i), "generator index out of range");
        Blade(1 << (i - 1))
    }

    /// Blade from strictly ascending 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > Signature::MAX_GENERATORS {
                return Err(Error::parse(0, format!("generator index {i} out of range")));
            }
            if i <= last {
                return Err(Error::parse(0, "blade indices must be strictly ascending"));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_id(&self) -> bool {
        self.0 == 0
    }

    /// Ascending 1-based generator indices.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.0;
        (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    /// Whether two blades commute under the Clifford product.
    pub fn commutes_with(&self, other: Blade) -> bool {
        let ga = self.grade();
        let gb = other.grade();
        let common = (self.0 & other.0).count_ones() as usize;
        (ga * gb - common) % 2 == 0
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    /// `Id`, `e1`, `e134`; indices above 9 use `e(1,10)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_id() {
            return f.write_str("Id");
        }
        if self.indices().all(|i| i < 10) {
            f.write_str("e")?;
            for i in self.indices() {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.indices().map(|i| i.to_string()).collect();
            write!(f, "e({})", parts.join(","))
        }
    }
}

/// Clifford product of two basis blades under the diagonal form of `sig`.
///
/// Returns `(sign, blade)` with `e_a e_b = sign * e_result`. Moving each
/// generator of `b` leftwards past the larger generators of `a` costs one
/// transposition; shared generators contract to their metric value.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (a.0 >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    let mut sign: i8 = if swaps % 2 == 0 { 1 } else { -1 };
    let mut common = a.0 & b.0;
    while common != 0 {
        let bit = common.trailing_zeros() as usize;
        sign *= sig.metric(bit + 1);
        common &= common - 1;
    }
    (sign, Blade(a.0 ^ b.0))
}
