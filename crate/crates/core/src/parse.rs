//! Text forms of multivectors and `K`-matrix entries.
//!
//! Multivectors are written as sums of signed rational multiples of blades,
//! `Id - 1/2 e1 + 2*e134`, with `e(1,10)` for indices above nine. Matrix
//! entries use `I` for the complex unit and `ii`, `jj`, `kk` for the
//! quaternion units, e.g. `1 + 2*ii - 3*kk`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::blade::{Blade, Signature};
use crate::error::{Error, Result};
use crate::kmatrix::{DivisionRing, FieldKind, KMatrix, KScalar};
use crate::multivector::Multivector;
use crate::scalar::Rational;

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest();
        self.pos += t.len() - t.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn digits(&mut self) -> &'a str {
        let t = self.rest();
        let n = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
        self.pos += n;
        &t[..n]
    }

    fn word(&mut self) -> &'a str {
        let t = self.rest();
        let n = t
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(t.len());
        self.pos += n;
        &t[..n]
    }

    /// Unsigned `12`, `3/4` or `2.5` as an exact rational.
    fn number(&mut self) -> Result<Option<Rational>> {
        self.skip_ws();
        let start = self.pos;
        let int_part = self.digits();
        let mut frac_part = "";
        if self.rest().starts_with('.') {
            self.pos += 1;
            frac_part = self.digits();
        }
        if int_part.is_empty() && frac_part.is_empty() {
            self.pos = start;
            return Ok(None);
        }
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let whole: BigInt = format!("{int_part}{frac_part}")
            .parse()
            .map_err(|_| Error::parse(start, "malformed number"))?;
        let mut value = Rational::new(whole, scale);
        let save = self.pos;
        if self.eat('/') {
            self.skip_ws();
            let dpos = self.pos;
            let den = self.digits();
            if den.is_empty() {
                return Err(Error::parse(dpos, "expected a denominator after '/'"));
            }
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::parse(dpos, "zero denominator"));
            }
            if !frac_part.is_empty() {
                return Err(Error::parse(save, "fraction with a decimal numerator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(Some(value))
    }
}

/// Reads one signed term: optional sign, optional coefficient, optional
/// `*`, optional unit word (via `unit`). Returns the coefficient and the
/// unit, where `None` means a bare number.
fn signed_term<'a, U>(
    lx: &mut Lexer<'a>,
    first: bool,
    mut unit: impl FnMut(&mut Lexer<'a>) -> Result<Option<U>>,
) -> Result<(Rational, Option<U>)> {
    let mut sign = Rational::one();
    if lx.eat('-') {
        sign = -sign;
    } else if !lx.eat('+') && !first {
        return Err(lx.err("expected '+' or '-'"));
    }
    let coef = lx.number()?;
    let had_star = coef.is_some() && lx.eat('*');
    let u = unit(lx)?;
    if had_star && u.is_none() {
        return Err(lx.err("expected a unit after '*'"));
    }
    match (coef, u) {
        (None, None) => Err(lx.err("expected a number or a unit")),
        (c, u) => Ok((sign * c.unwrap_or_else(Rational::one), u)),
    }
}

fn parse_blade_word(lx: &mut Lexer<'_>, sig: Signature) -> Result<Option<Blade>> {
    let start = {
        lx.skip_ws();
        lx.pos
    };
    match lx.peek() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Ok(None),
    }
    if lx.rest().starts_with("e(") {
        lx.pos += 2;
        let mut idx = Vec::new();
        loop {
            lx.skip_ws();
            let p = lx.pos;
            let d = lx.digits();
            if d.is_empty() {
                return Err(Error::parse(p, "expected a generator index"));
            }
            idx.push((p, d.parse::<usize>().map_err(|_| Error::parse(p, "index too large"))?));
            if lx.eat(')') {
                break;
            }
            if !lx.eat(',') {
                return Err(lx.err("expected ',' or ')'"));
            }
        }
        return blade_from(&idx, sig).map(Some);
    }
    let w = lx.word();
    if w == "Id" {
        return Ok(Some(Blade::ID));
    }
    let Some(ds) = w.strip_prefix('e').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
    else {
        return Err(Error::parse(start, format!("unknown token '{w}'")));
    };
    let idx: Vec<(usize, usize)> = ds
        .bytes()
        .enumerate()
        .map(|(k, b)| (start + 1 + k, (b - b'0') as usize))
        .collect();
    blade_from(&idx, sig).map(Some)
}

fn blade_from(idx: &[(usize, usize)], sig: Signature) -> Result<Blade> {
    let mut last = 0;
    for &(pos, i) in idx {
        if i == 0 || i > sig.dim() {
            return Err(Error::parse(pos, format!("index {i} is outside 1..{} for {sig}", sig.dim())));
        }
        if i <= last {
            return Err(Error::parse(pos, "blade indices must be strictly ascending"));
        }
        last = i;
    }
    let plain: Vec<usize> = idx.iter().map(|&(_, i)| i).collect();
    Blade::from_indices(&plain)
}

/// Parses `Id - 1/2 e1 + 2*e13` in `sig`; `0` gives the zero multivector.
pub fn parse_multivector(text: &str, sig: Signature) -> Result<Multivector> {
    let mut lx = Lexer::new(text);
    let mut out = Multivector::zero(sig);
    if lx.at_end() {
        return Err(lx.err("empty expression"));
    }
    let mut first = true;
    while !lx.at_end() {
        let (c, b) = signed_term(&mut lx, first, |lx| parse_blade_word(lx, sig))?;
        out.accumulate(b.unwrap_or(Blade::ID), c);
        first = false;
    }
    Ok(out)
}

fn parse_unit(lx: &mut Lexer<'_>, kind: FieldKind) -> Result<Option<usize>> {
    lx.skip_ws();
    let start = lx.pos;
    let quoted = lx.eat('\'');
    let w = lx.word();
    if w.is_empty() {
        if quoted {
            return Err(Error::parse(start, "empty quoted unit"));
        }
        return Ok(None);
    }
    if quoted && !lx.eat('\'') {
        return Err(lx.err("unterminated quote"));
    }
    let names = kind.unit_names();
    match names.iter().skip(1).position(|n| *n == w) {
        Some(k) => Ok(Some(k + 1)),
        None => {
            let known = ["I", "ii", "jj", "kk"];
            let msg = if known.contains(&w) {
                format!("unit '{w}' does not belong to {kind} entries")
            } else {
                format!("unknown token '{w}'")
            };
            Err(Error::parse(start, msg))
        }
    }
}

/// Parses one matrix entry such as `1 - 3*I` or `kk - 3*ii`.
pub fn parse_k_entry(text: &str, kind: FieldKind) -> Result<KScalar> {
    let mut lx = Lexer::new(text);
    if lx.at_end() {
        return Err(lx.err("empty entry"));
    }
    let mut coords = vec![Rational::zero(); kind.dim()];
    let mut first = true;
    while !lx.at_end() {
        let (c, u) = signed_term(&mut lx, first, |lx| parse_unit(lx, kind))?;
        let k = u.unwrap_or(0);
        coords[k] += c;
        first = false;
    }
    Ok(KScalar { coords })
}

/// Rows of entry strings plus the entry kind.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixDocument {
    pub kind: FieldKind,
    pub rows: Vec<Vec<String>>,
    pub signature: Option<Signature>,
}

/// Builds the matrix over the standard copy of `K` (units `1, I` or
/// `1, ii, jj, kk`).
pub fn parse_matrix(doc: &MatrixDocument) -> Result<KMatrix> {
    let n = doc.rows.len();
    if n == 0 {
        return Err(Error::Dimension("matrix has no rows".into()));
    }
    let cols = doc.rows[0].len();
    if let Some((i, r)) = doc.rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(Error::Dimension(format!(
            "row {} has {} entries, expected {cols}",
            i + 1,
            r.len()
        )));
    }
    let ring = Arc::new(DivisionRing::standard(doc.kind));
    let mut m = KMatrix::zeros(ring, n, cols);
    for (i, row) in doc.rows.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            *m.get_mut(i, j) = parse_k_entry(text, doc.kind).map_err(|e| match e {
                Error::Parse { pos, msg } => {
                    Error::parse(pos, format!("entry ({}, {}) '{text}': {msg}", i + 1, j + 1))
                }
                e => e,
            })?;
        }
    }
    Ok(m)
}

/// Splits `[[a, b], [c, d]]` into entry strings; commas inside an entry
/// are not allowed.
pub fn split_matrix_literal(text: &str) -> Result<Vec<Vec<String>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, "matrix literal must be enclosed in [ ]"))?;
    let offset = text.len() - text.trim_start().len() + 1;
    let mut rows = Vec::new();
    let mut depth = 0;
    let mut cur: Option<(usize, String)> = None;
    for (k, ch) in inner.char_indices() {
        match ch {
            '[' => {
                if depth != 0 {
                    return Err(Error::parse(offset + k, "nested '[' inside a row"));
                }
                depth = 1;
                cur = Some((k, String::new()));
            }
            ']' => {
                if depth != 1 {
                    return Err(Error::parse(offset + k, "unbalanced ']'"));
                }
                depth = 0;
                let (_, row) = cur.take().expect("open row");
                rows.push(row.split(',').map(|s| s.trim().to_string()).collect());
            }
            ',' if depth == 0 => {}
            c if depth == 0 && !c.is_whitespace() => {
                return Err(Error::parse(offset + k, "text outside a row"));
            }
            c => {
                if let Some((_, row)) = cur.as_mut() {
                    row.push(c);
                }
            }
        }
    }
    if depth != 0 {
        return Err(Error::parse(text.len(), "unterminated row"));
    }
    Ok(rows)
}

/// `[[1+2*I,1-3*I],[1-I,-2*I]]` with entries of the given kind.
pub fn parse_matrix_literal(text: &str, kind: FieldKind) -> Result<KMatrix> {
    parse_matrix(&MatrixDocument {
        kind,
        rows: split_matrix_literal(text)?,
        signature: None,
    })
}

/// Signature used for `n x n` matrices over `kind` when none is given.
pub fn default_signature(kind: FieldKind, n: usize) -> Result<Signature> {
    let (p, q) = match (kind, n) {
        (FieldKind::Real, 4) => (3, 1),
        (FieldKind::Complex, 2) => (3, 0),
        (FieldKind::Quaternionic, 2) => (1, 3),
        _ => {
            return Err(Error::Unsupported(format!(
                "no default signature for {n}x{n} {kind} matrices"
            )))
        }
    };
    Signature::new(p, q)
}
