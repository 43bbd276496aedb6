//! Exact field arithmetic: prime fields GF(p), extension fields GF(p^m)
//! and arbitrary-precision rationals, with a canonical enumeration of units.
//!
//! All values are immutable and arithmetic is exact; there is no floating
//! point anywhere in this crate.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// An exact field: GF(p), GF(p^m) with an explicit monic irreducible
/// modulus, or the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime { p: u64 },
    /// Modulus coefficients are little-endian (constant term first) and
    /// monic of degree `m`.
    Extension { p: u64, m: usize, modulus: Vec<u64> },
    Rational,
}

/// An element of some [`FieldSpec`]. Residues lie in `[0, p)`, extension
/// elements are trimmed little-endian coefficient vectors of degree < m,
/// rationals are reduced fractions with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Residue(u64),
    Poly(Vec<u64>),
    Ratio(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Polynomial helpers over GF(p), little-endian coefficient vectors.
// ---------------------------------------------------------------------------

fn ptrim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pdeg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::DivisionByZero);
    }
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128 % p as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    let mut s = s0 % p as i128;
    if s < 0 {
        s += p as i128;
    }
    Ok(s as u64)
}

fn padd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = mod_add(x, y, p);
    }
    ptrim(out)
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = mod_sub(x, y, p);
    }
    ptrim(out)
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = mod_add(out[i + j], mod_mul(x, y, p), p);
        }
    }
    ptrim(out)
}

/// Remainder of `a` by monic-leading `b`.
fn prem(a: &[u64], b: &[u64], p: u64) -> Result<Vec<u64>> {
    let db = pdeg(b).ok_or(Error::DivisionByZero)?;
    let lead_inv = mod_inv(b[db], p)?;
    let mut r = a.to_vec();
    while let Some(dr) = pdeg(&r) {
        if dr < db {
            break;
        }
        let c = mod_mul(r[dr], lead_inv, p);
        for (i, &bc) in b.iter().enumerate() {
            let k = dr - db + i;
            r[k] = mod_sub(r[k], mod_mul(c, bc, p), p);
        }
        r = ptrim(r);
    }
    Ok(r)
}

/// Inverse of `a` modulo the field modulus, by extended Euclid in GF(p)[x].
fn pinv(a: &[u64], modulus: &[u64], p: u64) -> Result<Vec<u64>> {
    if a.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let (mut r0, mut r1) = (modulus.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        // divide r0 by r1
        let d1 = pdeg(&r1).unwrap();
        let lead_inv = mod_inv(r1[d1], p)?;
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        while let Some(dr) = pdeg(&rem) {
            if dr < d1 {
                break;
            }
            let c = mod_mul(rem[dr], lead_inv, p);
            q[dr - d1] = c;
            for (i, &bc) in r1.iter().enumerate() {
                let k = dr - d1 + i;
                rem[k] = mod_sub(rem[k], mod_mul(c, bc, p), p);
            }
            rem = ptrim(rem);
        }
        let q = ptrim(q);
        let new_s = psub(&s0, &pmul(&q, &s1, p), p);
        (r0, r1) = (r1, rem);
        (s0, s1) = (s1, new_s);
    }
    // r0 is the gcd; must be a nonzero constant since modulus is irreducible
    let d0 = pdeg(&r0).ok_or(Error::DivisionByZero)?;
    if d0 != 0 {
        return Err(Error::DivisionByZero);
    }
    let c = mod_inv(r0[0], p)?;
    Ok(ptrim(s0.iter().map(|&x| mod_mul(x, c, p)).collect()))
}

/// Monic polynomial of degree `deg` with index `idx` in counting order:
/// coefficients are the base-p digits of `idx`, constant digit least
/// significant, leading coefficient fixed to 1.
fn monic_poly(p: u64, deg: usize, idx: u64) -> Vec<u64> {
    let mut coeffs = vec![0u64; deg + 1];
    let mut v = idx;
    for c in coeffs.iter_mut().take(deg) {
        *c = v % p;
        v /= p;
    }
    coeffs[deg] = 1;
    coeffs
}

fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = match pdeg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if m == 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=m/2
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let g = monic_poly(p, d, idx);
            if prem(f, &g, p).map(|r| r.is_empty()).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// The canonically-first monic irreducible polynomial of degree `m` over
/// GF(p) (counting order on the non-leading coefficients).
fn default_modulus(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for idx in 0..count {
        let f = monic_poly(p, m, idx);
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn extension(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::Parse("extension degree must be >= 1".into()));
        }
        let modulus = match modulus {
            Some(raw) => {
                let f: Vec<u64> = raw.iter().map(|&c| c % p).collect();
                let ok = f.len() == m + 1 && f[m] == 1 && poly_is_irreducible(&f, p);
                if !ok {
                    return Err(Error::BadModulus { p, degree: m });
                }
                f
            }
            None => default_modulus(p, m),
        };
        Ok(FieldSpec::Extension { p, m, modulus })
    }

    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    /// Parses `gf:p`, `gf:p^m`, `gf:p^m:c0,c1,...,1` or `rational`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let body = s
            .strip_prefix("gf:")
            .ok_or_else(|| Error::Parse(format!("unknown field spec `{s}`")))?;
        let mut parts = body.splitn(2, ':');
        let head = parts.next().unwrap();
        let modulus = match parts.next() {
            Some(list) => Some(
                list.split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient `{c}`")))
                    })
                    .collect::<Result<Vec<u64>>>()?,
            ),
            None => None,
        };
        if let Some((ps, ms)) = head.split_once('^') {
            let p = ps
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad characteristic `{ps}`")))?;
            let m = ms
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad extension degree `{ms}`")))?;
            FieldSpec::extension(p, m, modulus)
        } else {
            let p = head
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad characteristic `{head}`")))?;
            if modulus.is_some() {
                return Err(Error::Parse("modulus given for a prime field".into()));
            }
            FieldSpec::prime(p)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => *p,
            FieldSpec::Rational => 0,
        }
    }

    /// `p - 1`, `p^m - 1`, or `None` for the infinite unit group of the
    /// rationals.
    pub fn unit_group_order(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime { p } => Some(p - 1),
            FieldSpec::Extension { p, m, .. } => Some(p.pow(*m as u32) - 1),
            FieldSpec::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime { .. } => Scalar::Residue(0),
            FieldSpec::Extension { .. } => Scalar::Poly(Vec::new()),
            FieldSpec::Rational => Scalar::Ratio(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, i: i64) -> Scalar {
        match self {
            FieldSpec::Prime { p } => Scalar::Residue(i.rem_euclid(*p as i64) as u64),
            FieldSpec::Extension { p, .. } => {
                let c = i.rem_euclid(*p as i64) as u64;
                Scalar::Poly(ptrim(vec![c]))
            }
            FieldSpec::Rational => Scalar::Ratio(BigRational::from_integer(BigInt::from(i))),
        }
    }

    /// Shape/range validation: does this value belong to the field?
    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Prime { p }, Scalar::Residue(r)) => r < p,
            (FieldSpec::Extension { p, m, .. }, Scalar::Poly(v)) => {
                v.len() <= *m && v.last() != Some(&0) && v.iter().all(|c| c < p)
            }
            (FieldSpec::Rational, Scalar::Ratio(_)) => true,
            _ => false,
        }
    }

    fn check2(&self, a: &Scalar, b: &Scalar) -> Result<()> {
        if self.contains(a) && self.contains(b) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string()))
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Residue(r) => *r == 0,
            Scalar::Poly(v) => v.is_empty(),
            Scalar::Ratio(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check2(a, b)?;
        Ok(match (self, a, b) {
            (FieldSpec::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mod_add(*x, *y, *p))
            }
            (FieldSpec::Extension { p, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(padd(x, y, *p))
            }
            (FieldSpec::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x + y),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check2(a, b)?;
        Ok(match (self, a, b) {
            (FieldSpec::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mod_sub(*x, *y, *p))
            }
            (FieldSpec::Extension { p, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(psub(x, y, *p))
            }
            (FieldSpec::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x - y),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check2(a, b)?;
        Ok(match (self, a, b) {
            (FieldSpec::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mod_mul(*x, *y, *p))
            }
            (FieldSpec::Extension { p, modulus, .. }, Scalar::Poly(x), Scalar::Poly(y)) => {
                Scalar::Poly(prem(&pmul(x, y, *p), modulus, *p)?)
            }
            (FieldSpec::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x * y),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if !self.contains(a) {
            return Err(Error::FieldMismatch(self.to_string()));
        }
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (FieldSpec::Prime { p }, Scalar::Residue(x)) => Scalar::Residue(mod_inv(*x, *p)?),
            (FieldSpec::Extension { p, modulus, .. }, Scalar::Poly(x)) => {
                Scalar::Poly(pinv(x, modulus, *p)?)
            }
            (FieldSpec::Rational, Scalar::Ratio(x)) => Scalar::Ratio(x.recip()),
            _ => unreachable!(),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        let bi = self.inv(b)?;
        self.mul(a, &bi)
    }

    pub fn neg(&self, a: &Scalar) -> Result<Scalar> {
        self.sub(&self.zero(), a)
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Result<Scalar> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// First `n` units in the canonical order: GF(p) counts 1,2,...,p-1;
    /// GF(p^m) lists nonzero polynomials by degree then lexicographic
    /// coefficients (leading coefficient most significant); the rationals
    /// count 1,2,3,...
    pub fn enumerate_units(&self, n: usize) -> Result<Vec<Scalar>> {
        if let Some(total) = self.unit_group_order() {
            if n as u64 > total {
                return Err(Error::NotEnoughUnits {
                    requested: n,
                    available: total,
                });
            }
        }
        let mut out = Vec::with_capacity(n);
        match self {
            FieldSpec::Prime { .. } => {
                for v in 1..=n as u64 {
                    out.push(Scalar::Residue(v));
                }
            }
            FieldSpec::Extension { p, m, .. } => {
                'outer: for d in 0..*m {
                    let span = p.pow(d as u32);
                    for v in 0..(p - 1) * span {
                        if out.len() == n {
                            break 'outer;
                        }
                        let mut coeffs = vec![0u64; d + 1];
                        coeffs[d] = 1 + v / span;
                        let mut rest = v % span;
                        for k in (0..d).rev() {
                            let unit = p.pow(k as u32);
                            coeffs[k] = rest / unit;
                            rest %= unit;
                        }
                        out.push(Scalar::Poly(ptrim(coeffs)));
                    }
                }
            }
            FieldSpec::Rational => {
                for v in 1..=n as i64 {
                    out.push(self.from_integer(v));
                }
            }
        }
        Ok(out)
    }

    /// Every unit of a finite field, in canonical order.
    pub fn all_units(&self) -> Result<Vec<Scalar>> {
        let total = self
            .unit_group_order()
            .ok_or_else(|| Error::Parse("cannot enumerate the units of an infinite field".into()))?;
        self.enumerate_units(total as usize)
    }

    /// Canonical scalar string (also produced by `Display` on `Scalar`).
    pub fn scalar_string(&self, a: &Scalar) -> String {
        a.to_string()
    }

    /// Parses a canonical scalar string for this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Prime { p } => {
                let v = s
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
                Ok(Scalar::Residue(v.rem_euclid(*p as i64) as u64))
            }
            FieldSpec::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n = num
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
                let d = den
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(Scalar::Ratio(BigRational::new(n, d)))
            }
            FieldSpec::Extension { p, m, .. } => {
                let mut coeffs = vec![0u64; *m];
                for term in s.split('+') {
                    let term = term.trim();
                    if term.is_empty() {
                        return Err(Error::Parse(format!("bad polynomial `{s}`")));
                    }
                    let (coef_str, deg) = match term.find('x') {
                        Some(pos) => {
                            let c = &term[..pos];
                            let rest = &term[pos + 1..];
                            let d = if rest.is_empty() {
                                1usize
                            } else {
                                rest.strip_prefix('^')
                                    .and_then(|e| e.parse::<usize>().ok())
                                    .ok_or_else(|| {
                                        Error::Parse(format!("bad exponent in `{term}`"))
                                    })?
                            };
                            (c, d)
                        }
                        None => (term, 0usize),
                    };
                    let c = if coef_str.is_empty() {
                        1u64
                    } else {
                        coef_str
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad coefficient `{coef_str}`")))?
                            % p
                    };
                    if deg >= *m {
                        return Err(Error::Parse(format!(
                            "degree {deg} too large for extension of degree {m}"
                        )));
                    }
                    coeffs[deg] = mod_add(coeffs[deg], c, *p);
                }
                Ok(Scalar::Poly(ptrim(coeffs)))
            }
        }
    }
}

/// Image of `a` (an element of `from`) in `to`.
///
/// Supported: identity on equal specs, GF(p) into GF(p^m) as constant
/// polynomials, and GF(p^m) into GF(p^mk) by mapping the generator to the
/// canonically-first root of the source modulus in the target field.
pub fn embed(from: &FieldSpec, to: &FieldSpec, a: &Scalar) -> Result<Scalar> {
    if !from.contains(a) {
        return Err(Error::FieldMismatch(from.to_string()));
    }
    if from == to {
        return Ok(a.clone());
    }
    match (from, to) {
        (FieldSpec::Prime { p }, FieldSpec::Extension { p: q, .. }) => {
            if p != q {
                return Err(Error::CharacteristicMismatch(*p, *q));
            }
            let Scalar::Residue(r) = a else { unreachable!() };
            Ok(Scalar::Poly(ptrim(vec![*r])))
        }
        (
            FieldSpec::Extension { p, m, modulus },
            FieldSpec::Extension { p: q, m: m2, .. },
        ) => {
            if p != q {
                return Err(Error::CharacteristicMismatch(*p, *q));
            }
            if m2 % m != 0 {
                return Err(Error::UnsupportedEmbedding(format!(
                    "{m2} is not a multiple of {m}"
                )));
            }
            let root = subfield_root(modulus, to)?;
            let Scalar::Poly(coeffs) = a else { unreachable!() };
            let mut acc = to.zero();
            for &c in coeffs.iter().rev() {
                acc = to.mul(&acc, &root)?;
                acc = to.add(&acc, &Scalar::Poly(ptrim(vec![c])))?;
            }
            Ok(acc)
        }
        _ => Err(Error::UnsupportedEmbedding(format!(
            "{from} into {to}"
        ))),
    }
}

/// Canonically-first root of `modulus` (coefficients over GF(p)) inside the
/// target extension field.
fn subfield_root(modulus: &[u64], to: &FieldSpec) -> Result<Scalar> {
    let mut candidates = vec![to.zero()];
    candidates.extend(to.all_units()?);
    for cand in candidates {
        let mut acc = to.zero();
        for &c in modulus.iter().rev() {
            acc = to.mul(&acc, &cand)?;
            acc = to.add(&acc, &Scalar::Poly(ptrim(vec![c])))?;
        }
        if to.is_zero(&acc) {
            return Ok(cand);
        }
    }
    Err(Error::UnsupportedEmbedding(
        "source modulus has no root in the target field".into(),
    ))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime { p } => write!(f, "gf:{p}"),
            FieldSpec::Extension { p, m, modulus } => {
                let coeffs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "gf:{p}^{m}:{}", coeffs.join(","))
            }
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Ratio(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Poly(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (d, &c) in v.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match d {
                        0 => write!(f, "{c}")?,
                        1 if c == 1 => write!(f, "x")?,
                        1 => write!(f, "{c}x")?,
                        _ if c == 1 => write!(f, "x^{d}")?,
                        _ => write!(f, "{c}x^{d}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl Scalar {
    /// Numerator/denominator view of a rational scalar.
    pub fn as_ratio(&self) -> Option<&BigRational> {
        match self {
            Scalar::Ratio(q) => Some(q),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn prime_arith_examples() {
        let f = gf(7);
        let a = f.from_integer(3);
        let b = f.from_integer(5);
        assert_eq!(f.add(&a, &b).unwrap(), f.from_integer(1));
        assert_eq!(
            f.div(&f.one(), &f.from_integer(3)).unwrap(),
            f.from_integer(5)
        );
    }

    #[test]
    fn rational_arith_examples() {
        let f = FieldSpec::rational();
        let half = f.parse_scalar("1/2").unwrap();
        let third = f.parse_scalar("1/3").unwrap();
        let sum = f.add(&half, &third).unwrap();
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn unit_group_orders() {
        assert_eq!(gf(7).unit_group_order(), Some(6));
        let e = FieldSpec::extension(2, 3, None).unwrap();
        assert_eq!(e.unit_group_order(), Some(7));
        assert_eq!(FieldSpec::rational().unit_group_order(), None);
    }

    #[test]
    fn unit_enumeration_is_canonical() {
        assert_eq!(
            gf(5).enumerate_units(3).unwrap(),
            vec![Scalar::Residue(1), Scalar::Residue(2), Scalar::Residue(3)]
        );
        let q = FieldSpec::rational();
        assert_eq!(
            q.enumerate_units(2).unwrap(),
            vec![q.from_integer(1), q.from_integer(2)]
        );
        let f4 = FieldSpec::extension(2, 2, None).unwrap();
        let units = f4.enumerate_units(3).unwrap();
        let strings: Vec<String> = units.iter().map(|u| u.to_string()).collect();
        assert_eq!(strings, vec!["1", "x", "x+1"]);
        assert!(f4.enumerate_units(4).is_err());
    }

    #[test]
    fn units_distinct_and_reproducible() {
        for spec in [
            gf(11),
            FieldSpec::extension(3, 2, None).unwrap(),
            FieldSpec::rational(),
        ] {
            let n = spec.unit_group_order().map(|u| u.min(8)).unwrap_or(8) as usize;
            let a = spec.enumerate_units(n).unwrap();
            let b = spec.enumerate_units(n).unwrap();
            assert_eq!(a, b);
            for i in 0..a.len() {
                assert!(!spec.is_zero(&a[i]));
                for j in 0..i {
                    assert_ne!(a[i], a[j]);
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7, 11] {
            let f = gf(p);
            let elems: Vec<Scalar> = (0..p as i64).map(|i| f.from_integer(i)).collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(f.add(a, b).unwrap(), f.add(b, a).unwrap());
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for c in &elems {
                        let ab_c = f.add(&f.add(a, b).unwrap(), c).unwrap();
                        let a_bc = f.add(a, &f.add(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let m1 = f.mul(&f.mul(a, b).unwrap(), c).unwrap();
                        let m2 = f.mul(a, &f.mul(b, c).unwrap()).unwrap();
                        assert_eq!(m1, m2);
                        let lhs = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                        let rhs = f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_extensions() {
        for (p, m) in [(2u64, 2usize), (2, 3), (3, 2)] {
            let f = FieldSpec::extension(p, m, None).unwrap();
            let mut elems = vec![f.zero()];
            elems.extend(f.all_units().unwrap());
            for a in &elems {
                for b in &elems {
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for c in &elems {
                        let m1 = f.mul(&f.mul(a, b).unwrap(), c).unwrap();
                        let m2 = f.mul(a, &f.mul(b, c).unwrap()).unwrap();
                        assert_eq!(m1, m2);
                        let lhs = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                        let rhs = f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn every_nonzero_scalar_has_inverse() {
        for spec in [
            gf(13),
            FieldSpec::extension(2, 2, None).unwrap(),
            FieldSpec::extension(5, 2, None).unwrap(),
        ] {
            for u in spec.all_units().unwrap() {
                let inv = spec.inv(&u).unwrap();
                assert!(spec.is_one(&spec.mul(&u, &inv).unwrap()));
            }
        }
        let q = FieldSpec::rational();
        let v = q.parse_scalar("-7/3").unwrap();
        assert!(q.is_one(&q.mul(&v, &q.inv(&v).unwrap()).unwrap()));
    }

    #[test]
    fn division_by_zero_and_mixed_fields_fail() {
        let f = gf(7);
        assert!(matches!(
            f.div(&f.one(), &f.zero()),
            Err(Error::DivisionByZero)
        ));
        let q = FieldSpec::rational();
        assert!(f.add(&f.one(), &q.one()).is_err());
        // out-of-range residue is rejected too
        assert!(f.add(&f.one(), &Scalar::Residue(9)).is_err());
    }

    #[test]
    fn embed_is_a_field_homomorphism() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let base = gf(p);
            let ext = FieldSpec::extension(p, 2, None).unwrap();
            let mut images = Vec::new();
            for i in 0..p as i64 {
                let a = base.from_integer(i);
                let img = embed(&base, &ext, &a).unwrap();
                assert!(!images.contains(&img), "embed must be injective");
                images.push(img);
            }
            for i in 0..p as i64 {
                for j in 0..p as i64 {
                    let a = base.from_integer(i);
                    let b = base.from_integer(j);
                    let prod = embed(&base, &ext, &base.mul(&a, &b).unwrap()).unwrap();
                    let prod2 = ext
                        .mul(&embed(&base, &ext, &a).unwrap(), &embed(&base, &ext, &b).unwrap())
                        .unwrap();
                    assert_eq!(prod, prod2);
                    let sum = embed(&base, &ext, &base.add(&a, &b).unwrap()).unwrap();
                    let sum2 = ext
                        .add(&embed(&base, &ext, &a).unwrap(), &embed(&base, &ext, &b).unwrap())
                        .unwrap();
                    assert_eq!(sum, sum2);
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        let base = gf(5);
        let ext = FieldSpec::extension(5, 2, None).unwrap();
        assert_eq!(
            embed(&base, &ext, &base.from_integer(3)).unwrap(),
            Scalar::Poly(vec![3])
        );
        assert_eq!(embed(&base, &ext, &base.zero()).unwrap(), ext.zero());
        let seven = gf(7);
        assert!(embed(&seven, &ext, &seven.one()).is_err());
    }

    #[test]
    fn tower_embedding_preserves_products() {
        let mid = FieldSpec::extension(2, 2, None).unwrap();
        let top = FieldSpec::extension(2, 4, None).unwrap();
        let units = mid.all_units().unwrap();
        for a in &units {
            for b in &units {
                let lhs = embed(&mid, &top, &mid.mul(a, b).unwrap()).unwrap();
                let rhs = top
                    .mul(&embed(&mid, &top, a).unwrap(), &embed(&mid, &top, b).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["gf:7", "gf:2^3:1,1,0,1", "rational"] {
            let spec = FieldSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        // default modulus is the canonically-first irreducible
        let f4 = FieldSpec::parse("gf:2^2").unwrap();
        assert_eq!(f4.to_string(), "gf:2^2:1,1,1");
        let f25 = FieldSpec::parse("gf:5^2").unwrap();
        assert_eq!(f25.to_string(), "gf:5^2:2,0,1");
        assert!(FieldSpec::parse("gf:6").is_err());
        assert!(FieldSpec::parse("gf:2^2:1,0,1").is_err()); // x^2+1 = (x+1)^2 over GF(2)
    }

    #[test]
    fn scalar_strings_round_trip() {
        let f8 = FieldSpec::extension(2, 3, None).unwrap();
        for u in f8.all_units().unwrap() {
            let s = u.to_string();
            assert_eq!(f8.parse_scalar(&s).unwrap(), u);
        }
        let q = FieldSpec::rational();
        for s in ["0", "-3", "22/7"] {
            assert_eq!(q.parse_scalar(s).unwrap().to_string(), s);
        }
    }
}
