//! Multiplicative characters of `F_q^x`, indexed by the canonical generator.
//!
//! `chi_m(g^k) = zeta_{q-1}^{m k}` and every character vanishes at 0,
//! the trivial one included.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::field::{gcd64, Extension, FieldElement, FiniteField};

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultChar {
    q: u32,
    m: u32,
}

impl MultChar {
    pub fn new(q: u32, m: i64) -> MultChar {
        let n = (q - 1) as i64;
        MultChar {
            q,
            m: m.rem_euclid(n) as u32,
        }
    }

    pub fn trivial(q: u32) -> MultChar {
        MultChar { q, m: 0 }
    }

    /// The quadratic character `phi`; `q` must be odd.
    pub fn quadratic(q: u32) -> MultChar {
        assert!(q % 2 == 1, "quadratic character needs odd q");
        MultChar { q, m: (q - 1) / 2 }
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn exponent(self) -> u32 {
        self.m
    }

    pub fn is_trivial(self) -> bool {
        self.m == 0
    }

    pub fn order(self) -> u32 {
        let n = self.q - 1;
        n / crate::field::gcd(self.m, n)
    }

    pub fn conj(self) -> MultChar {
        MultChar::new(self.q, -(self.m as i64))
    }

    pub fn pow(self, k: i64) -> MultChar {
        let n = (self.q - 1) as i64;
        MultChar::new(self.q, (self.m as i64 * k.rem_euclid(n)) % n)
    }

    /// Value exponent at `x`, i.e. `chi(x) = zeta_{q-1}^e`; `None` at 0.
    pub fn exp_at(self, f: &FiniteField, x: FieldElement) -> Option<u32> {
        let l = f.log_raw(x.raw())? as u64;
        Some(((self.m as u64 * l) % (self.q as u64 - 1)) as u32)
    }

    /// Same as `exp_at` on a raw encoding.
    pub fn exp_raw(self, f: &FiniteField, v: u32) -> Option<u32> {
        let l = f.log_raw(v)? as u64;
        Some(((self.m as u64 * l) % (self.q as u64 - 1)) as u32)
    }

    /// `chi(-1)` as `+1` or `-1`.
    pub fn sign(self, f: &FiniteField) -> i64 {
        if f.q().is_multiple_of(2) {
            return 1;
        }
        if self.m.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl std::ops::Mul for MultChar {
    type Output = MultChar;
    fn mul(self, o: MultChar) -> MultChar {
        assert_eq!(self.q, o.q, "characters on different fields");
        MultChar::new(self.q, self.m as i64 + o.m as i64)
    }
}

impl fmt::Debug for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi^{}", self.m)
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi^{}", self.m)
    }
}

/// All characters, exponents ascending.
pub fn all_chars(q: u32) -> impl Iterator<Item = MultChar> {
    (0..q - 1).map(move |m| MultChar { q, m })
}

/// Characters with `chi^m = eps`, as multiples of `(q-1)/m`.
pub fn chars_dividing(q: u32, m: u32) -> Result<Vec<MultChar>> {
    if !(q - 1).is_multiple_of(m) {
        return Err(Error::IncompatibleCongruence { q, m: m as u64 });
    }
    let s = (q - 1) / m;
    Ok((0..m).map(|i| MultChar { q, m: i * s }).collect())
}

/// Characters of exact order `n`.
pub fn chars_of_order(q: u32, n: u32) -> Result<Vec<MultChar>> {
    Ok(chars_dividing(q, n)?
        .into_iter()
        .filter(|c| c.order() == n)
        .collect())
}

fn same_field(f: &FiniteField, chi: MultChar, x: FieldElement) -> Result<()> {
    if chi.q != f.q() {
        return Err(Error::FieldMismatch(chi.q, f.q()));
    }
    if x.q() != f.q() {
        return Err(Error::FieldMismatch(x.q(), f.q()));
    }
    Ok(())
}

/// `chi(x)` as an element of `Q(zeta_{q-1})`.
pub fn char_value(f: &FiniteField, chi: MultChar, x: FieldElement) -> Result<CycloNum> {
    same_field(f, chi, x)?;
    let order = f.q() - 1;
    Ok(match chi.exp_at(f, x) {
        None => CycloNum::zero(order),
        Some(e) => CycloNum::zeta(order, e as i64),
    })
}

pub fn delta_char(chi: MultChar) -> i64 {
    chi.is_trivial() as i64
}

pub fn delta_elem(x: FieldElement) -> i64 {
    x.is_zero() as i64
}

/// Lift `chi` to `F_{q^r}` through the norm map.
pub fn lift_norm(f: &Arc<FiniteField>, chi: MultChar, r: u32) -> Result<(Arc<Extension>, MultChar)> {
    if chi.q != f.q() {
        return Err(Error::FieldMismatch(chi.q, f.q()));
    }
    let ext = Extension::new(f, r)?;
    Ok((ext.clone(), lift_with(&ext, chi)))
}

/// `chi o N` on the big field of `ext`.
pub fn lift_with(ext: &Extension, chi: MultChar) -> MultChar {
    let big_q = ext.big().q() as u64;
    let s = (big_q - 1) / (chi.q as u64 - 1);
    let m = (chi.m as u128 * ext.norm_log() as u128 * s as u128) % (big_q as u128 - 1);
    MultChar {
        q: big_q as u32,
        m: m as u32,
    }
}

/// A reduced fraction `i/m` with `0 <= i < m`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RationalParam {
    pub i: i64,
    pub m: u64,
}

impl RationalParam {
    pub fn new(i: i64, m: u64) -> Result<RationalParam> {
        if m == 0 {
            return Err(Error::DivisionByZero);
        }
        let i = i.rem_euclid(m as i64);
        if i == 0 {
            return Ok(RationalParam { i: 0, m: 1 });
        }
        let g = gcd64(i as u64, m);
        Ok(RationalParam {
            i: i / g as i64,
            m: m / g,
        })
    }

    /// Parses `i/m` or an integer.
    pub fn parse(s: &str) -> Result<RationalParam> {
        let bad = || Error::Invalid(format!("bad rational parameter '{s}'"));
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if b == 0 {
                    return Err(bad());
                }
                let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
                RationalParam::new(a, b as u64)
            }
            None => RationalParam::new(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

impl fmt::Display for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.i, self.m)
    }
}

/// Residue-level `iota(i/m)`: the character with exponent `i (q-1)/m`.
pub fn iota(a: RationalParam, f: &FiniteField) -> Result<MultChar> {
    let n = f.q() as u64 - 1;
    if !n.is_multiple_of(a.m) {
        return Err(Error::IncompatibleCongruence { q: f.q(), m: a.m });
    }
    Ok(MultChar::new(f.q(), a.i * (n / a.m) as i64))
}

/// Left inverse of `iota` at denominator `m`.
pub fn kappa(chi: MultChar, m: u64) -> Result<RationalParam> {
    let n = chi.q as u64 - 1;
    if !m.is_multiple_of(chi.order() as u64) {
        return Err(Error::OrderDoesNotDivide {
            order: chi.order(),
            m,
        });
    }
    // chi.m = i * n / m exactly, since ord | m
    let i = chi.m as u128 * m as u128 / n as u128;
    RationalParam::new(i as i64, m)
}

/// Parses `chi^m`, a bare integer exponent, or `order:N,index:k`
/// (exponent `k (q-1)/N`).
pub fn parse_char(q: u32, s: &str) -> Result<MultChar> {
    let bad = || Error::Invalid(format!("bad character '{s}'"));
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("chi^") {
        return Ok(MultChar::new(q, rest.parse().map_err(|_| bad())?));
    }
    if let Some(rest) = t.strip_prefix("order:") {
        let (n, k) = rest.split_once(",index:").ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        if n == 0 || !(q - 1).is_multiple_of(n) {
            return Err(Error::IncompatibleCongruence { q, m: n as u64 });
        }
        return Ok(MultChar::new(q, k * ((q - 1) / n) as i64));
    }
    if t == "eps" {
        return Ok(MultChar::trivial(q));
    }
    if t == "phi" && q % 2 == 1 {
        return Ok(MultChar::quadratic(q));
    }
    Ok(MultChar::new(q, t.parse().map_err(|_| bad())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let f = FiniteField::new(5, 1).unwrap();
        let phi = MultChar::quadratic(5);
        assert_eq!(char_value(&f, phi, f.from_int(4)).unwrap(), CycloNum::one(4));
        assert_eq!(char_value(&f, phi, f.from_int(2)).unwrap(), CycloNum::from_int(4, -1));
        assert!(char_value(&f, MultChar::trivial(5), f.zero()).unwrap().is_zero());
        let g = FiniteField::new(7, 1).unwrap();
        assert_eq!(
            char_value(&f, phi, g.one()),
            Err(Error::FieldMismatch(7, 5))
        );
    }

    #[test]
    fn iota_kappa() {
        let f = FiniteField::new(13, 1).unwrap();
        for i in 0..12 {
            let a = RationalParam::new(i, 12).unwrap();
            assert_eq!(kappa(iota(a, &f).unwrap(), 12).unwrap(), a);
        }
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(
            iota(RationalParam::new(1, 3).unwrap(), &f5),
            Err(Error::IncompatibleCongruence { q: 5, m: 3 })
        );
        assert_eq!(iota(RationalParam::parse("1/2").unwrap(), &f5).unwrap(), MultChar::quadratic(5));
        assert_eq!(kappa(MultChar::quadratic(5), 2).unwrap(), RationalParam { i: 1, m: 2 });
        assert_eq!(kappa(MultChar::trivial(5), 7).unwrap(), RationalParam { i: 0, m: 1 });
        assert!(kappa(MultChar::new(5, 1), 2).is_err());
    }

    #[test]
    fn lift_values() {
        let f = FiniteField::new(5, 1).unwrap();
        let (ext, phi2) = lift_norm(&f, MultChar::quadratic(5), 2).unwrap();
        let big = ext.big();
        let two = ext.embed(f.from_int(2)).unwrap();
        assert_eq!(char_value(big, phi2, two).unwrap(), CycloNum::one(24));
        for m in 0..4 {
            for r in [2, 3] {
                let (_, l) = lift_norm(&f, MultChar::new(5, m), r).unwrap();
                assert_eq!(l.order(), MultChar::new(5, m).order());
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_char(13, "chi^5").unwrap(), MultChar::new(13, 5));
        assert_eq!(parse_char(13, "order:4,index:1").unwrap(), MultChar::new(13, 3));
        assert_eq!(parse_char(13, "-1").unwrap(), MultChar::new(13, 11));
        assert!(parse_char(13, "order:5,index:1").is_err());
    }
}
