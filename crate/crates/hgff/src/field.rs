//! Finite fields F_{p^e} in a polynomial basis, with exp/log tables against a
//! canonical generator, traces to the prime field and norms to subfields.
//!
//! Elements are encoded as integers `sum c_i p^i` where `c_i` is the coefficient
//! of `t^i` in the polynomial basis. The modulus is the lexicographically
//! smallest monic irreducible polynomial (scan in ascending encoding of
//! `(c_0, .., c_{e-1})`) and the generator is the smallest encoding of exact
//! order `q - 1`, so two constructions of the same field always agree.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::config;
use crate::error::{Error, Result};

/// Deterministic primality test (trial division; fine for `n < 2^32` and a bit beyond).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation in ascending order of primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Split a prime power into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// polynomials over F_p, coefficient vectors low-to-high

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1;
        let c = (r[k] as u64 * lead_inv as u64 % p as u64) as u32;
        if c != 0 {
            let shift = k - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = (c as u64 * mi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut v: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    trim(&mut v);
    v
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    // h = x^{p^i} mod f, for i = 1 .. e-1
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..e {
        h = poly_powmod(&h, p as u64, f, p);
        let mut d = h.clone();
        d.resize(d.len().max(2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(&mut d);
        let g = poly_gcd(f, &d, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn poly_powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut r = vec![1u32];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_rem(&poly_mul(&r, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

fn digits(mut v: u64, p: u64, e: usize) -> Vec<u32> {
    let mut out = vec![0u32; e];
    for d in out.iter_mut() {
        *d = (v % p) as u32;
        v /= p;
    }
    out
}

fn undigits(c: &[u32], p: u64) -> u64 {
    c.iter().rev().fold(0u64, |acc, &d| acc * p + d as u64)
}

// ---------------------------------------------------------------------------

/// An element of some `F_q`, tagged with `q` so that mixing fields is caught.
/// Fields of equal size are identical by construction, so `q` identifies the owner.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    q: u32,
    v: u32,
}

impl FieldElement {
    /// Size of the owning field.
    pub fn q(self) -> u32 {
        self.q
    }
    /// Integer encoding `sum c_i p^i`.
    pub fn raw(self) -> u32 {
        self.v
    }
    pub fn is_zero(self) -> bool {
        self.v == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[{}]", self.q, self.v)
    }
}

pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    one_minus: Vec<u32>,
    neg: Vec<u32>,
    trace: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

const NO_LOG: u32 = u32::MAX;

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<FiniteField>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<FiniteField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Build (or fetch from the process cache) `F_{p^e}` under the default budget.
pub fn construct_field(p: u64, e: u32) -> Result<Arc<FiniteField>> {
    FiniteField::new(p, e)
}

impl FiniteField {
    /// `F_{p^e}`, cached, with the budget from [`config::q_max`].
    pub fn new(p: u64, e: u32) -> Result<Arc<FiniteField>> {
        Self::new_with_budget(p, e, config::q_max())
    }

    /// `F_q` for a prime power `q`.
    pub fn from_q(q: u64) -> Result<Arc<FiniteField>> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, e)
    }

    pub fn new_with_budget(p: u64, e: u32, q_max: u64) -> Result<Arc<FiniteField>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > q_max as u128 || q > u32::MAX as u128 / 2 {
            return Err(Error::BudgetExceeded(format!(
                "q = {p}^{e} exceeds the field budget {q_max}"
            )));
        }
        let key = (p as u32, e);
        if let Some(f) = field_cache().lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let f = Arc::new(Self::build(p as u32, e));
        field_cache().lock().unwrap().insert(key, f.clone());
        Ok(f)
    }

    fn build(p: u32, e: u32) -> FiniteField {
        let q = p.pow(e);
        let ue = e as usize;
        let modulus = {
            let mut found = None;
            for enc in 0..q as u64 {
                let mut f = digits(enc, p as u64, ue);
                f.push(1);
                if is_irreducible(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("an irreducible polynomial of every degree exists")
        };
        let n = (q - 1) as u64;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(l, _)| l).collect();
        let mut generator = 0;
        for enc in 1..q as u64 {
            let x = digits(enc, p as u64, ue);
            let ok = primes.iter().all(|&l| {
                let y = poly_powmod(&x, n / l, &modulus, p);
                !(y.len() == 1 && y[0] == 1)
            });
            if ok {
                generator = enc as u32;
                break;
            }
        }
        if q == 2 {
            generator = 1;
        }
        let gpoly = digits(generator as u64, p as u64, ue);
        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = vec![1u32];
        for k in 0..n {
            let mut c = cur.clone();
            c.resize(ue, 0);
            let enc = undigits(&c, p as u64) as u32;
            exp.push(enc);
            log[enc as usize] = k as u32;
            cur = poly_rem(&poly_mul(&cur, &gpoly, p), &modulus, p);
        }
        let add = |a: u32, b: u32| -> u32 { add_enc(a, b, p, ue) };
        let neg: Vec<u32> = (0..q).map(|a| neg_enc(a, p, ue)).collect();
        let one_minus: Vec<u32> = (0..q).map(|a| add(1, neg[a as usize])).collect();
        // Tr(sum c_i t^i) = sum c_i Tr(t^i); Tr(t^i) computed as sum_j (t^i)^{p^j}
        let mut basis_trace = vec![0u32; ue];
        for (i, bt) in basis_trace.iter_mut().enumerate() {
            let mut ti = vec![0u32; i + 1];
            ti[i] = 1;
            let ti = poly_rem(&ti, &modulus, p);
            let mut acc = 0u32;
            let mut cur = ti.clone();
            for _ in 0..e {
                let mut c = cur.clone();
                c.resize(ue, 0);
                acc = add(acc, undigits(&c, p as u64) as u32);
                cur = poly_powmod(&cur, p as u64, &modulus, p);
            }
            debug_assert!(acc < p);
            *bt = acc;
        }
        let trace: Vec<u32> = (0..q)
            .map(|a| {
                let d = digits(a as u64, p as u64, ue);
                let s: u64 = d
                    .iter()
                    .zip(&basis_trace)
                    .map(|(&c, &t)| c as u64 * t as u64)
                    .sum();
                (s % p as u64) as u32
            })
            .collect();
        FiniteField {
            p,
            e,
            q,
            modulus,
            generator,
            exp,
            log,
            one_minus,
            neg,
            trace,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Monic modulus, coefficients low-to-high (length `e + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn generator(&self) -> FieldElement {
        self.el(self.generator)
    }

    fn el(&self, v: u32) -> FieldElement {
        FieldElement { q: self.q, v }
    }

    fn own(&self, x: FieldElement) -> Result<u32> {
        if x.q != self.q {
            Err(Error::FieldMismatch(self.q, x.q))
        } else {
            Ok(x.v)
        }
    }

    /// Element with integer encoding `v`.
    pub fn element(&self, v: u32) -> Result<FieldElement> {
        if v >= self.q {
            return Err(Error::Invalid(format!("{v} is not an encoding in F_{}", self.q)));
        }
        Ok(self.el(v))
    }

    /// Wrap a raw encoding known to be in range.
    pub fn wrap(&self, v: u32) -> FieldElement {
        debug_assert!(v < self.q);
        self.el(v)
    }

    pub fn zero(&self) -> FieldElement {
        self.el(0)
    }
    pub fn one(&self) -> FieldElement {
        self.el(1)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.el(n.rem_euclid(self.p as i64) as u32)
    }

    /// `a / b` for integers, `None` when `b` vanishes in the field.
    pub fn from_ratio(&self, a: i64, b: i64) -> Option<FieldElement> {
        let b = self.from_int(b);
        if b.is_zero() {
            return None;
        }
        Some(self.el(self.div_raw(self.from_int(a).v, b.v)))
    }

    pub fn from_coeffs(&self, c: &[i64]) -> Result<FieldElement> {
        if c.len() > self.e as usize {
            return Err(Error::Invalid(format!(
                "{} coefficients given for a degree-{} field",
                c.len(),
                self.e
            )));
        }
        let d: Vec<u32> = c
            .iter()
            .map(|&x| x.rem_euclid(self.p as i64) as u32)
            .collect();
        Ok(self.el(undigits(&d, self.p as u64) as u32))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        digits(x.v as u64, self.p as u64, self.e as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| self.el(v))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(move |v| self.el(v))
    }

    // -- raw encoding arithmetic (hot paths) --------------------------------

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            // a + b = a (1 - (-b/a))
            let t = self.div_raw(self.neg[b as usize], a);
            self.mul_raw(a, self.one_minus[t as usize])
        }
    }
    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }
    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg[b as usize])
    }
    #[inline]
    pub fn one_minus_raw(&self, a: u32) -> u32 {
        self.one_minus[a as usize]
    }
    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % n as u64) as usize]
    }
    /// Panics on division by zero; callers guarantee `b != 0`.
    #[inline]
    pub fn div_raw(&self, a: u32, b: u32) -> u32 {
        assert!(b != 0, "division by zero");
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = self.log[a as usize] as u64 + n as u64 - self.log[b as usize] as u64;
        self.exp[(s % n as u64) as usize]
    }
    /// Discrete log, `None` at zero.
    #[inline]
    pub fn log_raw(&self, a: u32) -> Option<u32> {
        let l = self.log[a as usize];
        if l == NO_LOG {
            None
        } else {
            Some(l)
        }
    }
    #[inline]
    pub fn exp_raw(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }
    pub fn pow_raw(&self, a: u32, k: i64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as i64;
        let l = self.log[a as usize] as i64;
        self.exp[((l * k.rem_euclid(n)) % n) as usize]
    }
    #[inline]
    pub fn trace_raw(&self, a: u32) -> u32 {
        self.trace[a as usize]
    }

    // -- checked element API ------------------------------------------------

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.el(self.add_raw(self.own(a)?, self.own(b)?)))
    }
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.el(self.sub_raw(self.own(a)?, self.own(b)?)))
    }
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.el(self.mul_raw(self.own(a)?, self.own(b)?)))
    }
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let (a, b) = (self.own(a)?, self.own(b)?);
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.el(self.div_raw(a, b)))
    }
    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        Ok(self.el(self.neg_raw(self.own(a)?)))
    }
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.div(self.one(), a)
    }
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        let a = self.own(a)?;
        if a == 0 && k < 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.el(self.pow_raw(a, k)))
    }

    /// `k` in `[0, q-2]` with `g^k = x`.
    pub fn dlog(&self, x: FieldElement) -> Result<u32> {
        self.log_raw(self.own(x)?).ok_or(Error::LogOfZero)
    }

    /// `g^k`.
    pub fn exp(&self, k: i64) -> FieldElement {
        let n = (self.q - 1) as i64;
        self.el(self.exp[k.rem_euclid(n) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: FieldElement) -> Result<u32> {
        let l = self.dlog(x)?;
        Ok((self.q - 1) / gcd(l, self.q - 1))
    }

    /// `x + x^p + ... + x^{p^{e-1}}` as an element of `F_p`.
    pub fn trace_to_prime(&self, x: FieldElement) -> Result<FieldElement> {
        let t = self.trace_raw(self.own(x)?);
        Ok(FieldElement { q: self.p, v: t })
    }

    /// All `w` with `w^n = x`, in ascending encoding.
    pub fn nth_roots(&self, x: FieldElement, n: u32) -> Result<Vec<FieldElement>> {
        let x = self.own(x)?;
        if n == 0 {
            return Err(Error::Invalid("root of order zero".into()));
        }
        if x == 0 {
            return Ok(vec![self.zero()]);
        }
        let m = (self.q - 1) as u64;
        let l = self.log[x as usize] as u64;
        let d = gcd64(n as u64, m);
        if !l.is_multiple_of(d) {
            return Ok(Vec::new());
        }
        let mut out: Vec<FieldElement> = (0..m)
            .filter(|k| (k * n as u64) % m == l)
            .map(|k| self.el(self.exp[k as usize]))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn is_square(&self, x: FieldElement) -> Result<bool> {
        Ok(!self.nth_roots(x, 2)?.is_empty())
    }

    /// Order-sensitive checksums of the exp and log tables.
    pub fn table_checksums(&self) -> (u64, u64) {
        let mut a = 0xcbf29ce484222325u64;
        for &v in &self.exp {
            a = (a ^ v as u64).wrapping_mul(0x100000001b3);
        }
        let mut b = 0xcbf29ce484222325u64;
        for &v in &self.log {
            b = (b ^ v as u64).wrapping_mul(0x100000001b3);
        }
        (a, b)
    }

    /// Log form `g^k`, or `0`.
    pub fn format(&self, x: FieldElement) -> String {
        match self.log_raw(x.v) {
            None => "0".to_string(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// Polynomial form, e.g. `2*t^1 + 1`.
    pub fn format_poly(&self, x: FieldElement) -> String {
        let c = self.coeffs(x);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| match i {
                0 => format!("{v}"),
                1 => format!("{v}*t"),
                _ => format!("{v}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Parse `g^k`, an integer or ratio `a/b` (prime-field image), or a
    /// coefficient list `[c0,c1,..]`.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("cannot parse field element '{s}'"));
        if let Some(k) = s.strip_prefix("g^") {
            let k: i64 = k.trim().parse().map_err(|_| bad())?;
            return Ok(self.exp(k));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let c: std::result::Result<Vec<i64>, _> = inner
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<i64>())
                .collect();
            return self.from_coeffs(&c.map_err(|_| bad())?);
        }
        if let Some((a, b)) = s.split_once('/') {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            return self.from_ratio(a, b).ok_or(Error::DivisionByZero);
        }
        let n: i64 = s.parse().map_err(|_| bad())?;
        Ok(self.from_int(n))
    }
}

fn add_enc(a: u32, b: u32, p: u32, e: usize) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut place = 1u32;
    for _ in 0..e {
        let d = (a % p + b % p) % p;
        out += d * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

fn neg_enc(a: u32, p: u32, e: usize) -> u32 {
    let mut a = a;
    let mut out = 0u32;
    let mut place = 1u32;
    for _ in 0..e {
        let d = (p - a % p) % p;
        out += d * place;
        a /= p;
        place = place.wrapping_mul(p);
    }
    out
}

pub fn gcd(a: u32, b: u32) -> u32 {
    gcd64(a as u64, b as u64) as u32
}

pub fn gcd64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------

/// `F_{q^r}` built as `F_{p^{er}}` together with the embedding of `F_q`.
///
/// The embedding sends the basis root `t` of the small modulus to its root in
/// the big field with the smallest encoding.
pub struct Extension {
    base: Arc<FiniteField>,
    big: Arc<FiniteField>,
    r: u32,
    embed: Vec<u32>,
    /// `N(G) = g^norm_log` for the big and small generators `G`, `g`.
    norm_log: u64,
}

fn ext_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Extension>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Extension>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Extension {
    pub fn new(base: &Arc<FiniteField>, r: u32) -> Result<Arc<Extension>> {
        if r == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let big = FiniteField::new(base.p as u64, base.e * r)?;
        let key = (base.q, r);
        if let Some(x) = ext_cache().lock().unwrap().get(&key) {
            return Ok(x.clone());
        }
        let ext = Arc::new(Self::build(base.clone(), big, r));
        ext_cache().lock().unwrap().insert(key, ext.clone());
        Ok(ext)
    }

    fn build(base: Arc<FiniteField>, big: Arc<FiniteField>, r: u32) -> Extension {
        let m = &base.modulus;
        let eval = |theta: u32| -> u32 {
            // Horner: sum m_i theta^i
            let mut acc = 0u32;
            for &c in m.iter().rev() {
                acc = big.add_raw(big.mul_raw(acc, theta), c);
            }
            acc
        };
        let theta = if base.e == 1 {
            // t = -m_0 lies in the prime field
            big.neg_raw(m[0])
        } else {
            (0..big.q).find(|&t| eval(t) == 0).expect("modulus splits in the extension")
        };
        let embed: Vec<u32> = (0..base.q)
            .map(|v| {
                let c = base.coeffs(base.el(v));
                let mut acc = 0u32;
                for &ci in c.iter().rev() {
                    acc = big.add_raw(big.mul_raw(acc, theta), ci);
                }
                acc
            })
            .collect();
        let s = (big.q as u64 - 1) / (base.q as u64 - 1);
        let ngen = big.exp_raw(s);
        let y = embed
            .iter()
            .position(|&v| v == ngen)
            .expect("norm of the generator lies in the subfield");
        let norm_log = base.log[y] as u64;
        Extension {
            base,
            big,
            r,
            embed,
            norm_log,
        }
    }

    pub fn base(&self) -> &Arc<FiniteField> {
        &self.base
    }
    pub fn big(&self) -> &Arc<FiniteField> {
        &self.big
    }
    pub fn degree(&self) -> u32 {
        self.r
    }
    /// `t` with `N(G^k) = g^{k t}`.
    pub fn norm_log(&self) -> u64 {
        self.norm_log
    }

    pub fn embed(&self, x: FieldElement) -> Result<FieldElement> {
        let v = self.base.own(x)?;
        Ok(self.big.el(self.embed[v as usize]))
    }

    #[inline]
    pub fn embed_raw(&self, v: u32) -> u32 {
        self.embed[v as usize]
    }

    /// `N(x) = x^{(Q-1)/(q-1)}`, returned in the base field.
    pub fn norm(&self, x: FieldElement) -> Result<FieldElement> {
        if x.q != self.big.q {
            return Err(Error::NotASubfieldPair {
                big: x.q,
                small: self.base.q,
            });
        }
        match self.big.log_raw(x.v) {
            None => Ok(self.base.zero()),
            Some(k) => Ok(self.base.el(self.base.exp_raw(k as u64 * self.norm_log))),
        }
    }
}

/// Norm from `F_{q^r}` (the field owning `x`) down to `target = F_q`.
pub fn norm_to_subfield(x: FieldElement, target: &Arc<FiniteField>) -> Result<FieldElement> {
    let (q, big) = (target.q as u64, x.q as u64);
    let mut r = 1u32;
    let mut acc = q;
    while acc < big {
        acc *= q;
        r += 1;
    }
    if acc != big {
        return Err(Error::NotASubfieldPair {
            big: x.q,
            small: target.q,
        });
    }
    Extension::new(target, r)?.norm(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_generator_is_two() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.generator().raw(), 2);
    }

    #[test]
    fn f9_modulus() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(t, t).unwrap(), f.from_int(2));
    }

    #[test]
    fn composite_rejected() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn arithmetic_and_logs() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.mul(f.from_int(3), f.from_int(4)).unwrap(), f.from_int(2));
        assert_eq!(f.div(f.one(), f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.dlog(f.one()).unwrap(), 0);
        assert_eq!(f.dlog(f.from_int(4)).unwrap(), 2);
        assert_eq!(f.dlog(f.zero()), Err(Error::LogOfZero));
    }

    #[test]
    fn traces() {
        let f = FiniteField::new(3, 2).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.trace_to_prime(t).unwrap().raw(), 0);
        assert_eq!(f.trace_to_prime(f.one()).unwrap().raw(), 2);
        let g = FiniteField::new(7, 1).unwrap();
        for x in g.elements() {
            assert_eq!(g.trace_to_prime(x).unwrap().raw(), x.raw());
        }
    }

    #[test]
    fn norm_f25_over_f5() {
        let f5 = FiniteField::new(5, 1).unwrap();
        let f25 = FiniteField::new(5, 2).unwrap();
        let g = f25.generator();
        let n = norm_to_subfield(g, &f5).unwrap();
        assert_eq!(f5.order(n).unwrap(), 4);
        let ext = Extension::new(&f5, 2).unwrap();
        assert_eq!(ext.embed(n).unwrap(), f25.pow(g, 6).unwrap());
        for x in f5.elements() {
            let y = ext.embed(x).unwrap();
            assert_eq!(ext.norm(y).unwrap(), f5.mul(x, x).unwrap());
        }
        assert_eq!(norm_to_subfield(f25.zero(), &f5).unwrap(), f5.zero());
    }

    #[test]
    fn mismatch_detected() {
        let a = FiniteField::new(5, 1).unwrap();
        let b = FiniteField::new(7, 1).unwrap();
        assert_eq!(a.add(a.one(), b.one()), Err(Error::FieldMismatch(5, 7)));
        let f49 = FiniteField::new(7, 2).unwrap();
        assert!(matches!(
            norm_to_subfield(f49.one(), &a),
            Err(Error::NotASubfieldPair { .. })
        ));
    }

    #[test]
    fn budget() {
        assert!(matches!(
            FiniteField::new_with_budget(3, 5, 100),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
