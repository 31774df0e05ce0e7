//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! An element is stored as an integer vector in the power basis
//! `1, z, .., z^{phi(M)-1}` (reduced mod the cyclotomic polynomial) over a
//! single positive denominator, with the content made coprime to the
//! denominator. That form is canonical, so equality is coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::config;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    crate::field::factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / crate::field::gcd(a, b) * b
}

/// Cached cyclotomic polynomial data.
pub struct CycloPoly {
    order: u32,
    /// Monic, low-to-high, length `phi + 1`.
    coeffs: Vec<i64>,
    /// Nonzero entries among the first `phi` coefficients.
    tail: Vec<(usize, i64)>,
}

impl CycloPoly {
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<CycloPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_M` as integer coefficients low-to-high.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<i64>> {
    Ok(cyclo_poly(m)?.coeffs.clone())
}

/// `Phi_M`, computed as `(x^M - 1) / prod_{d | M, d < M} Phi_d` and cached.
pub fn cyclo_poly(m: u32) -> Result<Arc<CycloPoly>> {
    if m == 0 {
        return Err(Error::Invalid("cyclotomic order must be positive".into()));
    }
    let phi = euler_phi(m as u64);
    if phi > config::DEFAULT_PHI_MAX {
        return Err(Error::BudgetExceeded(format!(
            "phi({m}) = {phi} exceeds the cyclotomic budget {}",
            config::DEFAULT_PHI_MAX
        )));
    }
    if let Some(p) = poly_cache().lock().unwrap().get(&m) {
        return Ok(p.clone());
    }
    let mut num: Vec<i128> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let pd = cyclo_poly(d)?;
            num = exact_div(&num, &pd.coeffs);
        }
    }
    let coeffs: Vec<i64> = num.iter().map(|&c| c as i64).collect();
    debug_assert_eq!(coeffs.len() as u64, phi + 1);
    let tail = coeffs[..coeffs.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let p = Arc::new(CycloPoly {
        order: m,
        coeffs,
        tail,
    });
    poly_cache().lock().unwrap().insert(m, p.clone());
    Ok(p)
}

fn exact_div(a: &[i128], b: &[i64]) -> Vec<i128> {
    // b monic
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let dq = a.len() - 1 - db;
    let mut q = vec![0i128; dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db];
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] -= c * bi as i128;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Reduce `v` modulo the monic `Phi`, in place, with overflow detection.
fn reduce_i128(v: &mut Vec<i128>, p: &CycloPoly) -> bool {
    let d = p.degree();
    for k in (d..v.len()).rev() {
        let c = v[k];
        if c != 0 {
            v[k] = 0;
            let base = k - d;
            for &(i, pi) in &p.tail {
                let t = match c.checked_mul(pi as i128) {
                    Some(t) => t,
                    None => return false,
                };
                match v[base + i].checked_sub(t) {
                    Some(x) => v[base + i] = x,
                    None => return false,
                }
            }
        }
    }
    v.truncate(d);
    v.resize(d, 0);
    true
}

fn reduce_big(v: &mut Vec<BigInt>, p: &CycloPoly) {
    let d = p.degree();
    for k in (d..v.len()).rev() {
        if !v[k].is_zero() {
            let c = std::mem::take(&mut v[k]);
            let base = k - d;
            for &(i, pi) in &p.tail {
                v[base + i] -= &c * pi;
            }
        }
    }
    v.truncate(d);
    v.resize(d, BigInt::zero());
}

#[derive(Clone)]
pub struct CycloNum {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    fn raw(order: u32, num: Vec<BigInt>, den: BigInt) -> CycloNum {
        let mut c = CycloNum { order, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for x in &mut self.num {
                *x = -std::mem::take(x);
            }
        }
        if self.num.iter().all(|x| x.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for x in &self.num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            for x in &mut self.num {
                *x /= &g;
            }
            self.den /= &g;
        }
    }

    fn dim(order: u32) -> Result<usize> {
        Ok(cyclo_poly(order)?.degree())
    }

    pub fn zero(order: u32) -> CycloNum {
        let d = Self::dim(order).expect("cyclotomic order within budget");
        CycloNum {
            order,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> CycloNum {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, n: i64) -> CycloNum {
        Self::from_bigint(order, BigInt::from(n))
    }

    pub fn from_bigint(order: u32, n: BigInt) -> CycloNum {
        let mut z = Self::zero(order);
        z.num[0] = n;
        z
    }

    pub fn from_ratio(order: u32, a: i64, b: i64) -> Result<CycloNum> {
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(a);
        z.den = BigInt::from(b);
        z.normalize();
        Ok(z)
    }

    pub fn from_rational(order: u32, r: &BigRational) -> CycloNum {
        let mut z = Self::zero(order);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// `zeta_M^k`.
    pub fn zeta(order: u32, k: i64) -> CycloNum {
        let mut v = vec![0i64; order as usize];
        v[k.rem_euclid(order as i64) as usize] = 1;
        Self::from_counts(order, &v)
    }

    /// `sum_k counts[k] zeta_M^k` for a vector indexed by exponent mod `M`.
    pub fn from_counts(order: u32, counts: &[i64]) -> CycloNum {
        let p = cyclo_poly(order).expect("cyclotomic order within budget");
        let mut v: Vec<i128> = vec![0; counts.len().max(p.degree())];
        for (i, &c) in counts.iter().enumerate() {
            v[i] = c as i128;
        }
        if reduce_i128(&mut v, &p) {
            return CycloNum {
                order,
                num: v.into_iter().map(BigInt::from).collect(),
                den: BigInt::one(),
            };
        }
        let mut w: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        w.resize(w.len().max(p.degree()), BigInt::zero());
        reduce_big(&mut w, &p);
        CycloNum {
            order,
            num: w,
            den: BigInt::one(),
        }
    }

    /// Element from rational coefficients in the (unreduced) power basis.
    pub fn from_rationals(order: u32, coeffs: &[BigRational]) -> Result<CycloNum> {
        let p = cyclo_poly(order)?;
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut v: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        v.resize(v.len().max(p.degree()), BigInt::zero());
        reduce_big(&mut v, &p);
        Ok(Self::raw(order, v, den))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|x| x.is_zero())
    }

    /// Canonical coefficients as reduced rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    /// True when every canonical coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Canonical coefficients when integral and within `i64`.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        if !self.den.is_one() {
            return None;
        }
        self.small_num()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|x| x.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn as_rational_integer(&self) -> Result<BigInt> {
        match self.as_rational() {
            Some(r) if r.is_integer() => Ok(r.to_integer()),
            _ => Err(Error::NotInteger),
        }
    }

    pub fn as_i64(&self) -> Result<i64> {
        self.as_rational_integer()?.to_i64().ok_or(Error::NotInteger)
    }

    fn lifted_pair(&self, other: &CycloNum) -> (CycloNum, CycloNum) {
        let m = lcm(self.order, other.order);
        (
            self.embed(m).expect("lcm is a multiple"),
            other.embed(m).expect("lcm is a multiple"),
        )
    }

    /// Image under `zeta_M -> zeta_{M'}^{M'/M}`.
    pub fn embed(&self, target: u32) -> Result<CycloNum> {
        if target == self.order {
            return Ok(self.clone());
        }
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::NotAMultiple {
                order: self.order,
                target,
            });
        }
        let t = (target / self.order) as usize;
        let p = cyclo_poly(target)?;
        if let Some(small) = self.small_num() {
            let mut v: Vec<i128> = vec![0; target as usize];
            for (i, c) in small.iter().enumerate() {
                v[i * t] = *c as i128;
            }
            if reduce_i128(&mut v, &p) {
                return Ok(CycloNum {
                    order: target,
                    num: v.into_iter().map(BigInt::from).collect(),
                    den: self.den.clone(),
                });
            }
        }
        let mut v = vec![BigInt::zero(); target as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[i * t] = c.clone();
        }
        reduce_big(&mut v, &p);
        Ok(CycloNum {
            order: target,
            num: v,
            den: self.den.clone(),
        })
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CycloNum {
        let m = self.order as usize;
        let p = cyclo_poly(self.order).expect("order already validated");
        if let Some(small) = self.small_num() {
            let mut v: Vec<i128> = vec![0; m.max(p.degree())];
            for (i, c) in small.iter().enumerate() {
                v[(m - i) % m] += *c as i128;
            }
            if reduce_i128(&mut v, &p) {
                return CycloNum {
                    order: self.order,
                    num: v.into_iter().map(BigInt::from).collect(),
                    den: self.den.clone(),
                };
            }
        }
        let mut v = vec![BigInt::zero(); m.max(p.degree())];
        for (i, c) in self.num.iter().enumerate() {
            v[(m - i) % m] += c;
        }
        reduce_big(&mut v, &p);
        CycloNum {
            order: self.order,
            num: v,
            den: self.den.clone(),
        }
    }

    /// Multiply by `zeta_M^k`.
    pub fn mul_zeta(&self, k: i64) -> CycloNum {
        let m = self.order as usize;
        let k = k.rem_euclid(m as i64) as usize;
        if k == 0 {
            return self.clone();
        }
        let p = cyclo_poly(self.order).expect("order already validated");
        let mut v = vec![BigInt::zero(); m.max(p.degree())];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[(i + k) % m] += c;
            }
        }
        reduce_big(&mut v, &p);
        CycloNum {
            order: self.order,
            num: v,
            den: self.den.clone(),
        }
    }

    fn small_num(&self) -> Option<Vec<i64>> {
        self.num.iter().map(|x| x.to_i64()).collect()
    }

    fn add_impl(&self, other: &CycloNum, sign: i32) -> CycloNum {
        if self.order != other.order {
            let (a, b) = self.lifted_pair(other);
            return a.add_impl(&b, sign);
        }
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if sign > 0 { a + b } else { a - b })
                .collect();
            return Self::raw(self.order, num, self.den.clone());
        }
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                if sign > 0 {
                    a * &fa + b * &fb
                } else {
                    a * &fa - b * &fb
                }
            })
            .collect();
        Self::raw(self.order, num, l)
    }

    fn mul_impl(&self, other: &CycloNum) -> CycloNum {
        if self.order != other.order {
            let (a, b) = self.lifted_pair(other);
            return a.mul_impl(&b);
        }
        let p = cyclo_poly(self.order).expect("order already validated");
        let d = p.degree();
        let den = &self.den * &other.den;
        if let (Some(a), Some(b)) = (self.small_num(), other.small_num()) {
            if let Some(v) = mul_small(&a, &b, &p) {
                return Self::raw(self.order, v.into_iter().map(BigInt::from).collect(), den);
            }
        }
        let mut v = vec![BigInt::zero(); 2 * d];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        reduce_big(&mut v, &p);
        Self::raw(self.order, v, den)
    }

    pub fn scale(&self, n: i64) -> CycloNum {
        let num = self.num.iter().map(|x| x * n).collect();
        Self::raw(self.order, num, self.den.clone())
    }

    pub fn div_int(&self, n: i64) -> Result<CycloNum> {
        if n == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::raw(self.order, self.num.clone(), &self.den * n))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // fast path: a * conj(a) rational
        let c = self.conj();
        let n = self.mul_impl(&c);
        if let Some(r) = n.as_rational() {
            let inv_r = CycloNum::from_rational(self.order, &r.recip());
            return Ok(c.mul_impl(&inv_r));
        }
        let p = cyclo_poly(self.order)?;
        let a: Vec<BigRational> = self.coeffs();
        let m: Vec<BigRational> = p
            .coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let inv = poly_inverse_mod(&a, &m).ok_or(Error::DivisionByZero)?;
        CycloNum::from_rationals(self.order, &inv)
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self.mul_impl(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<CycloNum> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycloNum::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        Ok(acc)
    }

    /// True when `self` is a root of unity (checked exactly).
    pub fn is_root_of_unity(&self) -> bool {
        if !self.is_integral() || self.is_zero() {
            return false;
        }
        let m = lcm(self.order, 2) as i64;
        self.pow(m).map(|x| x.is_one()).unwrap_or(false)
    }

    /// Floating-point image under `zeta_M = exp(2 pi i / M)`. Double precision
    /// caps the useful `digits` at about 15; the argument is accepted for API
    /// symmetry.
    pub fn to_complex(&self, _digits: u32) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut acc = Complex64::new(0.0, 0.0);
        let step = 2.0 * std::f64::consts::PI / self.order as f64;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::from_polar(cf, step * i as f64);
        }
        acc / den
    }

    /// Report form `{"order": M, "coeffs": [["num","den"], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn mul_small(a: &[i64], b: &[i64], p: &CycloPoly) -> Option<Vec<i128>> {
    let amax = a.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
    let bmax = b.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
    let bound = amax.checked_mul(bmax)?.checked_mul(a.len() as u128)?;
    if bound >= (1u128 << 100) {
        return None;
    }
    let d = p.degree();
    let mut v = vec![0i128; 2 * d];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (j, &y) in b.iter().enumerate() {
            v[i + j] += x * y as i128;
        }
    }
    if reduce_i128(&mut v, p) {
        Some(v)
    } else {
        None
    }
}

fn rtrim(v: &mut Vec<BigRational>) {
    while v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn rpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rtrim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lead = b[db].clone();
    while r.len() >= b.len() {
        let k = r.len() - 1;
        let c = &r[k] / &lead;
        let shift = k - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        rtrim(&mut r);
    }
    (q, r)
}

fn rpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn rpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut v = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        v[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        v[i] -= x;
    }
    rtrim(&mut v);
    v
}

/// Inverse of `a` modulo `m` over `Q` by the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    rtrim(&mut r1);
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
        (vec![], vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = rpoly_divrem(&r0, &r1);
        let s = rpoly_sub(&s0, &rpoly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &CycloNum) -> bool {
        if self.order == other.order {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = self.lifted_pair(other);
            a == b
        }
    }
}
impl Eq for CycloNum {}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<'a> $tr<&'a CycloNum> for &'a CycloNum {
            type Output = CycloNum;
            fn $f(self, rhs: &'a CycloNum) -> CycloNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $f(self, rhs: CycloNum) -> CycloNum {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $f(self, rhs: &'a CycloNum) -> CycloNum {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<CycloNum> for &'a CycloNum {
            type Output = CycloNum;
            fn $f(self, rhs: CycloNum) -> CycloNum {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &CycloNum, b: &CycloNum| a.add_impl(b, 1));
binop!(Sub, sub, |a: &CycloNum, b: &CycloNum| a.add_impl(b, -1));
binop!(Mul, mul, |a: &CycloNum, b: &CycloNum| a.mul_impl(b));

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(-1)
    }
}
impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(-1)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    /// Power-basis form in `z = zeta_M`, e.g. `(1 - 2*z^3)/5 [M=12]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match i {
                0 => s.push_str(&a.to_string()),
                _ => {
                    if !a.is_one() {
                        s.push_str(&format!("{a}*"));
                    }
                    if i == 1 {
                        s.push('z');
                    } else {
                        s.push_str(&format!("z^{i}"));
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        if self.den.is_one() {
            write!(f, "{s} [M={}]", self.order)
        } else {
            write!(f, "({s})/{} [M={}]", self.den, self.order)
        }
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<[String; 2]> = self
            .coeffs()
            .into_iter()
            .map(|r| [r.numer().to_string(), r.denom().to_string()])
            .collect();
        let mut st = s.serialize_struct("CycloNum", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polys() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(7).unwrap(), vec![1; 7]);
    }

    #[test]
    fn small_identities() {
        let z4 = CycloNum::zeta(4, 1);
        let one = CycloNum::one(4);
        assert_eq!((&one + &z4) * (&one - &z4), CycloNum::from_int(4, 2));
        let z3 = CycloNum::zeta(3, 1);
        assert_eq!(&CycloNum::one(3) + &z3, CycloNum::zeta(6, 1));
        assert_eq!(
            (&z3 + &CycloNum::zeta(3, 2)).as_rational_integer().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(z3.as_rational_integer(), Err(Error::NotInteger));
        let z5 = CycloNum::zeta(5, 1);
        assert_eq!(z5.inv().unwrap(), CycloNum::zeta(5, 4));
        assert_eq!(z5.conj(), CycloNum::zeta(5, 4));
    }

    #[test]
    fn embeddings() {
        assert_eq!(CycloNum::zeta(2, 1).embed(4).unwrap(), CycloNum::from_int(4, -1));
        assert_eq!(CycloNum::zeta(3, 1).embed(12).unwrap(), CycloNum::zeta(12, 4));
        assert_eq!(
            CycloNum::zeta(3, 1).embed(10),
            Err(Error::NotAMultiple { order: 3, target: 10 })
        );
    }

    #[test]
    fn general_inverse() {
        // 2 + z has non-rational norm in Q(zeta_7) x conj
        let a = &CycloNum::from_int(7, 2) + &CycloNum::zeta(7, 1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(CycloNum::zero(7).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn complex_image() {
        let i = CycloNum::zeta(4, 1).to_complex(12);
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let r = CycloNum::zeta(12, 4) - CycloNum::zeta(12, 2) + CycloNum::one(12);
        assert!(r.to_complex(10).norm() < 1e-10);
    }

    #[test]
    fn json_form() {
        let x = CycloNum::from_ratio(3, 2, 6).unwrap() + CycloNum::zeta(3, 1);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"order":3,"coeffs":[["1","3"],["1","1"]]}"#
        );
    }
}
