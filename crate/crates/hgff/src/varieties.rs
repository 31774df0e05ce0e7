//! Point counts on `y^N = prod x_s^{i_s} (1 - x_s)^{j_s} (1 - lambda x_1..x_n)^k`
//! and on generalized Legendre curves.
//!
//! The period formula `1 + q^n + sum_m P[..]` counts the affine points plus
//! one point at infinity; `count_via_periods` returns that total and
//! `count_affine_brute` the affine part alone.

use std::sync::Arc;

use serde::Serialize;

use crate::chars::{iota, MultChar, RationalParam};
use crate::config;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::field::{gcd64, FieldElement, FiniteField};
use crate::hyper::{HGSpec, HyperContext};

/// Points added by the period formula on top of the affine count.
pub const POINTS_AT_INFINITY: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HGVariety {
    pub n_exp: u32,
    pub i: Vec<i64>,
    pub j: Vec<i64>,
    pub k: i64,
    #[serde(skip)]
    pub lambda: FieldElement,
}

impl HGVariety {
    pub fn new(n_exp: u32, i: Vec<i64>, j: Vec<i64>, k: i64, lambda: FieldElement) -> Result<HGVariety> {
        if n_exp < 2 {
            return Err(Error::Invalid("N must be at least 2".into()));
        }
        if i.is_empty() || i.len() != j.len() {
            return Err(Error::Invalid("need n >= 1 and matching i, j lists".into()));
        }
        if i.iter().chain(&j).chain(std::iter::once(&k)).any(|&e| e < 1) {
            return Err(Error::Invalid("exponents must be positive".into()));
        }
        Ok(HGVariety { n_exp, i, j, k, lambda })
    }

    pub fn n(&self) -> usize {
        self.i.len()
    }

    fn rhs(&self, f: &FiniteField, xs: &[u32]) -> u32 {
        let mut r = f.one().raw();
        let mut prod = f.one().raw();
        for (s, &x) in xs.iter().enumerate() {
            r = f.mul_raw(r, f.pow_raw(x, self.i[s]));
            r = f.mul_raw(r, f.pow_raw(f.one_minus_raw(x), self.j[s]));
            prod = f.mul_raw(prod, x);
        }
        let t = f.one_minus_raw(f.mul_raw(self.lambda.raw(), prod));
        f.mul_raw(r, f.pow_raw(t, self.k))
    }

    fn for_each_point(&self, f: &FiniteField, mut visit: impl FnMut(u32)) -> Result<()> {
        let q = f.q() as u64;
        let n = self.n();
        let cost = q.checked_pow(n as u32).unwrap_or(u64::MAX);
        if cost.saturating_mul(self.n_exp as u64) > config::DEFAULT_SUM_MAX {
            return Err(Error::BudgetExceeded(format!("enumerating F_{q}^{n}")));
        }
        let mut xs = vec![0u32; n];
        loop {
            visit(self.rhs(f, &xs));
            let mut s = 0;
            loop {
                if s == n {
                    return Ok(());
                }
                xs[s] += 1;
                if xs[s] < f.q() {
                    break;
                }
                xs[s] = 0;
                s += 1;
            }
        }
    }
}

fn check_field(f: &FiniteField, x: FieldElement) -> Result<()> {
    if x.q() != f.q() {
        return Err(Error::FieldMismatch(x.q(), f.q()));
    }
    Ok(())
}

/// `#{(x, y) in F_q^{n+1} : y^N = R(x)}` by enumeration.
pub fn count_affine_brute(f: &FiniteField, v: &HGVariety) -> Result<i64> {
    check_field(f, v.lambda)?;
    let d = gcd64(v.n_exp as u64, f.q() as u64 - 1);
    let mut total = 0i64;
    v.for_each_point(f, |r| {
        total += match f.log_raw(r) {
            None => 1,
            Some(l) if (l as u64).is_multiple_of(d) => d as i64,
            Some(_) => 0,
        };
    })?;
    Ok(total)
}

/// Which value the trivial character takes at 0 when expanding the count
/// as a character sum.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TrivialAtZero {
    One,
    Zero,
}

/// Affine count as `sum_x sum_{m<N} eta^m(R(x))` under either convention
/// for `eps(0)`; with `eps(0) = 0` the `R(x) = 0` points are added back.
pub fn count_affine_characters(f: &FiniteField, v: &HGVariety, conv: TrivialAtZero) -> Result<i64> {
    check_field(f, v.lambda)?;
    let eta = order_n_char(f, v.n_exp)?;
    let n = f.q() - 1;
    let mut counts = vec![0i64; n as usize];
    let (mut zeros, mut nonzero) = (0i64, 0i64);
    v.for_each_point(f, |r| match f.log_raw(r) {
        None => zeros += 1,
        Some(l) => {
            nonzero += 1;
            for m in 1..v.n_exp as u64 {
                let e = eta.pow(m as i64).exponent() as u64 * l as u64 % n as u64;
                counts[e as usize] += 1;
            }
        }
    })?;
    let twisted = CycloNum::from_counts(n, &counts).as_i64()?;
    let q_n = (f.q() as i64).pow(v.n() as u32);
    Ok(match conv {
        // eps(R) = 1 at R = 0 supplies the single y = 0 solution
        TrivialAtZero::One => q_n + twisted,
        TrivialAtZero::Zero => nonzero + twisted + zeros,
    })
}

fn order_n_char(f: &FiniteField, n: u32) -> Result<MultChar> {
    iota(RationalParam::new(1, n as u64)?, f)
}

/// The `_{n+1}P_n` spec attached to `eta^m`.
pub fn period_spec(v: &HGVariety, eta: MultChar, m: i64) -> HGSpec {
    let n = v.n();
    let mut upper = vec![eta.pow(-m * v.k)];
    let mut lower = Vec::with_capacity(n);
    for s in (0..n).rev() {
        upper.push(eta.pow(m * v.i[s]));
        lower.push(eta.pow(m * (v.i[s] + v.j[s])));
    }
    HGSpec::new(upper, lower).expect("one field")
}

/// `1 + q^n + sum_{m=1}^{N-1} P[eta^{-mk}, eta^{m i_n}, ..; eta^{m(i_n+j_n)}, ..; lambda]`.
pub fn count_via_periods(f: &Arc<FiniteField>, v: &HGVariety) -> Result<i64> {
    check_field(f, v.lambda)?;
    let eta = order_n_char(f, v.n_exp)?;
    let h = HyperContext::new(f);
    let mut acc = CycloNum::zero(f.q() - 1);
    for m in 1..v.n_exp as i64 {
        acc = acc + h.period_direct(&period_spec(v, eta, m), v.lambda)?;
    }
    let main = 1 + (f.q() as i64).pow(v.n() as u32);
    Ok(main + acc.as_i64()?)
}

/// `y^N = x^i (1-x)^j (1 - lambda x)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GLCurve {
    pub n_exp: u32,
    pub i: i64,
    pub j: i64,
    pub k: i64,
    #[serde(skip)]
    pub lambda: FieldElement,
}

impl GLCurve {
    pub fn new(n_exp: u32, i: i64, j: i64, k: i64, lambda: FieldElement) -> Result<GLCurve> {
        let n = n_exp as i64;
        if n_exp < 2 || [i, j, k].iter().any(|&e| e <= 0 || e >= n) {
            return Err(Error::Invalid("need 0 < i, j, k < N".into()));
        }
        Ok(GLCurve { n_exp, i, j, k, lambda })
    }

    pub fn variety(&self) -> HGVariety {
        HGVariety {
            n_exp: self.n_exp,
            i: vec![self.i],
            j: vec![self.j],
            k: self.k,
            lambda: self.lambda,
        }
    }
}

/// `-sum_{m in (Z/N)^x} P[eta^{-mk}, eta^{mi}; eta^{m(i+j)}; lambda]`.
pub fn glc_trace(f: &Arc<FiniteField>, c: &GLCurve) -> Result<CycloNum> {
    check_field(f, c.lambda)?;
    let eta = order_n_char(f, c.n_exp)?;
    if c.lambda.is_zero() || c.lambda == f.one() {
        return Err(Error::DegenerateLambda(format!("lambda = {}", f.format(c.lambda))));
    }
    let h = HyperContext::new(f);
    let v = c.variety();
    let mut acc = CycloNum::zero(f.q() - 1);
    for m in 1..c.n_exp as i64 {
        if gcd64(m as u64, c.n_exp as u64) == 1 {
            acc = acc + h.period_direct(&period_spec(&v, eta, m), c.lambda)?;
        }
    }
    Ok(-acc)
}

/// `q + 1 + P[phi, phi; eps; lambda]`, the point count of
/// `y^2 = x (x-1)(x-lambda)` including the point at infinity.
pub fn legendre_count(f: &Arc<FiniteField>, lambda: FieldElement) -> Result<i64> {
    check_field(f, lambda)?;
    if lambda.is_zero() || lambda == f.one() {
        return Err(Error::DegenerateLambda(format!("lambda = {}", f.format(lambda))));
    }
    if f.q().is_multiple_of(2) {
        return Err(Error::Invalid("Legendre form needs odd q".into()));
    }
    let phi = MultChar::quadratic(f.q());
    let s = HGSpec::two_one(phi, phi, MultChar::trivial(f.q()));
    let p = HyperContext::new(f).period_direct(&s, lambda)?.as_i64()?;
    Ok(f.q() as i64 + 1 + p)
}

/// `1 + #{(x, y) : y^2 = x (x-1)(x-lambda)}` by enumeration.
pub fn legendre_count_brute(f: &FiniteField, lambda: FieldElement) -> i64 {
    let mut total = 1;
    for x in f.elements() {
        let a = f.mul_raw(x.raw(), f.sub_raw(x.raw(), 1));
        let r = f.mul_raw(a, f.sub_raw(x.raw(), lambda.raw()));
        total += match f.log_raw(r) {
            None => 1,
            Some(l) if l % 2 == 0 => 2,
            Some(_) => 0,
        };
    }
    total
}

/// `1 + N - (gcd(N,i+j+k) + gcd(N,i) + gcd(N,j) + gcd(N,k)) / 2`.
pub fn genus(n: u64, i: u64, j: u64, k: u64) -> Result<u64> {
    if [i, j, k].iter().any(|&e| e == 0 || e >= n) {
        return Err(Error::Invalid("need 1 <= i, j, k < N".into()));
    }
    let s = gcd64(n, i + j + k) + gcd64(n, i) + gcd64(n, j) + gcd64(n, k);
    if s % 2 == 1 {
        return Err(Error::NonIntegral);
    }
    Ok(1 + n - s / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_f5() {
        let f = FiniteField::new(5, 1).unwrap();
        let two = f.from_int(2);
        let v = HGVariety::new(2, vec![1], vec![1], 1, two).unwrap();
        assert_eq!(count_affine_brute(&f, &v).unwrap(), 7);
        assert_eq!(count_via_periods(&f, &v).unwrap(), 8);
        assert_eq!(legendre_count(&f, two).unwrap(), 8);
        assert_eq!(legendre_count_brute(&f, two), 8);
        assert!(matches!(legendre_count(&f, f.one()), Err(Error::DegenerateLambda(_))));
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus(4, 1, 1, 1).unwrap(), 3);
        assert_eq!(genus(2, 1, 1, 1).unwrap(), 1);
        assert_eq!(genus(5, 3, 4, 4).unwrap(), 4);
        for n in 2..=12u64 {
            for i in 1..n {
                for j in 1..n {
                    for k in 1..n {
                        assert!(genus(n, i, j, k).is_ok());
                    }
                }
            }
        }
        assert!(genus(4, 0, 1, 1).is_err());
    }
}
