//! Period functions `_{n+1}P_n`, the normalized `_{n+1}F_n`, and the
//! Greene, McCarthy and Katz variants.

use std::sync::Arc;

use serde::Serialize;

use crate::chars::{all_chars, iota, MultChar, RationalParam};
use crate::config;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::sums::{context, SumsContext};

/// Upper characters `A_1..A_{n+1}` and lower characters `B_1..B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HGSpec {
    upper: Vec<MultChar>,
    lower: Vec<MultChar>,
}

impl HGSpec {
    pub fn new(upper: Vec<MultChar>, lower: Vec<MultChar>) -> Result<HGSpec> {
        if upper.len() != lower.len() + 1 {
            return Err(Error::Invalid(format!(
                "need n+1 upper and n lower characters, got {} and {}",
                upper.len(),
                lower.len()
            )));
        }
        let q = upper[0].q();
        if let Some(c) = upper.iter().chain(&lower).find(|c| c.q() != q) {
            return Err(Error::FieldMismatch(c.q(), q));
        }
        Ok(HGSpec { upper, lower })
    }

    /// `_2P_1[a1, a2; b1]`.
    pub fn two_one(a1: MultChar, a2: MultChar, b1: MultChar) -> HGSpec {
        HGSpec::new(vec![a1, a2], vec![b1]).expect("same field")
    }

    /// `_3P_2[a1, a2, a3; b1, b2]`.
    pub fn three_two(a: [MultChar; 3], b: [MultChar; 2]) -> HGSpec {
        HGSpec::new(a.to_vec(), b.to_vec()).expect("same field")
    }

    pub fn n(&self) -> usize {
        self.lower.len()
    }

    pub fn q(&self) -> u32 {
        self.upper[0].q()
    }

    pub fn upper(&self) -> &[MultChar] {
        &self.upper
    }

    pub fn lower(&self) -> &[MultChar] {
        &self.lower
    }

    /// No `A_i` trivial and no `A_i = B_j`.
    pub fn is_primitive(&self) -> bool {
        self.upper
            .iter()
            .all(|a| !a.is_trivial() && !self.lower.contains(a))
    }

    pub fn map(&self, f: impl Fn(MultChar) -> MultChar) -> HGSpec {
        HGSpec {
            upper: self.upper.iter().map(|&c| f(c)).collect(),
            lower: self.lower.iter().map(|&c| f(c)).collect(),
        }
    }
}

/// Apply `iota` componentwise.
pub fn rational_spec(
    upper: &[RationalParam],
    lower: &[RationalParam],
    f: &FiniteField,
) -> Result<HGSpec> {
    let up = upper.iter().map(|&a| iota(a, f)).collect::<Result<Vec<_>>>()?;
    let lo = lower.iter().map(|&a| iota(a, f)).collect::<Result<Vec<_>>>()?;
    HGSpec::new(up, lo)
}

fn check(f: &FiniteField, spec: &HGSpec, lambda: FieldElement) -> Result<()> {
    if spec.q() != f.q() {
        return Err(Error::FieldMismatch(spec.q(), f.q()));
    }
    if lambda.q() != f.q() {
        return Err(Error::FieldMismatch(lambda.q(), f.q()));
    }
    Ok(())
}

/// `_1P_0[A; x] = conj(A)(1 - x)`.
pub fn p1_0(f: &FiniteField, a: MultChar, x: FieldElement) -> Result<CycloNum> {
    let n = f.q() - 1;
    let v = f.one_minus_raw(x.raw());
    Ok(match a.conj().exp_raw(f, v) {
        None => CycloNum::zero(n),
        Some(e) => CycloNum::zeta(n, e as i64),
    })
}

/// Evaluation with cached Gauss/Jacobi data for one field.
pub struct HyperContext {
    field: Arc<FiniteField>,
    sums: Arc<SumsContext>,
}

impl HyperContext {
    pub fn new(field: &Arc<FiniteField>) -> HyperContext {
        HyperContext {
            sums: context(field),
            field: field.clone(),
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn sums(&self) -> &SumsContext {
        &self.sums
    }

    fn n(&self) -> u32 {
        self.field.q() - 1
    }

    /// Nested sum over `F_q^n`, accumulated as exponent counts.
    pub fn period_direct(&self, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
        check(&self.field, spec, lambda)?;
        let q = self.field.q() as u64;
        let cost = q.checked_pow(spec.n() as u32).unwrap_or(u64::MAX);
        if cost > config::DEFAULT_SUM_MAX {
            return Err(Error::BudgetExceeded(format!(
                "direct sum over F_{q}^{} has {cost} terms",
                spec.n()
            )));
        }
        let mut counts = vec![0i64; self.n() as usize];
        self.accumulate(spec, lambda.raw(), &mut counts);
        Ok(CycloNum::from_counts(self.n(), &counts))
    }

    /// Adds the exponent counts of `P[spec; lambda]` into `counts`.
    pub fn accumulate(&self, spec: &HGSpec, lambda: u32, counts: &mut [i64]) {
        let levels: Vec<(u64, u64)> = (1..=spec.n())
            .map(|i| {
                let a = spec.upper[i];
                let c = a.conj() * spec.lower[i - 1];
                (a.exponent() as u64, c.exponent() as u64)
            })
            .collect();
        let a1bar = spec.upper[0].conj().exponent() as u64;
        self.level(&levels, a1bar, lambda, 0, counts);
    }

    fn level(&self, levels: &[(u64, u64)], a1bar: u64, lam: u32, shift: u64, counts: &mut [i64]) {
        let f = &self.field;
        let n = self.n() as u64;
        match levels.split_last() {
            None => {
                if let Some(l) = f.log_raw(f.one_minus_raw(lam)) {
                    counts[((shift + a1bar * l as u64) % n) as usize] += 1;
                }
            }
            Some((&(a, c), rest)) => {
                let lom = self.sums.one_minus_logs();
                let ll = f.log_raw(lam);
                for j in 0..n {
                    let l1 = lom[j as usize];
                    if l1 == u32::MAX {
                        continue;
                    }
                    let e = (shift + a * j + c * l1 as u64) % n;
                    let next = match ll {
                        Some(ll) => f.exp_raw((ll as u64 + j) % n),
                        None => 0,
                    };
                    if rest.is_empty() {
                        if let Some(l) = f.log_raw(f.one_minus_raw(next)) {
                            counts[((e + a1bar * l as u64) % n) as usize] += 1;
                        }
                    } else {
                        self.level(rest, a1bar, next, e, counts);
                    }
                }
            }
        }
    }

    /// `prod_i J(A_{i+1}, conj(A_{i+1}) B_i)`.
    pub fn jacobi_product(&self, spec: &HGSpec) -> CycloNum {
        let mut acc = CycloNum::one(self.n());
        for i in 0..spec.n() {
            let a = spec.upper[i + 1];
            acc = acc * self.sums.jacobi(a, a.conj() * spec.lower[i]);
        }
        acc
    }

    fn jacobi_product_inv(&self, spec: &HGSpec) -> CycloNum {
        let mut acc = CycloNum::one(self.n());
        for i in 0..spec.n() {
            let a = spec.upper[i + 1];
            acc = acc * self.sums.jacobi_inv(a, a.conj() * spec.lower[i]);
        }
        acc
    }

    /// The per-character terms of the spectral formula, as integer vectors
    /// of length `q - 1` in the exponent basis, before the `(q-1)^{-1}` and
    /// sign prefactor.
    pub fn spectral(&self, spec: &HGSpec) -> Spectral {
        let f = &self.field;
        let n = self.n() as usize;
        let mut sign: i64 = if spec.n().is_multiple_of(2) { -1 } else { 1 };
        for i in 0..spec.n() {
            sign *= (spec.upper[i + 1] * spec.lower[i]).sign(f);
        }
        let mut terms = Vec::with_capacity(n);
        for chi in all_chars(f.q()) {
            let mut t = self.binomial(spec.upper[0] * chi, chi);
            for i in 0..spec.n() {
                t = t * self.binomial(spec.upper[i + 1] * chi, spec.lower[i] * chi);
            }
            // binomial products are algebraic integers
            let mut v = t.to_i64_coeffs().expect("integral binomial product");
            v.resize(n, 0);
            terms.push(v);
        }
        Spectral {
            n: n as u32,
            sign,
            terms,
            delta: self.jacobi_product(spec),
        }
    }

    fn binomial(&self, a: MultChar, b: MultChar) -> CycloNum {
        self.sums.binomial(a, b)
    }

    /// The character-sum formula in binomial coefficients.
    pub fn period_spectral(&self, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
        check(&self.field, spec, lambda)?;
        Ok(self.spectral(spec).eval(&self.field, lambda.raw()))
    }

    /// `P / prod J(A_{i+1}, B_i conj(A_{i+1}))`.
    pub fn f_normalized(&self, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
        let p = if spec.n() == 1 {
            self.period_direct(spec, lambda)?
        } else {
            self.period_spectral(spec, lambda)?
        };
        Ok(p * self.jacobi_product_inv(spec))
    }

    /// Normalize an already computed period value.
    pub fn normalize(&self, spec: &HGSpec, p: &CycloNum) -> CycloNum {
        p * &self.jacobi_product_inv(spec)
    }

    /// Greene's function, from its binomial-coefficient definition.
    pub fn greene_f(&self, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
        check(&self.field, spec, lambda)?;
        let f = &self.field;
        let q = f.q() as i64;
        let Some(ll) = f.log_raw(lambda.raw()) else {
            return Ok(CycloNum::zero(self.n()));
        };
        // (A choose B)_G = B(-1)/q J(A, conj B)
        let mut acc = CycloNum::zero(self.n());
        let lower: Vec<MultChar> = std::iter::once(MultChar::trivial(f.q()))
            .chain(spec.lower.iter().copied())
            .collect();
        for chi in all_chars(f.q()) {
            let mut t = CycloNum::one(self.n());
            let mut s = 1;
            for (a, b) in spec.upper.iter().zip(&lower) {
                let bb = *b * chi;
                t = t * self.sums.jacobi(*a * chi, bb.conj());
                s *= bb.sign(f);
            }
            let e = chi.exponent() as i64 * ll as i64;
            acc = acc + t.scale(s).mul_zeta(e);
        }
        let k = spec.upper.len() as i64;
        // q/(q-1) * q^{-(n+1)}
        acc.div_int(q - 1)?.div_int(q.pow(k as u32 - 1))
    }

    /// McCarthy's function, from its Gauss-sum definition.
    pub fn mccarthy_f(&self, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
        check(&self.field, spec, lambda)?;
        let f = &self.field;
        let Some(ll) = f.log_raw(lambda.raw()) else {
            return Ok(CycloNum::zero(self.n()));
        };
        let g = |c: MultChar| self.sums.gauss(c);
        let gi = |c: MultChar| self.sums.gauss_inv(c);
        let mut acc = CycloNum::zero(self.sums.gauss_order());
        let k = spec.upper.len();
        for chi in all_chars(f.q()) {
            let mut t = g(chi.conj())?;
            for &a in &spec.upper {
                t = t * g(a * chi)? * gi(a)?;
            }
            for &b in &spec.lower {
                t = t * g((b * chi).conj())? * gi(b.conj())?;
            }
            let s = if k % 2 == 1 { chi.sign(f) } else { 1 };
            let e = chi.exponent() as i64 * ll as i64;
            acc = acc + t.scale(s).mul_zeta(e * f.p() as i64);
        }
        acc.div_int(f.q() as i64 - 1)
    }

    /// Katz's sum `1/(q-1) sum_chi conj(chi)(lambda) prod g(A_i chi)
    /// prod g(conj(B_j chi)) B_j chi(-1)`.
    fn katz_f(&self, upper: &[MultChar], lower: &[MultChar], lambda: FieldElement) -> Result<CycloNum> {
        let f = &self.field;
        let Some(ll) = f.log_raw(lambda.raw()) else {
            return Ok(CycloNum::zero(self.n()));
        };
        let mut acc = CycloNum::zero(self.sums.gauss_order());
        for chi in all_chars(f.q()) {
            let mut t = CycloNum::one(self.sums.gauss_order());
            let mut s = 1;
            for &a in upper {
                t = t * self.sums.gauss(a * chi)?;
            }
            for &b in lower {
                t = t * self.sums.gauss((b * chi).conj())?;
                s *= (b * chi).sign(f);
            }
            let e = -(chi.exponent() as i64) * ll as i64;
            acc = acc + t.scale(s).mul_zeta(e * f.p() as i64);
        }
        acc.div_int(f.q() as i64 - 1)
    }

    /// McCarthy's function against its expression through Katz's sum at
    /// `1/lambda`.
    pub fn katz_conversion_check(&self, spec: &HGSpec, lambda: FieldElement) -> Result<bool> {
        let f = &self.field;
        if lambda.is_zero() {
            return Ok(true);
        }
        let m = self.mccarthy_f(spec, lambda)?;
        let mut lower = vec![MultChar::trivial(f.q())];
        lower.extend_from_slice(&spec.lower);
        let k = self.katz_f(&spec.upper, &lower, f.inv(lambda)?)?;
        let mut c = self.sums.gauss_inv(spec.upper[0])?;
        for i in 0..spec.n() {
            c = c
                * self.sums.gauss_inv(spec.upper[i + 1])?
                * self.sums.gauss_inv(spec.lower[i].conj())?;
            c = c.scale(spec.lower[i].sign(f));
        }
        Ok(m == c * k)
    }
}

/// Precomputed spectral data for one spec.
pub struct Spectral {
    n: u32,
    sign: i64,
    terms: Vec<Vec<i64>>,
    delta: CycloNum,
}

impl Spectral {
    /// Value at `lambda` (raw encoding).
    pub fn eval(&self, f: &FiniteField, lambda: u32) -> CycloNum {
        let n = self.n as usize;
        // every character vanishes at 0
        let Some(ll) = f.log_raw(lambda) else {
            return self.delta.clone();
        };
        let mut acc = vec![0i64; n];
        for (m, t) in self.terms.iter().enumerate() {
            let shift = (m as u64 * ll as u64 % n as u64) as usize;
            for (k, &c) in t.iter().enumerate() {
                if c != 0 {
                    let idx = if k + shift >= n { k + shift - n } else { k + shift };
                    acc[idx] += c;
                }
            }
        }
        CycloNum::from_counts(self.n, &acc)
            .scale(self.sign)
            .div_int(n as i64)
            .expect("q > 1")
    }
}

pub fn period_direct(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
    HyperContext::new(f).period_direct(spec, lambda)
}

pub fn period_spectral(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
    HyperContext::new(f).period_spectral(spec, lambda)
}

pub fn f_normalized(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
    HyperContext::new(f).f_normalized(spec, lambda)
}

pub fn greene_f(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
    HyperContext::new(f).greene_f(spec, lambda)
}

pub fn mccarthy_f(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<CycloNum> {
    HyperContext::new(f).mccarthy_f(spec, lambda)
}

pub fn is_primitive(spec: &HGSpec) -> bool {
    spec.is_primitive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_value() {
        let f = FiniteField::new(5, 1).unwrap();
        let h = HyperContext::new(&f);
        let phi = MultChar::quadratic(5);
        let s = HGSpec::two_one(phi, phi, MultChar::trivial(5));
        let two = f.from_int(2);
        assert_eq!(h.period_direct(&s, two).unwrap(), CycloNum::from_int(4, 2));
        assert_eq!(h.period_spectral(&s, two).unwrap(), CycloNum::from_int(4, 2));
    }

    #[test]
    fn p10() {
        let f = FiniteField::new(5, 1).unwrap();
        let phi = MultChar::quadratic(5);
        assert_eq!(p1_0(&f, phi, f.from_int(3)).unwrap(), CycloNum::from_int(4, -1));
        assert!(p1_0(&f, phi, f.one()).unwrap().is_zero());
        assert!(p1_0(&f, MultChar::trivial(5), f.from_int(3)).unwrap().is_one());
    }

    #[test]
    fn primitivity() {
        let e = MultChar::trivial(7);
        let a = MultChar::new(7, 1);
        let b = MultChar::new(7, 2);
        assert!(HGSpec::two_one(MultChar::new(7, 3), MultChar::new(7, 3), e).is_primitive());
        assert!(!HGSpec::two_one(e, b, a).is_primitive());
        assert!(!HGSpec::two_one(a, b, a).is_primitive());
    }

    #[test]
    fn small_field_agreement() {
        let f = FiniteField::new(7, 1).unwrap();
        let h = HyperContext::new(&f);
        for a1 in all_chars(7) {
            for a2 in all_chars(7) {
                for b in all_chars(7) {
                    let s = HGSpec::two_one(a1, a2, b);
                    let sp = h.spectral(&s);
                    for x in f.elements() {
                        assert_eq!(h.period_direct(&s, x).unwrap(), sp.eval(&f, x.raw()));
                    }
                }
            }
        }
    }
}
