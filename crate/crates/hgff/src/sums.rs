//! Gauss and Jacobi sums with per-field caches.
//!
//! The additive character is `x -> zeta_p^{Tr(x)}` with `zeta_p = exp(2 pi i / p)`.
//! Gauss sums live at order `p (q-1)`, Jacobi sums at order `q - 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::chars::{chars_dividing, lift_with, MultChar};
use crate::cyclo::{cyclo_poly, CycloNum};
use crate::error::{Error, Result};
use crate::field::{Extension, FiniteField};

pub struct SumsContext {
    field: Arc<FiniteField>,
    /// `log(1 - g^k)`, or `u32::MAX` at `k = 0`.
    lom: Vec<u32>,
    gauss: Vec<OnceLock<Result<CycloNum>>>,
    gauss_inv: Vec<OnceLock<Result<CycloNum>>>,
    jacobi: RwLock<HashMap<(u32, u32), CycloNum>>,
    jacobi_inv: RwLock<HashMap<(u32, u32), CycloNum>>,
}

fn registry() -> &'static Mutex<HashMap<u32, Arc<SumsContext>>> {
    static R: OnceLock<Mutex<HashMap<u32, Arc<SumsContext>>>> = OnceLock::new();
    R.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared cache for `f`.
pub fn context(f: &Arc<FiniteField>) -> Arc<SumsContext> {
    let mut r = registry().lock().unwrap();
    r.entry(f.q())
        .or_insert_with(|| Arc::new(SumsContext::new(f.clone())))
        .clone()
}

impl SumsContext {
    pub fn new(field: Arc<FiniteField>) -> SumsContext {
        let n = field.q() - 1;
        let lom = (0..n)
            .map(|k| {
                let x = field.exp_raw(k as u64);
                field.log_raw(field.one_minus_raw(x)).unwrap_or(u32::MAX)
            })
            .collect();
        SumsContext {
            lom,
            gauss: (0..n).map(|_| OnceLock::new()).collect(),
            gauss_inv: (0..n).map(|_| OnceLock::new()).collect(),
            jacobi: RwLock::new(HashMap::new()),
            jacobi_inv: RwLock::new(HashMap::new()),
            field,
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    /// Order `p (q-1)` of the Gauss sum values.
    pub fn gauss_order(&self) -> u32 {
        self.field.p() * (self.field.q() - 1)
    }

    /// `g(A) = sum_{x != 0} A(x) zeta_p^{Tr x}`.
    pub fn gauss(&self, a: MultChar) -> Result<CycloNum> {
        self.check(a)?;
        self.gauss[a.exponent() as usize]
            .get_or_init(|| self.gauss_uncached(a))
            .clone()
    }

    fn gauss_uncached(&self, a: MultChar) -> Result<CycloNum> {
        let f = &self.field;
        let p = f.p() as u64;
        let n = (f.q() - 1) as u64;
        let m = self.gauss_order();
        cyclo_poly(m)?;
        let mut counts = vec![0i64; m as usize];
        for k in 0..n {
            let x = f.exp_raw(k);
            let t = f.trace_raw(x) as u64;
            let e = (a.exponent() as u64 * k % n * p + t * n) % m as u64;
            counts[e as usize] += 1;
        }
        Ok(CycloNum::from_counts(m, &counts))
    }

    /// `1 / g(A)`, cached.
    pub fn gauss_inv(&self, a: MultChar) -> Result<CycloNum> {
        self.check(a)?;
        self.gauss_inv[a.exponent() as usize]
            .get_or_init(|| self.gauss(a)?.inv())
            .clone()
    }

    /// `J(A, B) = sum_x A(x) B(1 - x)` by direct summation.
    pub fn jacobi(&self, a: MultChar, b: MultChar) -> CycloNum {
        let key = (a.exponent(), b.exponent());
        if let Some(v) = self.jacobi.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.jacobi_uncached(a, b);
        self.jacobi.write().unwrap().insert(key, v.clone());
        v
    }

    /// `1 / J(A, B)`; Jacobi sums never vanish.
    pub fn jacobi_inv(&self, a: MultChar, b: MultChar) -> CycloNum {
        let key = (a.exponent(), b.exponent());
        if let Some(v) = self.jacobi_inv.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self
            .jacobi(a, b)
            .inv()
            .expect("Jacobi sums are nonzero");
        self.jacobi_inv.write().unwrap().insert(key, v.clone());
        v
    }

    /// `log(1 - g^k)` for `k = 0..q-1`, with `u32::MAX` where `g^k = 1`.
    pub fn one_minus_logs(&self) -> &[u32] {
        &self.lom
    }

    fn jacobi_uncached(&self, a: MultChar, b: MultChar) -> CycloNum {
        let n = (self.field.q() - 1) as u64;
        let (ea, eb) = (a.exponent() as u64, b.exponent() as u64);
        let mut counts = vec![0i64; n as usize];
        for (k, &l) in self.lom.iter().enumerate() {
            if l != u32::MAX {
                counts[((ea * k as u64 + eb * l as u64) % n) as usize] += 1;
            }
        }
        CycloNum::from_counts(n as u32, &counts)
    }

    /// `g(A) g(B) / g(AB) + (q-1) B(-1) delta(AB)`.
    pub fn jacobi_from_gauss(&self, a: MultChar, b: MultChar) -> Result<CycloNum> {
        let ab = a * b;
        let mut v = self.gauss(a)? * self.gauss(b)? * self.gauss_inv(ab)?;
        if ab.is_trivial() {
            let c = (self.field.q() as i64 - 1) * b.sign(&self.field);
            v = v + CycloNum::from_int(self.gauss_order(), c);
        }
        Ok(v)
    }

    /// Binomial coefficient analogue `-chi(-1) J(A, conj chi)`.
    pub fn binomial(&self, a: MultChar, chi: MultChar) -> CycloNum {
        self.jacobi(a, chi.conj()).scale(-chi.sign(&self.field))
    }

    /// Rising factorial analogue `g(A chi) / g(A)`.
    pub fn rising(&self, a: MultChar, chi: MultChar) -> Result<CycloNum> {
        Ok(self.gauss(a * chi)? * self.gauss_inv(a)?)
    }

    /// Hasse-Davenport product formula for `psi` and `m | q-1`.
    pub fn hasse_davenport_product_check(&self, psi: MultChar, m: u32) -> Result<bool> {
        let q = self.field.q();
        let group = chars_dividing(q, m)?;
        let order = self.gauss_order();
        let mut lhs = CycloNum::one(order);
        let mut base = CycloNum::one(order);
        for &chi in &group {
            lhs = lhs * self.gauss(chi * psi)?;
            base = base * self.gauss(chi)?;
        }
        // psi(m^{-m})
        let mm = self
            .field
            .pow(self.field.from_int(m as i64), -(m as i64))?;
        let e = psi.exp_at(&self.field, mm).ok_or(Error::DivisionByZero)?;
        let val = CycloNum::zeta(q - 1, e as i64);
        let rhs = -(self.gauss(psi.pow(m as i64))? * val * base);
        Ok(lhs == rhs)
    }

    /// `g(A_r)` for the norm lift of `a` to `F_{q^r}`, summed at order
    /// `p (q-1)`: `A_r` only takes values in the `(q-1)`-th roots of unity.
    pub fn gauss_lifted(&self, a: MultChar, r: u32) -> Result<CycloNum> {
        self.check(a)?;
        let ext = Extension::new(&self.field, r)?;
        let big = ext.big();
        let p = self.field.p() as u64;
        let n = (self.field.q() - 1) as u64;
        let m = self.gauss_order();
        cyclo_poly(m)?;
        let t = ext.norm_log() % n;
        let mut counts = vec![0i64; m as usize];
        for k in 0..big.q() as u64 - 1 {
            let x = big.exp_raw(k);
            let tr = big.trace_raw(x) as u64;
            // A(N(G^k)) = zeta_{q-1}^{a t k}
            let e = (a.exponent() as u64 * ((t * (k % n)) % n) % n * p + tr * n) % m as u64;
            counts[e as usize] += 1;
        }
        Ok(CycloNum::from_counts(m, &counts))
    }

    /// `g(A_r) = (-1)^{r-1} g(A)^r`, with the left side summed over `F_{q^r}`.
    pub fn hasse_davenport_lift_check(&self, a: MultChar, r: u32) -> Result<bool> {
        let lhs = self.gauss_lifted(a, r)?;
        let mut rhs = self.gauss(a)?.pow(r as i64)?;
        if r.is_multiple_of(2) {
            rhs = -rhs;
        }
        Ok(lhs == rhs)
    }

    /// `g(A_r)` computed at the full order `p (q^r - 1)` from the lifted
    /// character on the big field. Only feasible for small `q^r`.
    pub fn gauss_lifted_full(&self, a: MultChar, r: u32) -> Result<CycloNum> {
        let ext = Extension::new(&self.field, r)?;
        let ctx = context(ext.big());
        ctx.gauss(lift_with(&ext, a))
    }

    fn check(&self, a: MultChar) -> Result<()> {
        if a.q() != self.field.q() {
            return Err(Error::FieldMismatch(a.q(), self.field.q()));
        }
        Ok(())
    }
}

pub fn gauss_sum(f: &Arc<FiniteField>, a: MultChar) -> Result<CycloNum> {
    context(f).gauss(a)
}

pub fn jacobi_sum(f: &Arc<FiniteField>, a: MultChar, b: MultChar) -> Result<CycloNum> {
    if a.q() != f.q() || b.q() != f.q() {
        return Err(Error::FieldMismatch(a.q(), f.q()));
    }
    Ok(context(f).jacobi(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::all_chars;

    #[test]
    fn small_values() {
        let f = FiniteField::new(5, 1).unwrap();
        let c = context(&f);
        let phi = MultChar::quadratic(5);
        assert_eq!(c.gauss(MultChar::trivial(5)).unwrap(), CycloNum::from_int(20, -1));
        let g = c.gauss(phi).unwrap();
        assert_eq!(&g * &g, CycloNum::from_int(20, 5));
        assert!((g.to_complex(10).norm() - 5f64.sqrt()).abs() < 1e-9);
        assert_eq!(c.jacobi(phi, phi), CycloNum::from_int(4, -1));
        assert_eq!(c.jacobi(MultChar::trivial(5), MultChar::trivial(5)), CycloNum::from_int(4, 3));
        assert_eq!(
            c.jacobi_from_gauss(MultChar::trivial(5), MultChar::trivial(5)).unwrap(),
            CycloNum::from_int(4, 3)
        );
    }

    #[test]
    fn binomial_rising() {
        let f = FiniteField::new(7, 1).unwrap();
        let c = context(&f);
        for a in all_chars(7) {
            assert!(c.rising(a, MultChar::trivial(7)).unwrap().is_one());
            if !a.is_trivial() {
                assert!(c.binomial(a, MultChar::trivial(7)).is_one());
            }
        }
    }

    #[test]
    fn lift_relation() {
        let f = FiniteField::new(5, 1).unwrap();
        let c = context(&f);
        let phi = MultChar::quadratic(5);
        assert_eq!(c.gauss_lifted(phi, 2).unwrap(), CycloNum::from_int(20, -5));
        assert_eq!(
            c.gauss_lifted_full(phi, 2).unwrap(),
            CycloNum::from_int(5, -5)
        );
        for a in all_chars(5) {
            assert!(c.hasse_davenport_lift_check(a, 2).unwrap());
            assert!(c.hasse_davenport_lift_check(a, 3).unwrap());
        }
    }
}
