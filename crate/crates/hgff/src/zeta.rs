//! Lifted period sums over `F_{q^r}` and the degree-two local factor of a
//! primitive `_2P_1`.
//!
//! Convention: the Frobenius trace is `-P(q)`, so the factor is
//! `H(T) = T^2 - tr T + det` and the generating series
//! `Z(T) = exp(sum_r P(q^r) T^r / r)` equals `1 - tr T + det T^2`.

use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::chars::lift_with;
use crate::config;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::field::{Extension, FieldElement, FiniteField};
use crate::hyper::{HGSpec, HyperContext};

/// `P[A_r, ..; B_r, ..; lambda; q^r]`, returned at order `q - 1`.
pub fn lifted_period(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement, r: u32) -> Result<CycloNum> {
    if spec.q() != f.q() || lambda.q() != f.q() {
        return Err(Error::FieldMismatch(spec.q(), f.q()));
    }
    if r == 1 {
        return HyperContext::new(f).period_direct(spec, lambda);
    }
    let big_q = (f.q() as u64).checked_pow(r).unwrap_or(u64::MAX);
    if big_q > config::q_max() {
        return Err(Error::BudgetExceeded(format!("q^r = {}^{r} exceeds the field budget", f.q())));
    }
    let ext = Extension::new(f, r)?;
    let big = ext.big();
    let lifted = spec.map(|c| lift_with(&ext, c));
    let lam = ext.embed(lambda)?;
    let h = HyperContext::new(big);
    let cost = (big.q() as u64).checked_pow(spec.n() as u32).unwrap_or(u64::MAX);
    if cost > config::DEFAULT_SUM_MAX {
        return Err(Error::BudgetExceeded(format!("lifted sum has {cost} terms")));
    }
    let mut counts = vec![0i64; big.q() as usize - 1];
    h.accumulate(&lifted, lam.raw(), &mut counts);
    // lifted characters take values in the (q-1)-th roots of unity
    let n = f.q() as usize - 1;
    let s = (big.q() as usize - 1) / n;
    let mut folded = vec![0i64; n];
    for (e, &c) in counts.iter().enumerate() {
        if c != 0 {
            debug_assert_eq!(e % s, 0);
            folded[e / s] += c;
        }
    }
    Ok(CycloNum::from_counts(n as u32, &folded))
}

/// Coefficients `z_0 = 1, z_1, .., z_R` of `exp(sum_{r<=R} a_r T^r / r)`.
pub fn zeta_series(a: &[CycloNum]) -> Result<Vec<CycloNum>> {
    let order = a.first().map(|x| x.order()).unwrap_or(1);
    let mut z = vec![CycloNum::one(order)];
    for n in 1..=a.len() {
        let mut acc = CycloNum::zero(order);
        for k in 1..=n {
            acc = acc + &a[k - 1] * &z[n - k];
        }
        z.push(acc.div_int(n as i64)?);
    }
    Ok(z)
}

/// Local factor `1 - tr T + det T^2` with exact cyclotomic coefficients.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaFactor {
    pub q: u32,
    /// Coefficients of `1 + c_1 T + c_2 T^2`, constant term first.
    pub coeffs: Vec<CycloNum>,
    pub primitive: bool,
}

impl ZetaFactor {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `tr` in `H(T) = T^2 - tr T + det`.
    pub fn trace(&self) -> CycloNum {
        -self.coeffs[1].clone()
    }

    pub fn det(&self) -> CycloNum {
        self.coeffs.get(2).cloned().unwrap_or_else(|| CycloNum::zero(self.q - 1))
    }

    /// Integer coefficients when every coefficient is a rational integer.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.as_i64().ok()).collect()
    }

    /// Human-readable `1 + c1 T + c2 T^2`.
    pub fn poly_string(&self) -> String {
        let mut s = String::from("1");
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let t = if i == 1 { "T".to_string() } else { format!("T^{i}") };
            match c.as_i64() {
                Ok(0) => {}
                Ok(v) if v < 0 => s.push_str(&format!(" - {}{t}", -v)),
                Ok(v) => s.push_str(&format!(" + {v}{t}")),
                Err(_) => s.push_str(&format!(" + ({c}){t}")),
            }
        }
        s
    }

    /// Roots of `H(T) = T^2 - tr T + det` (inverse roots of the factor).
    pub fn roots(&self) -> Vec<Complex64> {
        let tr = self.trace().to_complex(15);
        match self.degree() {
            1 => vec![tr],
            _ => {
                let t = self.trace();
                if (&t * &t - self.det().scale(4)).is_zero() {
                    return vec![tr / 2.0, tr / 2.0];
                }
                let det = self.det().to_complex(15);
                let disc = (tr * tr - det * 4.0).sqrt();
                vec![(tr + disc) / 2.0, (tr - disc) / 2.0]
            }
        }
    }
}

/// Builds the factor from `a_1 = P(q)` and `a_2 = P(q^2)`.
fn factor_from(q: u32, a1: &CycloNum, a2: &CycloNum, primitive: bool) -> Result<ZetaFactor> {
    let tr = -a1.clone();
    let det = (a1 * a1 + a2.clone()).div_int(2)?;
    let mut coeffs = vec![CycloNum::one(q - 1), -tr];
    if !det.is_zero() {
        coeffs.push(det);
    }
    Ok(ZetaFactor { q, coeffs, primitive })
}

/// `H(T)` for a primitive `_2P_1` at `lambda != 0, 1`.
pub fn charpoly_2(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<ZetaFactor> {
    if spec.n() != 1 || !spec.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    if lambda.is_zero() || lambda == f.one() {
        return Err(Error::DegenerateLambda(format!("lambda = {}", f.format(lambda))));
    }
    let a1 = lifted_period(f, spec, lambda, 1)?;
    let a2 = lifted_period(f, spec, lambda, 2)?;
    factor_from(f.q(), &a1, &a2, true)
}

/// Factor for any `_2P_1` (primitive or not), from `a_1`, `a_2`.
pub fn zeta_factor(f: &Arc<FiniteField>, spec: &HGSpec, lambda: FieldElement) -> Result<ZetaFactor> {
    if spec.n() != 1 {
        return Err(Error::Invalid("factor assembly is implemented for n = 1 only".into()));
    }
    let a1 = lifted_period(f, spec, lambda, 1)?;
    let a2 = lifted_period(f, spec, lambda, 2)?;
    factor_from(f.q(), &a1, &a2, spec.is_primitive())
}

/// `-(alpha^r + beta^r)` for the roots of `H`, by Newton's identities.
pub fn newton_periods(factor: &ZetaFactor, rmax: u32) -> Vec<CycloNum> {
    let tr = factor.trace();
    let det = factor.det();
    let mut p: Vec<CycloNum> = vec![CycloNum::from_int(factor.q - 1, 2), tr.clone()];
    for r in 2..=rmax as usize {
        let next = &tr * &p[r - 1] - &det * &p[r - 2];
        p.push(next);
    }
    p.into_iter().skip(1).map(|x| -x).collect()
}

/// Outcome of the purity check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    Pass,
    Impure,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct PurityReport {
    pub status: Purity,
    pub roots: Vec<[f64; 2]>,
    pub moduli: Vec<f64>,
    /// `det conj(det) = q^2`, exactly.
    pub det_exact: bool,
    /// `det` is `+q` or `-q`; `None` when `det` is not rational.
    pub det_pm_q: Option<bool>,
    pub trace_bound: bool,
    pub witness: Option<String>,
}

/// Root moduli tolerance.
pub const PURITY_TOL: f64 = 1e-9;

/// Checks `|root| = sqrt q` numerically and the determinant exactly.
pub fn weil_purity_check(factor: &ZetaFactor) -> PurityReport {
    let q = factor.q as f64;
    let roots = factor.roots();
    let moduli: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
    let numeric = factor.degree() == 2 && moduli.iter().all(|m| (m - q.sqrt()).abs() < PURITY_TOL);
    let det = factor.det();
    let qq = factor.q as i64;
    let det_exact = factor.degree() == 2
        && (&det * &det.conj()) == CycloNum::from_int(factor.q - 1, qq * qq);
    let det_pm_q = det.as_rational().map(|r| {
        let r: BigRational = r;
        r == BigRational::from_integer(qq.into()) || r == BigRational::from_integer((-qq).into())
    });
    let trace_bound = factor.trace().to_complex(15).norm() <= 2.0 * q.sqrt() + 1e-9;
    let ok = numeric && det_exact && det_pm_q != Some(false) && trace_bound;
    let status = if ok {
        Purity::Pass
    } else if !factor.primitive {
        Purity::Impure
    } else {
        Purity::Fail
    };
    let witness = (status == Purity::Fail).then(|| {
        format!(
            "tr = {}, det = {}, moduli = {:?}",
            factor.trace(),
            det,
            moduli
        )
    });
    PurityReport {
        status,
        roots: roots.iter().map(|r| [r.re, r.im]).collect(),
        moduli,
        det_exact,
        det_pm_q,
        trace_bound,
        witness,
    }
}

/// Largest `r` with `q^r` inside the field budget, capped at `cap`.
pub fn r_budget(q: u32, cap: u32) -> u32 {
    let mut r = 1;
    while r < cap && (q as u64).pow(r + 1) <= config::q_max() {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::MultChar;

    #[test]
    fn legendre_factor() {
        let f = FiniteField::new(5, 1).unwrap();
        let phi = MultChar::quadratic(5);
        let s = HGSpec::two_one(phi, phi, MultChar::trivial(5));
        let h = charpoly_2(&f, &s, f.from_int(2)).unwrap();
        assert_eq!(h.integer_coeffs().unwrap(), vec![1, 2, 5]);
        assert_eq!(h.trace(), CycloNum::from_int(4, -2));
        let rep = weil_purity_check(&h);
        assert_eq!(rep.status, Purity::Pass);
        let a3 = lifted_period(&f, &s, f.from_int(2), 3).unwrap();
        assert_eq!(newton_periods(&h, 3)[2], a3);
        assert_eq!(h.poly_string(), "1 + 2T + 5T^2");
    }

    #[test]
    fn bad_determinant_fails() {
        let h = ZetaFactor {
            q: 5,
            coeffs: vec![CycloNum::one(4), CycloNum::from_int(4, 2), CycloNum::from_int(4, 3)],
            primitive: true,
        };
        let rep = weil_purity_check(&h);
        assert_eq!(rep.status, Purity::Fail);
        assert_eq!(rep.det_pm_q, Some(false));
        assert!(rep.witness.is_some());
        let imp = ZetaFactor { primitive: false, ..h };
        assert_eq!(weil_purity_check(&imp).status, Purity::Impure);
    }

    #[test]
    fn lift_r1() {
        let f = FiniteField::new(7, 1).unwrap();
        let s = HGSpec::two_one(MultChar::new(7, 1), MultChar::new(7, 2), MultChar::new(7, 4));
        for x in f.elements() {
            assert_eq!(
                lifted_period(&f, &s, x, 1).unwrap(),
                HyperContext::new(&f).period_direct(&s, x).unwrap()
            );
        }
    }
}
