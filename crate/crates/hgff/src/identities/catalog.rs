//! The identity catalog.
//!
//! Slot order is the order of `t`; `x` is the free argument. Each evaluator
//! returns one `(lhs, rhs)` pair per display, or no pair when the display
//! does not apply to the tuple.

use std::sync::OnceLock;

use super::{Ctx, Displays, IdentityRecord, Kind, Slot};
use crate::chars::MultChar;
use crate::cyclo::CycloNum;
use crate::error::Result;
use crate::field::{FieldElement, FiniteField};

use Kind::{Conjecture, Theorem};
use Slot::{Any, Order};

type R = Result<Displays>;
type Fe = FieldElement;
type C = MultChar;

const ALL_FIELDS: &[u64] = &[3, 4, 5, 7, 9, 11, 13, 25, 27, 49];
const ODD: &[u64] = &[3, 5, 7, 9];

fn cj(a: C) -> C {
    a.conj()
}

fn one(l: CycloNum, r: CycloNum) -> R {
    Ok(vec![(l, r)])
}

fn delta_c(c: C) -> bool {
    c.is_trivial()
}

// field predicates

fn odd(f: &FiniteField) -> bool {
    f.q() % 2 == 1
}

fn divides(f: &FiniteField, m: u32) -> bool {
    (f.q() - 1).is_multiple_of(m)
}

fn q1_mod3(f: &FiniteField) -> bool {
    divides(f, 3)
}

fn q1_mod4(f: &FiniteField) -> bool {
    divides(f, 4)
}

fn q1_mod6(f: &FiniteField) -> bool {
    divides(f, 6)
}

fn q1_mod12(f: &FiniteField) -> bool {
    divides(f, 12)
}

fn q1_mod20(f: &FiniteField) -> bool {
    divides(f, 20)
}

fn q1_mod24(f: &FiniteField) -> bool {
    divides(f, 24)
}

fn odd_not3(f: &FiniteField) -> bool {
    odd(f) && f.p() != 3
}

fn prime_q1_mod12(f: &FiniteField) -> bool {
    f.e() == 1 && q1_mod12(f)
}

fn prime_q1_mod24(f: &FiniteField) -> bool {
    f.e() == 1 && q1_mod24(f)
}

// argument predicates

fn nonzero(_: &Ctx, _: &[C], x: Fe) -> bool {
    !x.is_zero()
}

fn not01(c: &Ctx, _: &[C], x: Fe) -> bool {
    !x.is_zero() && !c.is(x, 1)
}

// ------------------------------------------------------------------
// Gauss and Jacobi sum relations

fn gauss_reflection(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let a = t[0];
    let q = c.q();
    let rhs = c.int(q * c.sg(a)) - c.dt(k, delta_c(a), || Ok(c.int(q - 1)))?;
    one(c.g(a)? * c.g(cj(a))?, rhs)
}

fn gauss_reflection_inv(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let a = t[0];
    let q = c.q();
    let rhs = c.frac(c.sg(a), q) + c.dt(k, delta_c(a), || Ok(c.frac(q - 1, q)))?;
    one(c.gi(a)? * c.gi(cj(a))?, rhs)
}

fn gauss_conj(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let a = t[0];
    let q = c.q();
    let rhs = c.gi(a)?.scale(q * c.sg(a)) + c.dt(k, delta_c(a), || Ok(c.int(q - 1)))?;
    one(c.g(cj(a))?, rhs)
}

fn gauss_conj_inv(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let a = t[0];
    let q = c.q();
    let rhs = c.g(a)? * c.frac(c.sg(a), q) - c.dt(k, delta_c(a), || Ok(c.frac(q - 1, q)))?;
    one(c.gi(cj(a))?, rhs)
}

fn jacobi_gauss(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let rhs = c.g(a)? * c.g(b)? * c.gi(a * b)?
        + c.dt(k, delta_c(a * b), || Ok(c.int((c.q() - 1) * c.sg(b))))?;
    one(c.j(a, b), rhs)
}

fn jacobi_conj(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let a = t[0];
    let d = c.dt(k, delta_c(a), || Ok(c.int(c.q() - 1)))?;
    Ok(vec![
        (c.j(a, cj(a)), c.int(-c.sg(a)) + d.clone()),
        (c.j(a, c.eps()), c.int(-1) + d),
    ])
}

fn jacobi_swap(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    one(c.j(a, cj(b)), c.j(a, b * cj(a)).scale(c.sg(a)))
}

fn double_jacobi(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let a = t[0];
    one(c.j(a, a), c.chi(cj(a), 4) * c.j(a, c.phi()))
}

fn rising_product(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let s = c.sums();
    let (a, x1, x2) = (t[0], t[1], t[2]);
    one(s.rising(a, x1 * x2)?, s.rising(a, x1)? * s.rising(a * x1, x2)?)
}

fn hd_product(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let psi = t[0];
    let mut out = Vec::new();
    for m in [2u32, 3] {
        if !(c.q() as u32 - 1).is_multiple_of(m) {
            continue;
        }
        let group = crate::chars::chars_dividing(c.q() as u32, m)?;
        let mut lhs = c.int(1);
        let mut base = c.int(1);
        for &chi in &group {
            lhs = lhs * c.g(chi * psi)?;
            base = base * c.g(chi)?;
        }
        let mm = c.pw(c.el(m as i64), -(m as i64));
        let rhs = -(c.g(psi.pow(m as i64))? * c.ch(psi, mm) * base);
        out.push((lhs, rhs));
    }
    Ok(out)
}

fn hd_lift(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let a = t[0];
    let mut out = Vec::new();
    for r in [2u32, 3] {
        if (c.q() as u64).pow(r) > crate::config::q_max() {
            continue;
        }
        let sign = if r % 2 == 0 { -1 } else { 1 };
        out.push((c.sums().gauss_lifted(a, r)?, c.g(a)?.pow(r as i64)?.scale(sign)));
    }
    Ok(out)
}

// ------------------------------------------------------------------
// Kummer relations

fn kummer_ind_1(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(cc), x).scale(c.sg(a * b * cc));
    let rhs = pref * c.p2(cj(cc) * b, cj(cc) * a, cj(cc), x)?
        + c.dt(k, x.is_zero(), || Ok(c.j(b, cc * cj(b))))?;
    one(c.p2(a, b, cc, x)?, rhs)
}

fn kummer_ind_2(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a), x).scale(c.sg(a * b * cc));
    let main = c.guard(pref, || c.p2(a, cj(cc) * a, cj(b) * a, c.div(c.el(1), x).unwrap()))?;
    let rhs = main + c.dt(k, x.is_zero(), || Ok(c.j(b, cc * cj(b))))?;
    one(c.p2(a, b, cc, x)?, rhs)
}

fn kummer_ind_3(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let rhs = c.p2(a, b, a * b * cj(cc), c.isub(1, x))?.scale(c.sg(b));
    one(c.p2(a, b, cc, x)?, rhs)
}

/// `x/(x-1)`, for `x != 1`.
fn pfaff_arg(c: &Ctx, x: Fe) -> Fe {
    c.div(x, c.addi(x, -1)).expect("x != 1")
}

fn pfaff_delta(c: &Ctx, t: &[C], x: Fe, k: bool) -> Result<CycloNum> {
    let (a, b, cc) = (t[0], t[1], t[2]);
    c.dt(k, c.is(x, 1), || Ok(c.j(b, cc * cj(a * b))))
}

fn pfaff_euler_1(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a), c.isub(1, x));
    let rhs = c.guard(pref, || c.p2(a, cj(b) * cc, cc, pfaff_arg(c, x)))? + pfaff_delta(c, t, x, k)?;
    one(c.p2(a, b, cc, x)?, rhs)
}

fn pfaff_euler_2(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(b), c.isub(1, x));
    let rhs = c.guard(pref, || c.p2(cc * cj(a), b, cc, pfaff_arg(c, x)))? + pfaff_delta(c, t, x, k)?;
    one(c.p2(a, b, cc, x)?, rhs)
}

fn pfaff_euler_3(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a * b) * cc, c.isub(1, x));
    let rhs = pref * c.p2(cj(a) * cc, cj(b) * cc, cc, x)? + pfaff_delta(c, t, x, k)?;
    one(c.p2(a, b, cc, x)?, rhs)
}

fn norm_den(c: &Ctx, t: &[C]) -> CycloNum {
    c.ji(t[1], t[2] * cj(t[1]))
}

fn normalized_1(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(cc), x).scale(c.sg(a * b * cc)) * c.j(cj(cc) * a, cj(a)) * norm_den(c, t);
    let rhs = pref * c.f2(cj(cc) * b, cj(cc) * a, cj(cc), x)? + c.dt(k, x.is_zero(), || Ok(c.int(1)))?;
    one(c.f2(a, b, cc, x)?, rhs)
}

fn normalized_2(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a), x).scale(c.sg(a * b * cc)) * c.j(cj(cc) * a, cj(b) * cc) * norm_den(c, t);
    let main = c.guard(pref, || c.f2(a, cj(cc) * a, cj(b) * a, c.div(c.el(1), x).unwrap()))?;
    let rhs = main + c.dt(k, x.is_zero(), || Ok(c.int(1)))?;
    one(c.f2(a, b, cc, x)?, rhs)
}

fn normalized_3(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.j(b, cc * cj(a * b)) * norm_den(c, t);
    one(c.f2(a, b, cc, x)?, pref * c.f2(a, b, a * b * cj(cc), c.isub(1, x))?)
}

fn norm_pfaff_delta(c: &Ctx, t: &[C], x: Fe, k: bool) -> Result<CycloNum> {
    Ok(pfaff_delta(c, t, x, k)? * norm_den(c, t))
}

fn normalized_4(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a), c.isub(1, x));
    let rhs = c.guard(pref, || c.f2(a, cj(b) * cc, cc, pfaff_arg(c, x)))? + norm_pfaff_delta(c, t, x, k)?;
    one(c.f2(a, b, cc, x)?, rhs)
}

fn normalized_5(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(b), c.isub(1, x));
    let rhs = c.guard(pref, || c.f2(cj(a) * cc, b, cc, pfaff_arg(c, x)))? + norm_pfaff_delta(c, t, x, k)?;
    one(c.f2(a, b, cc, x)?, rhs)
}

fn normalized_6(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let pref = c.ch(cj(a * b) * cc, c.isub(1, x));
    let rhs = pref * c.f2(cj(a) * cc, cj(b) * cc, cc, x)? + norm_pfaff_delta(c, t, x, k)?;
    one(c.f2(a, b, cc, x)?, rhs)
}

fn helversen_pasotto(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let (a, b, cc, d) = (t[0], t[1], t[2], t[3]);
    let q = c.q();
    let mut sum = c.zero();
    for chi in crate::chars::all_chars(q as u32) {
        sum = sum + c.g(a * chi)? * c.g(b * chi)? * c.g(cc * cj(chi))? * c.g(d * cj(chi))?;
    }
    let lhs = sum.div_int(q - 1)?;
    let rhs = c.g(a * cc)? * c.g(a * d)? * c.g(b * cc)? * c.g(b * d)? * c.gi(a * b * cc * d)?
        + c.dt(k, delta_c(a * b * cc * d), || Ok(c.int(q * (q - 1) * c.sg(a * b))))?;
    one(lhs, rhs)
}

// ------------------------------------------------------------------
// Imprimitive evaluations

fn imprimitive_p_1(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (b, cc) = (t[0], t[1]);
    let rhs = c.j(b, cj(b) * cc) - c.ch(cj(cc), x) * c.ch(cj(b) * cc, c.addi(x, -1));
    one(c.p2(c.eps(), b, cc, x)?, rhs)
}

fn imprimitive_p_2(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let rhs = c.ch(cj(b), x) * c.j(b, cj(a)) - c.ch(cj(a), c.isub(1, x));
    one(c.p2(a, b, b, x)?, rhs)
}

fn imprimitive_p_3(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let rhs = c.ch(cj(b), c.addi(x, -1)) * c.j(b, cj(a)) - c.ch(cj(a), x).scale(c.sg(b))
        + c.dt(k, c.is(x, 1) && delta_c(b), || Ok(c.int(c.q() - 1)))?;
    one(c.p2(a, b, a, x)?, rhs)
}

fn imprimitive_p_4(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, cc) = (t[0], t[1]);
    let rhs = c.ch(cj(cc), c.neg(x)) * c.ch(cj(a) * cc, c.isub(1, x)) * c.j(cc, cj(a)) - c.int(1)
        + c.dt(k, c.is(x, 1) && delta_c(cj(a) * cc), || Ok(c.int(c.q() - 1)))?;
    one(c.p2(a, c.eps(), cc, x)?, rhs)
}

fn nontrivial(_: &Ctx, t: &[C]) -> bool {
    t.iter().all(|c| !c.is_trivial())
}

fn imprimitive_f_1(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (b, cc) = (t[0], t[1]);
    let rhs = c.int(1) - c.ch(cj(cc), x) * c.ch(cj(b) * cc, c.addi(x, -1)) * c.ji(b, cj(b) * cc);
    one(c.f2(c.eps(), b, cc, x)?, rhs)
}

fn imprimitive_f_2(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let rhs = c.ch(cj(a), c.isub(1, x)) - c.ch(cj(b), x) * c.j(b, cj(a));
    one(c.f2(a, b, b, x)?, rhs)
}

fn imprimitive_f_3(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let rhs = c.ch(cj(b), c.isub(1, x)) - c.ch(cj(a), x) * c.ji(cj(a), b);
    one(c.f2(a, b, a, x)?, rhs)
}

fn imprimitive_f_4(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, cc) = (t[0], t[1]);
    let rhs = c.int(1) - c.ch(cj(cc), c.neg(x)) * c.ch(cj(a) * cc, c.isub(1, x)) * c.j(cc, cj(a))
        - c.dt(k, c.is(x, 1) && delta_c(cj(a) * cc), || Ok(c.int(c.q() - 1)))?;
    one(c.f2(a, c.eps(), cc, x)?, rhs)
}

// ------------------------------------------------------------------
// Primitive 2F1 relations

fn commute_adm(_: &Ctx, t: &[C]) -> bool {
    let (a, b, cc) = (t[0], t[1], t[2]);
    !a.is_trivial() && !b.is_trivial() && a != cc && b != cc
}

fn commute_conjugate_1(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    Ok(vec![
        (
            c.j(a, cj(a) * cc) * c.p2(a, b, cc, x)?,
            c.j(b, cj(b) * cc) * c.p2(b, a, cc, x)?,
        ),
        (c.f2(a, b, cc, x)?, c.f2(b, a, cc, x)?),
    ])
}

fn commute_conjugate_2(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let chars = c.ch(cj(cc), x) * c.ch(cc * cj(a * b), c.addi(x, -1));
    let pr = chars.clone() * c.j(b, cc * cj(b)) * c.ji(a, cc * cj(a));
    let fr = chars * c.j(cj(b), cj(cc) * b) * c.ji(a, cc * cj(a));
    Ok(vec![
        (c.p2(a, b, cc, x)?, pr * c.p2(cj(a), cj(b), cj(cc), x)?),
        (c.f2(a, b, cc, x)?, fr * c.f2(cj(a), cj(b), cj(cc), x)?),
    ])
}

fn continuation_2x(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let s = c.sg(a * b * cc);
    let inv = c.div(c.el(1), x).unwrap();
    let pa = c.ch(cj(a), x).scale(s);
    let pb = c.ch(cj(b), x).scale(s);
    let p_rhs = pa.clone() * c.p2(a, a * cj(cc), a * cj(b), inv)?
        + pb.clone() * c.j(b, cj(b) * cc) * c.ji(a, cj(a) * cc) * c.p2(b, b * cj(cc), b * cj(a), inv)?;
    let f_rhs = pa * c.j(cj(cc) * a, cj(b) * cc) * c.ji(b, cc * cj(b)) * c.f2(a, a * cj(cc), a * cj(b), inv)?
        + pb * c.j(cc * cj(a), cj(cc) * b) * c.ji(a, cj(a) * cc) * c.f2(b, b * cj(cc), b * cj(a), inv)?;
    Ok(vec![
        (c.p2(a, b, cc, x)?.scale(2), p_rhs),
        (c.f2(a, b, cc, x)?.scale(2), f_rhs),
    ])
}

// ------------------------------------------------------------------
// Evaluations

fn gauss_eval(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    one(c.p2(a, b, cc, c.el(1))?, c.j(b, cj(a * b) * cc))
}

fn kummer_eval_p(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (b, d) = (t[0], t[1]);
    let cc = d * d;
    let rhs = c.j(d, cj(b)) + c.j(d * c.phi(), cj(b));
    one(c.p2(b, cc, cc * cj(b), c.el(-1))?, rhs)
}

fn kummer_eval_f(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (b, d) = (t[0], t[1]);
    let cc = d * d;
    let rhs = (c.j(d, cj(b)) + c.j(cj(b), d * c.phi())) * c.ji(cc, cj(b));
    one(c.f2(b, cc, cc * cj(b), c.el(-1))?, rhs)
}

fn pfaff_saalschutz_p(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b, cc, d) = (t[0], t[1], t[2], t[3]);
    let lhs = c.p3([a, b, cc], [d, a * b * cc * cj(d)], c.el(1))?;
    let rhs = (c.j(cc, a * cj(d)) * c.j(b, cc * cj(d))).scale(c.sg(b))
        - c.j(d * cj(b), cj(a)).scale(c.sg(b * d));
    one(lhs, rhs)
}

fn pfaff_saalschutz_j(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b, cc, d) = (t[0], t[1], t[2], t[3]);
    let q = c.q();
    let mut sum = c.zero();
    for chi in crate::chars::all_chars(q as u32) {
        let term = c.j(a * chi, cj(chi)) * c.j(b * chi, cj(d * chi)) * c.j(cc * chi, d * cj(a * b * cc * chi));
        sum = sum + term.scale(c.sg(cc * chi));
    }
    let rhs = c.j(cc, a * cj(d)) * c.j(b, cc * cj(d)) - c.j(d * cj(b), cj(a)).scale(c.sg(d));
    one(sum.div_int(q - 1)?, rhs)
}

/// The quadratic Pfaff-Saalschutz character sum `S`.
fn quad_ps_sum(c: &Ctx, a: C, b: C, cc: C) -> Result<CycloNum> {
    let phi = c.phi();
    let mut s = c.zero();
    for chi in crate::chars::all_chars(c.q() as u32) {
        let term = c.g(a * chi * chi)?
            * c.g(b * chi)?
            * c.g(cc * cj(chi))?
            * c.g(phi * cj(a * b * cc * chi))?
            * c.g(cj(chi))?
            * c.chi(cj(chi), -4);
        s = s + term;
    }
    Ok(s)
}

fn quad_ps_1_adm(c: &Ctx, t: &[C]) -> bool {
    let (a, b, cc) = (t[0], t[1], t[2]);
    !(a.is_trivial() && b.is_trivial() && cc.is_trivial()) && cc * a != c.phi() && cc * b != c.phi()
}

fn quad_pfaff_saalschutz_1(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b, cc) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let q = c.q();
    let abc2 = cj(a * b * cc * cc);
    let lhs = (c.chi(cc, 4) * c.j(phi * a * cc, abc2) * quad_ps_sum(c, a, b, cc)? * c.gi(phi)?)
        .scale(c.sg(a * b))
        .div_int(q * (q - 1))?;
    let rhs = c.j(abc2, a * cc * cc) * c.j(a, b * b * cc * cc) - c.j(abc2, phi * a * cc) * c.chi(a * cc * cc, 2);
    one(lhs, rhs)
}

fn quad_pfaff_saalschutz_2(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let q = c.q();
    let cc = phi * cj(b);
    let lhs = (quad_ps_sum(c, a, b, cc)? * c.gi(phi)?).div_int(q - 1)?;
    let rhs = (c.chi(b, 4) * c.j(b, b * cj(a))).scale(q * c.sg(a * b)) - c.chi(a, 2).scale(q * c.sg(a * b))
        - c.dt(k, delta_c(a), || Ok(c.j(b, phi).scale((q - 1) * c.sg(b))))?;
    one(lhs, rhs)
}

fn quad_pfaff_saalschutz_3(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let q = c.q();
    let cc = phi * cj(a);
    let lhs = (quad_ps_sum(c, a, b, cc)? * c.gi(phi)?).div_int(q - 1)?;
    let rhs = -(c.chi(b, 4) * c.j(phi, b) * c.j(a * cj(b * b), phi * b * cj(a)))
        - c.chi(a, 2).scale(q * c.sg(a * b))
        + c.dt(k, delta_c(a), || Ok(c.int(q * (q - 1) * c.sg(b))))?
        - c.dt(k, delta_c(phi * b), || Ok(c.int((q - 1) * c.sg(a * b))))?;
    one(lhs, rhs)
}

// ------------------------------------------------------------------
// Algebraic identities

fn order_gt2(_: &Ctx, t: &[C]) -> bool {
    t[0].order() > 2
}

fn dihedral_1(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let a = t[0];
    let a2 = cj(a * a);
    let rhs = c.root_pair(z, |s| Ok(c.ch(a2, c.addi(s, 1)) + c.ch(a2, c.isub(1, s))))?;
    one(c.f2(a, a * c.phi(), c.phi(), z)?, rhs)
}

fn dihedral_2(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let a = t[0];
    let a2 = cj(a * a);
    let half = c.ratio(1, 2).unwrap();
    let w = c.isub(1, z);
    let rhs = c.root_pair(w, |s| {
        Ok(c.ch(a2, c.mul(half, c.addi(s, 1))) + c.ch(a2, c.mul(half, c.isub(1, s))))
    })?;
    one(c.f2(a, a * c.phi(), a * a, z)?, rhs)
}

fn product_adm(_: &Ctx, t: &[C]) -> bool {
    let (a, b) = (t[0], t[1]);
    [a, b, a * b, a * cj(b)].iter().all(|c| c.order() > 2)
}

fn product_2f1_1(c: &Ctx, t: &[C], z: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let f = |x: C| c.f2(x, phi * x, x * x, z);
    let ab_ = a * cj(b);
    let quarter = c.ratio(1, 4).unwrap();
    let rhs = f(a * b)? + c.ch(cj(b * b), c.mul(z, quarter)) * f(ab_)?
        - c.dt(k, c.is(z, 1), || Ok(c.chi(a * b, 4)))?;
    one(f(a)? * f(b)?, rhs)
}

fn product_2f1_2(c: &Ctx, t: &[C], z: Fe, k: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let f = |x: C| c.f2(x, phi * x, phi, z);
    let rhs = f(a * b)? + c.ch(cj(b * b), c.isub(1, z)) * f(a * cj(b))?
        - c.dt(k, z.is_zero(), || Ok(c.int(1)))?;
    one(f(a)? * f(b)?, rhs)
}

fn slater_1521(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let a = t[0];
    let rhs = c.ch(cj(a * a), c.isub(1, z)) - c.ch(cj(a), z) * c.j(a, cj(a * a));
    one(c.f2(a * a, a, a, z)?, rhs)
}

fn mth_mul_adm(_: &Ctx, t: &[C]) -> bool {
    let (a, eta) = (t[0], t[1]);
    !a.pow(eta.order() as i64).is_trivial()
}

fn mth_multiplication(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, eta) = (t[0], t[1]);
    let m = eta.order() as i64;
    let upper: Vec<C> = (0..m).map(|i| a * eta.pow(i)).collect();
    let lower: Vec<C> = (1..m).map(|i| eta.pow(i)).collect();
    let spec = crate::hyper::HGSpec::new(upper, lower)?;
    let am = cj(a.pow(m));
    let mut pre = c.int(1);
    for i in 1..m {
        pre = pre + c.ch(eta.pow(i), z);
    }
    let roots = if z.is_zero() {
        c.ch(am, c.el(1)).scale(m)
    } else {
        let mut s = c.zero();
        for r in c.roots(z, m as u32) {
            s = s + c.ch(am, c.isub(1, r));
        }
        s
    };
    one(c.f(&spec, z)?, (pre * roots).div_int(m)?)
}

fn eg18_gsq(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let eta = t[0];
    let tt = pfaff_arg(c, x);
    let (e3, e4) = (eta.pow(3), eta.pow(4));
    let lhs1 = c.ch(eta.pow(8), x) * c.f2(e3, cj(e3), e4, tt)?.pow(2)?;
    let rhs1 = c.f2(e3, cj(e3), cj(e4), tt)?.pow(2)?;
    let roots = c.roots(x, 3);
    let value = match roots.first() {
        Some(&a) => {
            let zeta = c.roots(c.el(1), 3).into_iter().find(|&w| !c.is(w, 1)).unwrap();
            let e6 = eta.pow(6);
            let mut s = c.int(1);
            for i in 0..3 {
                for j in i + 1..3 {
                    let ui = c.isub(1, c.mul(c.pw(zeta, i as i64), a));
                    let uj = c.isub(1, c.mul(c.pw(zeta, j as i64), a));
                    s = s + c.ch(e6, c.mul(ui, uj));
                }
            }
            s
        }
        None => c.ch(e4, x),
    };
    Ok(vec![(lhs1, rhs1.clone()), (rhs1, value)])
}

fn clausen_adm(c: &Ctx, t: &[C]) -> bool {
    clausen_relaxed(c, t) && t[0] != c.phi()
}

fn clausen_relaxed(c: &Ctx, t: &[C]) -> bool {
    let (cc, s) = (t[0], t[1]);
    let s2 = s * s;
    s2 != c.eps() && s2 != cc && s2 != cc * cc
}

fn clausen(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (cc, s) = (t[0], t[1]);
    let phi = c.phi();
    let lhs = c.f2(cc * cj(s) * phi, s, cc, x)?.pow(2)?;
    let f3 = c.f3([cc * cc * cj(s * s), s * s, cc * phi], [cc * cc, cc], x)?;
    let corr = c.j(cj(s * s), cc * cc) * c.ji(cj(cc), phi)
        + c.dt(k, delta_c(cc), || Ok(c.int(c.q() - 1)))?;
    let rhs = f3 + c.ch(phi, c.isub(1, x)) * c.ch(cj(cc), x) * corr;
    one(lhs, rhs)
}

fn clausen_at_1(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (cc, s) = (t[0], t[1]);
    let phi = c.phi();
    let lhs = c.f3([cc * cc * cj(s * s), s * s, cc * phi], [cc * cc, cc], c.el(1))?;
    let mut r1 = c.zero();
    let mut r2 = c.zero();
    for d in [s, s * phi] {
        let num = c.j(d, cc * cj(s * s)) * c.j(cj(cc) * s * s, phi * cj(d));
        r1 = r1 + (num.clone() * c.ji(phi, phi * cc) * c.ji(s * s, cc * cc * cj(s * s))).scale(c.sg(phi));
        r2 = r2 + num * c.ji(phi * s, cj(cc)) * c.ji(s, cj(cc));
    }
    Ok(vec![(lhs.clone(), r1), (lhs, r2)])
}

fn ramanujan_quarter(c: &Ctx, _: &[C], _: Fe, _: bool) -> R {
    let phi = c.phi();
    let eps = c.eps();
    let q = c.q();
    let lhs = c.p3([phi, phi, phi], [eps, eps], c.ratio(1, 4).unwrap())?;
    let base = if q % 3 == 2 {
        c.int(q)
    } else {
        let e = c.order(3)[0];
        c.j(phi, e).pow(2)? + c.j(phi, cj(e)).pow(2)? + c.int(q)
    };
    one(lhs, base.scale(c.sg(phi)))
}

fn ramanujan_eighth(c: &Ctx, _: &[C], _: Fe, _: bool) -> R {
    let phi = c.phi();
    let eps = c.eps();
    let q = c.q();
    let lhs = c.p3([phi, phi, phi], [eps, eps], c.ratio(-1, 8).unwrap())?;
    let base = if q % 4 == 3 {
        c.int(q)
    } else {
        let e = c.order(4)[0];
        c.j(phi, e).pow(2)? + c.j(phi, cj(e)).pow(2)? + c.int(q)
    };
    one(lhs, c.chi(phi, -2) * base)
}

// ------------------------------------------------------------------
// Higher transformations

fn bb_cubic_arg(c: &Ctx, _: &[C], z: Fe) -> bool {
    !c.addi(c.muli(2, z), 1).is_zero()
}

fn bb_cubic(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let eta = t[0];
    let eps = c.eps();
    let e2 = eta * eta;
    let l = c.isub(1, c.pw(z, 3));
    let r = c.pw(c.div(c.isub(1, z), c.addi(c.muli(2, z), 1)).unwrap(), 3);
    Ok(vec![
        (c.p2(eta, e2, eps, l)?, c.p2(eta, e2, eps, r)?),
        (c.f2(eta, e2, eps, l)?, c.f2(eta, e2, eps, r)?),
    ])
}

fn ec_degree6_arg(c: &Ctx, _: &[C], l: Fe) -> bool {
    let quad = c.addi(c.sub(c.mul(l, l), l), 1);
    !c.is(l, -1) && !c.is(l, 2) && !c.is_ratio(l, 1, 2) && !quad.is_zero()
}

fn ec_degree6(c: &Ctx, t: &[C], l: Fe, _: bool) -> R {
    let eta = t[0];
    let eps = c.eps();
    let phi = c.phi();
    let quad = c.addi(c.sub(c.mul(l, l), l), 1);
    let lm1 = c.addi(l, -1);
    let num = c.muli(27, c.mul(c.mul(l, l), c.mul(lm1, lm1)));
    let arg = c.div(num, c.muli(4, c.pw(quad, 3))).unwrap();
    let e5 = eta.pow(5);
    let e3q = c.ch(eta.pow(3), quad);
    Ok(vec![
        (
            c.p2(eta, e5, eps, arg)?,
            (e3q.clone() * c.p2(phi, phi, eps, l)?).scale(c.sg(eta)),
        ),
        (c.f2(eta, e5, eps, arg)?, e3q * c.f2(phi, phi, eps, l)?),
    ])
}

fn quad_adm(c: &Ctx, t: &[C]) -> bool {
    quad_relaxed(c, t) && t[0] != t[1]
}

fn quad_relaxed(c: &Ctx, t: &[C]) -> bool {
    t[1] != c.phi()
}

/// `-4x/(1-x)^2`, for `x != 1`.
fn quad_arg(c: &Ctx, x: Fe) -> Fe {
    let d = c.isub(1, x);
    c.div(c.muli(-4, x), c.mul(d, d)).unwrap()
}

fn quad_2f1(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (b, d) = (t[0], t[1]);
    let phi = c.phi();
    let cc = d * d;
    let pref = c.ch(cj(cc), c.isub(1, x));
    let lhs = c.guard(pref, || c.f2(d * phi * cj(b), d, cc * cj(b), quad_arg(c, x)))?;
    let den = c.ji(cc, cj(b));
    let rhs = c.f2(b, cc, cc * cj(b), x)?
        - c.dt(k, c.is(x, 1), || Ok(c.j(cc, cj(b * b)) * den.clone()))?
        - c.dt(k, c.is(x, -1), || Ok(c.j(cj(b), d * phi) * den.clone()))?;
    one(lhs, rhs)
}

fn quad_lemma(c: &Ctx, t: &[C], _: Fe, k: bool) -> R {
    let (d, kk, chi) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let q = c.q();
    let cc = d * d;
    let lhs = c.j(cj(cc * kk * kk), cj(chi) * kk);
    let main = (c.g(cj(chi) * kk)? * c.g(cc * kk * chi)? * c.g(d)? * c.g(d * phi)?)
        * c.gi(d * kk)?
        * c.gi(cc)?
        * c.g(cj(d * kk) * phi)?
        * c.ch(cj(kk), c.el(4));
    let rhs = main.scale(c.sg(chi * d * phi)).div_int(q)?
        + c.dt(k, delta_c(d * chi * phi) && delta_c(d * kk * phi), || Ok(c.frac((q - 1) * (q - 1), q)))?
        + c.dt(k, delta_c(d * kk), || Ok(c.int(q - 1)))?;
    one(lhs, rhs)
}

fn quad_aux_adm(c: &Ctx, t: &[C]) -> bool {
    let (b, d) = (t[0], t[1]);
    b != d && b != d * d && !(c.phi() * d * cj(b)).is_trivial()
}

fn quad_aux_44(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (b, d) = (t[0], t[1]);
    let phi = c.phi();
    let cc = d * d;
    Ok(vec![
        (
            c.chi(cj(d), 4) * c.j(phi * cj(b), d) * c.ji(d, d * cj(b)),
            c.j(cc, cj(b * b)) * c.ji(cc, cj(b)),
        ),
        (
            c.j(cj(b), d * phi) * c.ji(cc, cj(b)),
            c.j(cc * cj(b), d * phi) * c.ji(cc, d * cj(b) * phi),
        ),
    ])
}

fn quad_4z1z_arg(c: &Ctx, _: &[C], z: Fe) -> bool {
    !c.is(z, 1) && !c.is_ratio(z, 1, 2)
}

fn four_z(c: &Ctx, z: Fe) -> Fe {
    c.muli(4, c.mul(z, c.isub(1, z)))
}

fn quad_4z1z_1(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (b, d) = (t[0], t[1]);
    let phi = c.phi();
    let cc = d * d;
    let lhs = c.f2(d * phi * cj(b), d, cc * cj(b), four_z(c, z))?;
    one(lhs, c.f2(cc * cj(b * b), cc, cc * cj(b), z)?)
}

fn squares_nontrivial(_: &Ctx, t: &[C]) -> bool {
    !(t[0] * t[0]).is_trivial() && !(t[1] * t[1]).is_trivial()
}

fn quad_4z1z_2(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let lhs = c.f2(a, b, a * b * phi, four_z(c, z))?;
    one(lhs, c.f2(a * a, b * b, a * b * phi, z)?)
}

fn kummer_quad_adm(c: &Ctx, t: &[C]) -> bool {
    let (a, b) = (t[0], t[1]);
    !b.is_trivial() && !(b * b * cj(a)).is_trivial() && !(a * cj(b) * c.phi()).is_trivial()
}

fn not_pm1(c: &Ctx, _: &[C], z: Fe) -> bool {
    !c.is(z, 1) && !c.is(z, -1)
}

fn kummer_quad(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let zp = c.addi(z, 1);
    let arg = c.div(c.muli(4, z), c.mul(zp, zp)).unwrap();
    let lhs = c.f2(a, b, b * b, arg)?;
    let rhs = c.ch(a * a, zp) * c.f2(a, a * phi * cj(b), b * phi, c.mul(z, z))?;
    one(lhs, rhs)
}

fn kummer_quad_eta4_adm(c: &Ctx, t: &[C]) -> bool {
    let (a, b, eta) = (t[0], t[1], t[2]);
    !(a * eta).is_trivial() && !(b * eta).is_trivial() && !(a * cj(b) * c.phi()).is_trivial()
}

fn not_0_pm1(c: &Ctx, t: &[C], z: Fe) -> bool {
    !z.is_zero() && not_pm1(c, t, z)
}

fn kummer_quad_eta4(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, b, eta) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let zp = c.addi(z, 1);
    let arg = c.div(c.muli(4, z), c.mul(zp, zp)).unwrap();
    let lhs = c.f2(a * b, b * eta, phi * b * b, arg)?;
    let rhs = c.ch(a * a * b * b, zp) * c.f2(a * b, a * eta, b * cj(eta), c.mul(z, z))?;
    one(lhs, rhs)
}

// ------------------------------------------------------------------
// Cubic identities

fn gs_cubic(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let a = t[0];
    let phi = c.phi();
    let xm = c.isub(1, x);
    let arg1 = c.mul(c.mul(c.ratio(27, 4).unwrap(), x), c.mul(xm, xm));
    let lhs = c.f2(a, cj(a), phi, arg1)?;
    let a3 = a.pow(3);
    let m3 = c.chi(phi, -3);
    let third = c.ratio(1, 3);
    let rhs = c.f2(a3, cj(a3), phi, c.mul(c.ratio(3, 4).unwrap(), x))?
        - c.dt(k, c.is(x, 1), || Ok(m3.clone()))?
        - c.dt(k, third == Some(x), || Ok(m3.scale(c.sg(a))))?;
    one(lhs, rhs)
}

fn gs_eval_adm(_: &Ctx, t: &[C]) -> bool {
    let (a, chi) = (t[0], t[1]);
    [a.pow(6), chi.pow(6), (a * chi).pow(3), (cj(a) * chi).pow(3)]
        .iter()
        .all(|c| !c.is_trivial())
}

fn gs_eval_34(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, chi, eta) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let a3 = a.pow(3);
    let lhs = c.f3([a3, cj(a3), cj(chi)], [phi, cj(chi.pow(3))], c.ratio(3, 4).unwrap())?;
    let mut r1 = c.zero();
    let mut r2 = c.zero();
    for bb in crate::chars::all_chars(c.q() as u32).filter(|b| b.pow(3) == a3) {
        r1 = r1
            + c.j(bb * chi, eta) * c.j(cj(bb) * chi, cj(eta)) * c.ji(bb, chi * eta) * c.ji(cj(bb), chi * cj(eta));
        r2 = r2 + c.j(bb * chi, cj(bb) * chi) * c.ji(eta * chi, chi * cj(eta));
    }
    Ok(vec![(lhs.clone(), r1), (lhs, r2.scale(c.sg(a)))])
}

fn bailey_excl(_: &Ctx, t: &[C]) -> [C; 6] {
    let (a, b) = (t[0], t[1]);
    let a3 = a.pow(3);
    let phi = MultChar::quadratic(a.q());
    [a3, b, a3 * cj(b * b), a3 * a3 * cj(b.pow(3)), phi * a3 * cj(b), phi * a3 * cj(b.pow(3))]
}

fn bailey_adm(c: &Ctx, t: &[C]) -> bool {
    bailey_excl(c, t).iter().all(|x| !x.is_trivial())
}

fn bailey_relaxed(c: &Ctx, t: &[C]) -> bool {
    // drops the exclusion on phi A^3 conj(B)^3
    bailey_excl(c, t)[..5].iter().all(|x| !x.is_trivial())
}

/// The shared evaluation term `T(s)`.
fn bailey_t(c: &Ctx, a: C, b: C, s: Fe) -> Result<CycloNum> {
    let phi = c.phi();
    let a3 = a.pow(3);
    let den = c.gi(phi * cj(b))? * c.gi(cj(a3) * b)? * c.gi(a3)?;
    let mut sum = c.zero();
    for chi in crate::chars::all_chars(c.q() as u32).filter(|x| x.pow(3) == cj(a3)) {
        sum = sum + c.g(cj(chi))? * c.g(phi * cj(b * chi))? * c.g(b * cj(a3 * chi))? * c.ch(cj(chi), s);
    }
    Ok(sum * den)
}

fn bailey_lower_const(c: &Ctx, a: C, b: C) -> Result<CycloNum> {
    let phi = c.phi();
    let a3 = a.pow(3);
    Ok(c.g(phi)? * c.g(cj(a3))? * c.gi(phi * cj(b))? * c.gi(cj(a3) * b)?)
}

fn bailey_cubic_1(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, eta) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let a3 = a.pow(3);
    let xm = c.isub(1, x);
    let pref = c.ch(cj(a3), xm);
    let lhs = c.guard(pref, || {
        let arg = c.div(c.muli(27, c.mul(x, x)), c.muli(4, c.pw(xm, 3))).unwrap();
        c.f3([a, a * eta, a * cj(eta)], [phi * b, a3 * cj(b)], arg)
    })?;
    let rhs = c.f3([a3, b, phi * a3 * cj(b)], [b * b, a3 * a3 * cj(b * b)], c.muli(4, x))?
        - c.dt(k, c.is(x, -2), || bailey_lower_const(c, a, b))?
        - c.dt(k, c.is(x, 1), || bailey_t(c, a, b, c.el(-4)))?;
    one(lhs, rhs)
}

fn bailey_cubic_2(c: &Ctx, t: &[C], x: Fe, k: bool) -> R {
    let (a, b, eta) = (t[0], t[1], t[2]);
    let phi = c.phi();
    let a3 = a.pow(3);
    let xm = c.addi(x, -1);
    let pref = c.ch(cj(a3), c.isub(1, x));
    let lhs = c.guard(pref, || {
        let arg = c.div(c.muli(27, x), c.muli(4, c.pw(xm, 3))).unwrap();
        c.f3([a, a * eta, a * cj(eta)], [phi * b, a3 * cj(b)], arg)
    })?;
    let quarter = c.ratio(1, 4).unwrap();
    let rhs = c.f3([a3, a3 * cj(b * b), cj(a3) * b * b], [a3 * cj(b), phi * b], c.mul(x, quarter))?
        - c.dt(k, c.is_ratio(x, -1, 2), || Ok(c.chi(a3, 2) * bailey_lower_const(c, a, b)?))?
        - c.dt(k, c.is(x, 1), || bailey_t(c, a, b, c.el(4)))?;
    one(lhs, rhs)
}

fn bailey_eval_4(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let a3 = a.pow(3);
    let lhs = c.f3([a3, b, phi * a3 * cj(b)], [b * b, a3 * a3 * cj(b * b)], c.el(4))?;
    one(lhs, bailey_t(c, a, b, c.el(-4))?)
}

fn bailey_eval_14(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let a3 = a.pow(3);
    let lhs = c.f3([a3, a3 * cj(b * b), cj(a3) * b * b], [a3 * cj(b), phi * b], c.ratio(1, 4).unwrap())?;
    one(lhs, bailey_t(c, a, b, c.el(4))?)
}

fn bailey_degenerate_adm(_: &Ctx, t: &[C]) -> bool {
    !t[0].pow(6).is_trivial()
}

fn bailey_degenerate_arg(c: &Ctx, _: &[C], x: Fe) -> bool {
    !x.is_zero() && !c.is(x, 1) && !c.is_ratio(x, 1, 4) && !c.is_ratio(x, -1, 8)
}

fn bailey_degenerate(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (e, eta) = (t[0], t[1]);
    let phi = c.phi();
    let e3 = e.pow(3);
    let lower = e * e * phi * eta;
    let lhs = c.f2(e3, eta * cj(e), lower, x)?;
    let w = c.isub(1, c.muli(4, x));
    let arg = c.div(c.muli(-27, x), c.pw(w, 3)).unwrap();
    let rhs = c.ch(cj(e3), w) * c.f2(e, e * eta, lower, arg)?;
    one(lhs, rhs)
}

fn andrews_stanton_adm(_: &Ctx, t: &[C]) -> bool {
    let (a, b) = (t[0], t[1]);
    let phi = MultChar::quadratic(a.q());
    [a, b, b * cj(a * a), b * b * cj(a), b.pow(3) * cj(a * a), b.pow(3) * phi * cj(a)]
        .iter()
        .all(|c| !c.is_trivial())
}

fn andrews_stanton_arg(c: &Ctx, _: &[C], x: Fe) -> bool {
    !c.is(x, 1) && !c.is(x, -1) && !c.is_ratio(x, 1, 2)
}

fn andrews_stanton(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let (a, b) = (t[0], t[1]);
    let phi = c.phi();
    let upper = [a, b, a * phi * cj(b)];
    let lower = [b * b, a * a * cj(b * b)];
    let xm = c.isub(1, x);
    let lhs = c.f3(upper, lower, c.muli(4, c.mul(x, xm)))?;
    let arg = c.div(c.muli(-4, x), c.mul(xm, xm)).unwrap();
    let rhs = c.ch(cj(a * a), xm) * c.f3(upper, lower, arg)?;
    one(lhs, rhs)
}

fn deg24_arg(c: &Ctx, _: &[C], x: Fe) -> bool {
    !c.is_ratio(x, -1, 8) && !c.is_ratio(x, 1, 4)
}

fn deg24_234(c: &Ctx, t: &[C], x: Fe, _: bool) -> R {
    let eta = t[0];
    let w = c.isub(1, c.muli(4, x));
    let arg = c.div(c.muli(-27, x), c.pw(w, 3)).unwrap();
    let lhs = c.f2(cj(eta), eta.pow(7), eta.pow(18), arg)?;
    let den = c.muli(4, w);
    let e3 = eta.pow(3);
    let rhs = c.root_pair(c.isub(1, x), |s| {
        let u = c.addi(s, 1);
        let v = c.isub(1, s);
        Ok(c.ch(e3, c.div(c.mul(u, u), den).unwrap()) + c.ch(e3, c.div(c.mul(v, v), den).unwrap()))
    })?;
    one(lhs, rhs)
}

// ------------------------------------------------------------------
// Isogeny, units, involution

fn isogeny_arg(c: &Ctx, _: &[C], l: Fe) -> bool {
    !l.is_zero() && !c.is(l, 1) && !c.is(l, -1)
}

fn isogeny_trace(c: &Ctx, t: &[C], l: Fe, _: bool) -> R {
    let eta = t[0];
    let phi = c.phi();
    let e = |k: i64| eta.pow(k);
    let lhs = c.p2(e(2), e(4), cj(e(2)), l)?;
    let lm = c.isub(1, l);
    let arg = c.div(c.muli(-4, l), c.mul(lm, lm)).unwrap();
    let rhs = c.ch(cj(e(2)), lm) * c.j(e(4), phi) * c.ji(e(3), cj(e(5))) * c.p2(e(1), e(3), cj(e(2)), arg)?;
    one(lhs, rhs)
}

fn r_eta_unit(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let eta = t[0];
    let e = |k: i64| eta.pow(k);
    let r = c.j(e(2), e(5)) * c.ji(e(3), e(4));
    let s = c.j(e(4), c.phi()) * c.ji(e(3), cj(e(5)));
    Ok(vec![(&r * &r.conj(), c.int(1)), (&s * &s.conj(), c.int(1))])
}

fn stanton_involution(c: &Ctx, _: &[C], z: Fe, k: bool) -> R {
    let phi = c.phi();
    // G(z) = eps(z) + phi(1 - z), an integer
    let g = |z: Fe| -> i64 { (!z.is_zero()) as i64 + phi.sign_at(c, c.isub(1, z)) };
    let ff = |z: Fe| c.muli(g(z), z);
    let lhs1 = ff(ff(z));
    let factor = (1 + phi.sign_at(c, c.isub(1, z))) * (1 + phi.sign_at(c, c.isub(1, c.muli(2, z))));
    let d1 = if k && c.is(z, 1) { c.chi(phi, -1).as_i64()? } else { 0 };
    let rhs1 = c.sub(c.muli(factor, z), c.el(d1));
    let lhs2 = g(z) * g(c.muli(g(z), z));
    let mut rhs2 = factor;
    if k && z.is_zero() {
        rhs2 -= 3;
    }
    if k && c.is(z, 1) {
        rhs2 -= c.sg(phi);
    }
    Ok(vec![
        (c.int(lhs1.raw() as i64), c.int(rhs1.raw() as i64)),
        (c.int(lhs2), c.int(rhs2)),
    ])
}

trait SignAt {
    fn sign_at(self, c: &Ctx, x: Fe) -> i64;
}

impl SignAt for MultChar {
    /// The value of a real character as an integer.
    fn sign_at(self, c: &Ctx, x: Fe) -> i64 {
        c.ch(self, x).as_i64().expect("real character")
    }
}

// ------------------------------------------------------------------
// Conjectures

fn cohen_4f3(c: &Ctx, t: &[C], _: Fe, _: bool) -> R {
    let eta = t[0];
    let e = |k: i64| eta.pow(k);
    let eps = c.eps();
    let spec = crate::hyper::HGSpec::new(vec![e(4), e(8), e(3), e(9)], vec![eps, eps, eps])?;
    let lhs = c.f(&spec, c.el(1))?;
    let rhs = -c.j(e(4), e(4)).pow(3)? - c.j(e(8), e(8)).pow(3)? + c.int(c.sg(eta) * c.field().p() as i64);
    one(lhs, rhs)
}

fn tuyang_466_common(c: &Ctx, z: Fe, mut visit: impl FnMut(Fe, Fe, Fe, Fe) -> Result<()>) -> Result<()> {
    // alpha^3 = -3, beta^2 = -2
    let alphas = c.roots(c.el(-3), 3);
    let betas = c.roots(c.el(-2), 2);
    for &al in &alphas {
        for &be in &betas {
            let az = c.addi(c.mul(al, z), 1);
            let zz = c.mul(z, z);
            let zm = c.isub(1, z);
            let fnum = c.mul(
                c.mul(c.muli(12, c.mul(al, z)), c.mul(zm, zm)),
                c.isub(1, c.muli(9, zz)),
            );
            let Some(f) = c.div(fnum, c.pw(az, 6)) else { continue };
            let bp = c.addi(be, 1);
            let cub = c.addi(c.mul(c.div(c.addi(c.muli(4, be), -7), c.el(3)).unwrap(), zz), 1);
            let gnum = c.mul(c.mul(c.neg(c.muli(4, c.pw(bp, 4))), z), c.pw(cub, 4));
            let quad = c.sub(
                c.addi(c.mul(c.addi(c.muli(2, be), 4), z), 1),
                c.mul(c.addi(c.muli(2, be), 1), zz),
            );
            let gden = c.mul(c.mul(c.addi(z, 1), c.isub(1, c.muli(3, z))), c.pw(quad, 4));
            let Some(g) = c.div(gnum, gden) else { continue };
            if f.is_zero() || c.is(f, 1) || g.is_zero() || c.is(g, 1) {
                continue;
            }
            visit(f, g, al, quad)?;
        }
    }
    Ok(())
}

fn tuyang_466(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let eta = t[0];
    let e = |k: i64| eta.pow(k);
    let phi = c.phi();
    let mut out = Vec::new();
    tuyang_466_common(c, z, |f, g, al, quad| {
        let w = c.mul(c.addi(z, 1), c.isub(1, c.muli(3, z)));
        let lhs = c.ch(e(3), w) * c.ch(cj(e(6)), c.addi(c.mul(al, z), 1)) * c.f2(e(5), e(9), cj(e(6)), f)?;
        let rhs = c.ch(phi, quad) * c.f2(e(3), e(9), cj(e(6)), g)?;
        out.push((lhs, rhs));
        Ok(())
    })?;
    Ok(out)
}

fn tuyang_466b(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let eta = t[0];
    let e = |k: i64| eta.pow(k);
    let phi = c.phi();
    let mut out = Vec::new();
    tuyang_466_common(c, z, |f, g, al, quad| {
        let u = c.mul(
            c.mul(c.isub(1, z), c.addi(c.muli(3, z), 1)),
            c.addi(c.mul(al, z), 1),
        );
        let w = c.mul(c.addi(z, 1), c.isub(1, c.muli(3, z)));
        let lhs = c.ch(e(6), u) * c.ch(cj(e(9)), w) * c.f2(e(11), cj(e(9)), cj(e(6)), f)?;
        let rhs = c.ch(phi, quad) * c.f2(e(9), cj(e(9)), e(6), g)?;
        out.push((lhs, rhs));
        Ok(())
    })?;
    Ok(out)
}

fn tuyang_ord20(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let eta = t[0];
    let e = |k: i64| eta.pow(k);
    let zz = c.mul(z, z);
    let a = c.sub(c.isub(1, z), zz);
    let b = c.sub(c.addi(c.muli(4, z), 1), zz);
    let num = c.mul(c.muli(64, z), c.pw(a, 5));
    let Some(f) = c.div(num, c.mul(c.isub(1, zz), c.pw(b, 5))) else {
        return Ok(vec![]);
    };
    if z.is_zero() || f.is_zero() || c.is(f, 1) {
        return Ok(vec![]);
    }
    let lhs = c.f2(e(1), e(5), cj(e(4)), f)?;
    let rhs = c.ch(e(1), c.isub(1, zz)) * c.ch(e(5), b) * c.f2(e(6), e(8), cj(e(2)), zz)?;
    one(lhs, rhs)
}

fn tuyang_ord6_adm(_: &Ctx, t: &[C]) -> bool {
    !t[0].pow(6).is_trivial()
}

fn tuyang_ord6_arg(c: &Ctx, _: &[C], z: Fe) -> bool {
    !c.is(z, 1) && !c.is(z, -1) && !c.is(z, 3) && !c.is(z, -3)
}

fn tuyang_ord6(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, eta) = (t[0], t[1]);
    let phi = c.phi();
    let zp = c.addi(z, 1);
    let third = c.isub(1, c.mul(z, c.ratio(1, 3).unwrap()));
    let lhs = c.ch(a * eta, zp)
        * c.ch(a.pow(3) * phi, third)
        * c.f2(a * a * eta * eta, a * eta * eta, a.pow(3), c.mul(z, z))?;
    let den = c.mul(zp, c.pw(c.isub(3, z), 3));
    let arg = c.div(c.muli(16, c.pw(z, 3)), den).unwrap();
    one(lhs, c.f2(a * eta, a * phi, a * a, arg)?)
}

fn tuyang_ord12_adm(_: &Ctx, t: &[C]) -> bool {
    !t[0].pow(12).is_trivial()
}

fn tuyang_ord12(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let (a, eta) = (t[0], t[1]);
    let e = |k: i64| eta.pow(k);
    let zm = c.isub(1, z);
    let nm = c.isub(1, c.muli(9, z));
    let zz = c.mul(z, z);
    let (Some(u), Some(v)) = (
        c.div(c.mul(c.muli(-27, zz), zm), nm),
        c.div(c.muli(-64, c.pw(z, 3)), c.mul(c.pw(zm, 3), nm)),
    ) else {
        return Ok(vec![]);
    };
    if [u, v].iter().any(|&w| w.is_zero() || c.is(w, 1)) {
        return Ok(vec![]);
    }
    let lhs = c.ch(a.pow(9) * e(9), zm) * c.f2(a.pow(4) * e(4), a * a * e(4), a.pow(6), u)?;
    let rhs = c.ch(a * eta, nm) * c.f2(a.pow(3) * e(3), a * e(3), a.pow(4), v)?;
    one(lhs, rhs)
}

fn dihedral_233_arg(c: &Ctx, _: &[C], z: Fe) -> bool {
    !z.is_zero() && !c.is(z, 1) && !c.is(z, -1) && !c.addi(c.mul(z, z), 3).is_zero()
}

fn dihedral_233(c: &Ctx, t: &[C], z: Fe, _: bool) -> R {
    let eta = t[0];
    let phi = c.phi();
    let zz = c.mul(z, z);
    let zp = c.addi(z, 1);
    let arg = c.div(c.mul(c.muli(2, z), c.addi(zz, 3)), c.pw(zp, 3)).unwrap();
    let lhs = c.f2(cj(eta), eta.pow(3), phi, arg)?;
    let w = c.addi(c.mul(zz, c.ratio(1, 3).unwrap()), 1);
    let den = c.muli(2, zp);
    let e3 = eta.pow(3);
    let rhs = c.root_pair(w, |s| {
        Ok(c.ch(e3, c.div(c.addi(s, 1), den).unwrap()) + c.ch(e3, c.div(c.isub(1, s), den).unwrap()))
    })?;
    one(lhs, rhs)
}

fn vidunas(c: &Ctx, t: &[C], u: Fe, _: bool) -> R {
    let eta = t[0];
    let u3 = c.pw(u, 3);
    let den = c.addi(c.muli(8, u3), -1);
    let Some(base) = c.div(c.muli(4, c.mul(u, c.addi(u3, 1))), den) else {
        return Ok(vec![]);
    };
    let arg = c.pw(base, 3);
    if arg.is_zero() || c.is(arg, 1) {
        return Ok(vec![]);
    }
    let lhs = c.f2(cj(eta), eta.pow(3), cj(eta.pow(4)), arg)?;
    let rhs = c.ch(cj(eta.pow(3)), c.isub(1, c.muli(8, u3))).scale(2);
    one(lhs, rhs)
}

// ------------------------------------------------------------------

fn thm(id: &'static str, anchor: &'static str, eval: super::Eval) -> IdentityRecord {
    IdentityRecord::new(id, Theorem, anchor, eval)
}

fn conj(id: &'static str, anchor: &'static str, eval: super::Eval) -> IdentityRecord {
    IdentityRecord::new(id, Conjecture, anchor, eval)
}

const A: &[(&str, Slot)] = &[("A", Any)];
const AB: &[(&str, Slot)] = &[("A", Any), ("B", Any)];
const ABC: &[(&str, Slot)] = &[("A", Any), ("B", Any), ("C", Any)];
const ABCD: &[(&str, Slot)] = &[("A", Any), ("B", Any), ("C", Any), ("D", Any)];
const BC: &[(&str, Slot)] = &[("B", Any), ("C", Any)];
const AC: &[(&str, Slot)] = &[("A", Any), ("C", Any)];
const BD: &[(&str, Slot)] = &[("B", Any), ("D", Any)];
const CS: &[(&str, Slot)] = &[("C", Any), ("S", Any)];
const PSI: &[(&str, Slot)] = &[("psi", Any)];
const ETA3: &[(&str, Slot)] = &[("eta", Order(3))];
const ETA12: &[(&str, Slot)] = &[("eta", Order(12))];
const ETA20: &[(&str, Slot)] = &[("eta", Order(20))];
const ETA24: &[(&str, Slot)] = &[("eta", Order(24))];
const A_ETA: &[(&str, Slot)] = &[("A", Any), ("eta", Slot::Orders(&[2, 3, 4]))];
const A_ETA6: &[(&str, Slot)] = &[("A", Any), ("eta", Order(6))];
const A_ETA12: &[(&str, Slot)] = &[("A", Any), ("eta", Order(12))];
const AB_ETA4: &[(&str, Slot)] = &[("A", Any), ("B", Any), ("eta", Order(4))];
const AB_ETA3: &[(&str, Slot)] = &[("A", Any), ("B", Any), ("eta", Order(3))];
const A_CHI_ETA3: &[(&str, Slot)] = &[("A", Any), ("chi", Any), ("eta", Order(3))];
const E_ETA3: &[(&str, Slot)] = &[("E", Any), ("eta", Order(3))];
const DKX: &[(&str, Slot)] = &[("D", Any), ("K", Any), ("chi", Any)];

fn a_nontrivial(_: &Ctx, t: &[C]) -> bool {
    !t[0].is_trivial()
}

fn build() -> Vec<IdentityRecord> {
    vec![
        // Gauss and Jacobi sums
        thm("gauss-reflection", "reflection formula g(A)g(conj A)", gauss_reflection)
            .slots(A).point().delta().on(ALL_FIELDS),
        thm("gauss-reflection-inv", "reflection formula, inverted", gauss_reflection_inv)
            .slots(A).point().delta().on(ALL_FIELDS),
        thm("gauss-conj", "g(conj A) in terms of g(A)", gauss_conj)
            .slots(A).point().delta().on(ALL_FIELDS),
        thm("gauss-conj-inv", "1/g(conj A) in terms of g(A)", gauss_conj_inv)
            .slots(A).point().delta().on(ALL_FIELDS),
        thm("jacobi-gauss", "Jacobi sums through Gauss sums", jacobi_gauss)
            .slots(AB).point().delta().on(ALL_FIELDS),
        thm("jacobi-conj", "J(A, conj A) and J(A, eps)", jacobi_conj)
            .slots(A).point().delta().on(ALL_FIELDS),
        thm("jacobi-swap", "J(A, conj B) = A(-1) J(A, B conj A)", jacobi_swap)
            .slots(AB).point().on(ALL_FIELDS),
        thm("double-jacobi", "duplication formula for J(A, A)", double_jacobi)
            .field("q odd", odd).slots(A).point().admit(a_nontrivial).on(&[3, 5, 7, 9, 11, 13, 25, 27, 49]),
        thm("rising-product", "(A)_{chi1 chi2} = (A)_{chi1} (A chi1)_{chi2}", rising_product)
            .slots(ABC).point().on(ALL_FIELDS),
        thm("hasse-davenport-product", "multiplication formula, m = 2, 3", hd_product)
            .slots(PSI).point().on(ALL_FIELDS),
        thm("hasse-davenport-lift", "g(A_r) = (-1)^(r-1) g(A)^r, r = 2, 3", hd_lift)
            .slots(A).point().on(ALL_FIELDS),
        // Kummer relations
        thm("kummer24-ind-1", "Greene's independent solutions, \"For any characters A, B, C\"", kummer_ind_1)
            .slots(ABC).delta(),
        thm("kummer24-ind-2", "Greene's independent solutions, lambda -> 1/lambda", kummer_ind_2)
            .slots(ABC).delta(),
        thm("kummer24-ind-3", "Greene's independent solutions, lambda -> 1 - lambda", kummer_ind_3)
            .slots(ABC),
        thm("kummer24-pfaff-euler-1", "Pfaff and Euler transformations (1)", pfaff_euler_1)
            .slots(ABC).delta(),
        thm("kummer24-pfaff-euler-2", "Pfaff and Euler transformations (2)", pfaff_euler_2)
            .slots(ABC).delta(),
        thm("kummer24-pfaff-euler-3", "Pfaff and Euler transformations (3)", pfaff_euler_3)
            .slots(ABC).delta(),
        thm("kummer24-normalized-1", "normalized independent solutions (1)", normalized_1)
            .slots(ABC).delta(),
        thm("kummer24-normalized-2", "normalized independent solutions (2)", normalized_2)
            .slots(ABC).delta(),
        thm("kummer24-normalized-3", "normalized independent solutions (3)", normalized_3)
            .slots(ABC),
        thm("kummer24-normalized-4", "normalized independent solutions (4)", normalized_4)
            .slots(ABC).delta(),
        thm("kummer24-normalized-5", "normalized independent solutions (5)", normalized_5)
            .slots(ABC).delta(),
        thm("kummer24-normalized-6", "normalized independent solutions (6)", normalized_6)
            .slots(ABC).delta(),
        thm("helversen-pasotto", "identity of Helversen-Pasotto", helversen_pasotto)
            .slots(ABCD).point().delta().on(&[3, 4, 5, 7, 9]),
        // imprimitive evaluations
        thm("imprimitive-P-1", "P[eps, B; C], \"Suppose lambda != 0\"", imprimitive_p_1)
            .slots(BC).arg(nonzero),
        thm("imprimitive-P-2", "P[A, B; B]", imprimitive_p_2).slots(AB).arg(nonzero),
        thm("imprimitive-P-3", "P[A, B; A]", imprimitive_p_3).slots(AB).arg(nonzero).delta(),
        thm("imprimitive-P-4", "P[A, eps; C]", imprimitive_p_4).slots(AC).arg(nonzero).delta(),
        thm("imprimitive-F-1", "F[eps, B; C], \"A, B, C are nontrivial\"", imprimitive_f_1)
            .slots(BC).admit(nontrivial).arg(nonzero),
        thm("imprimitive-F-2", "F[A, B; B]", imprimitive_f_2)
            .slots(AB).admit(nontrivial).arg(nonzero),
        thm("imprimitive-F-3", "F[A, B; A]", imprimitive_f_3)
            .slots(AB).admit(nontrivial).arg(nonzero),
        thm("imprimitive-F-4", "F[A, eps; C]", imprimitive_f_4)
            .slots(AC).admit(nontrivial).arg(nonzero).delta(),
        // primitive relations
        thm("commute-conjugate-1", "\"A,B != eps and A,B != C\", swapping", commute_conjugate_1)
            .slots(ABC).admit(commute_adm),
        thm("commute-conjugate-2", "\"A,B != eps and A,B != C\", conjugation", commute_conjugate_2)
            .slots(ABC).admit(commute_adm).arg(not01),
        thm("continuation-2x", "\"traces of 4-dimensional Galois representations\"", continuation_2x)
            .slots(ABC).admit(commute_adm).arg(nonzero),
        // evaluations
        thm("gauss-eval", "\"analogue of Gauss' evaluation\"", gauss_eval)
            .slots(ABC).point().on(&[3, 4, 5, 7, 9, 13]),
        thm("kummer-eval-P", "\"value of the 2P1 function at -1\"", kummer_eval_p)
            .field("q odd", odd).slots(BD).point().admit(|_, t| t[0] * t[0] != t[1] * t[1]).on(&[3, 5, 7, 9, 11, 13, 25]),
        thm("kummer-eval-F", "\"analogue of the Kummer evaluation\"", kummer_eval_f)
            .field("q odd", odd).slots(BD).point().admit(|_, t| t[0] * t[0] != t[1] * t[1]).on(&[3, 5, 7, 9, 11, 13, 25]),
        thm("pfaff-saalschutz-P", "\"Greene obtained the following analogue\"", pfaff_saalschutz_p)
            .slots(ABCD).point(),
        thm("pfaff-saalschutz-J", "\"direct sum of two Grossencharacters\"", pfaff_saalschutz_j)
            .slots(ABCD).point(),
        thm("quad-pfaff-saalschutz-1", "quadratic Pfaff-Saalschutz, \"not simultaneously trivial\"", quad_pfaff_saalschutz_1)
            .field("q odd", odd).slots(ABC).point().admit(quad_ps_1_adm).on(ODD),
        thm("quad-pfaff-saalschutz-2", "quadratic Pfaff-Saalschutz, C = phi conj B", quad_pfaff_saalschutz_2)
            .field("q odd", odd).slots(AB).point().delta().on(&[3, 5, 7, 9, 11, 13]),
        thm("quad-pfaff-saalschutz-3", "quadratic Pfaff-Saalschutz, C = phi conj A", quad_pfaff_saalschutz_3)
            .field("q odd", odd).slots(AB).point().delta().on(&[3, 5, 7, 9, 11, 13]),
        // algebraic identities
        thm("dihedral-1", "dihedral evaluation, \"Let q be an odd prime power\" (1)", dihedral_1)
            .field("q odd", odd).slots(A).admit(order_gt2).arg(nonzero).on(&[5, 7, 9, 11, 13, 25]),
        thm("dihedral-2", "dihedral evaluation, \"Let q be an odd prime power\" (2)", dihedral_2)
            .field("q odd", odd).slots(A).admit(order_gt2).arg(nonzero).on(&[5, 7, 9, 11, 13, 25]),
        thm("product-2F1-1", "product of 2F1, \"have orders larger than 2\" (1)", product_2f1_1)
            .field("q odd", odd).slots(AB).admit(product_adm).delta().on(&[7, 9, 11, 13, 25]),
        thm("product-2F1-2", "product of 2F1, \"have orders larger than 2\" (2)", product_2f1_2)
            .field("q odd", odd).slots(AB).admit(product_adm).delta().on(&[7, 9, 11, 13, 25]),
        thm("slater-1521", "\"the following finite field analogue\"", slater_1521)
            .slots(A).admit(a_nontrivial).on(&[3, 4, 5, 7, 9, 13]),
        thm("mth-multiplication", "\"multiplication formula for Jacobi sums\"", mth_multiplication)
            .slots(A_ETA).admit(mth_mul_adm).on(&[3, 4, 5, 7, 9, 13]),
        thm("eg18-gsq", "\"the finite field versions of\"", eg18_gsq)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).arg(not01).on(&[13, 25, 37, 49]),
        thm("clausen", "Clausen, \"Assume that C != phi\"", clausen)
            .field("q odd", odd).slots(CS).admit(clausen_adm).arg(|c, _, x| !c.is(x, 1)).delta()
            .relax("C != phi", clausen_relaxed).on(&[5, 7, 9, 13]),
        thm("clausen-at-1", "\"which corresponds to a 2-dimensional\"", clausen_at_1)
            .field("q odd", odd).slots(CS).admit(clausen_adm).point().on(&[5, 7, 9, 13, 25]),
        thm("ramanujan-quarter", "\"two period function evaluation formulas\", 1/4", ramanujan_quarter)
            .field("q odd, 3 does not divide q", odd_not3).point().on(&[5, 7, 11, 13, 25, 49]),
        thm("ramanujan-eighth", "\"two period function evaluation formulas\", -1/8", ramanujan_eighth)
            .field("q odd, 3 does not divide q", odd_not3).point().on(&[5, 7, 11, 13, 25, 49]),
        // higher transformations
        thm("bb-cubic", "\"the local zeta functions of these curves\"", bb_cubic)
            .field("q = 1 mod 3", q1_mod3).slots(ETA3).arg(bb_cubic_arg).on(&[4, 7, 13, 16, 19, 25]),
        thm("ec-degree6", "\"For p = 1 (mod 12)\"", ec_degree6)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).arg(ec_degree6_arg).on(&[13, 25, 37, 49]),
        thm("quad-2F1", "quadratic formula, \"When D != phi and B != D\"", quad_2f1)
            .field("q odd", odd).slots(BD).admit(quad_adm).delta()
            .relax("B != D", quad_relaxed).on(&[5, 7, 9, 13, 25]),
        thm("quad-lemma", "\"and set C=D^2\"", quad_lemma)
            .field("q odd", odd).slots(DKX).point().delta().on(&[3, 5, 7, 9]),
        thm("quad-aux-44", "\"which can be checked directly\"", quad_aux_44)
            .field("q odd", odd).slots(BD).point().admit(quad_aux_adm).on(&[3, 5, 7, 9, 11, 13, 25]),
        thm("quad-4z1z-1", "\"invariant under the involution z -> 1-z\" (1)", quad_4z1z_1)
            .field("q odd", odd).slots(BD).admit(quad_adm).arg(quad_4z1z_arg).on(&[5, 7, 9, 13]),
        thm("quad-4z1z-2", "\"invariant under the involution z -> 1-z\" (2)", quad_4z1z_2)
            .field("q odd", odd).slots(AB).admit(squares_nontrivial).arg(quad_4z1z_arg).on(&[5, 7, 9, 13]),
        thm("kummer-quad", "Kummer quadratic transformation, \"when z != +-1\"", kummer_quad)
            .field("q odd", odd).slots(AB).admit(kummer_quad_adm).arg(not_pm1).on(&[5, 7, 9, 13]),
        thm("kummer-quad-eta4", "\"Let eta be a primitive character of order 4\"", kummer_quad_eta4)
            .field("q = 1 mod 4", q1_mod4).slots(AB_ETA4).admit(kummer_quad_eta4_adm).arg(not_0_pm1)
            .on(&[5, 9, 13, 25]),
        // cubic identities
        thm("gs-cubic", "cubic transformation, \"Then for all x in F_q\"", gs_cubic)
            .field("q odd", odd).slots(A).delta().on(&[5, 7, 9, 11, 13, 25, 27]),
        thm("gs-eval-34", "\"none of A^6, chi^6\"", gs_eval_34)
            .field("q = 1 mod 6", q1_mod6).slots(A_CHI_ETA3).point().admit(gs_eval_adm).on(&[19, 25, 37]),
        thm("bailey-cubic-1", "Bailey cubic, \"Let eta be a primitive character of order 3\"", bailey_cubic_1)
            .field("q = 1 mod 6", q1_mod6).slots(AB_ETA3).admit(bailey_adm).delta()
            .relax("phi A^3 conj(B)^3 != eps", bailey_relaxed).on(&[7, 13, 25]),
        thm("bailey-cubic-2", "Bailey cubic, \"a power of prime with\"", bailey_cubic_2)
            .field("q = 1 mod 6", q1_mod6).slots(AB_ETA3).admit(bailey_adm).delta().on(&[7, 13, 25]),
        thm("bailey-eval-4", "cubic evaluation at 4, \"Given the assumptions as in Theorem\"", bailey_eval_4)
            .field("q = 1 mod 6", q1_mod6).slots(AB_ETA3).point().admit(bailey_adm).on(&[7, 13, 19, 25]),
        thm("bailey-eval-14", "cubic evaluation at 1/4, \"Given assumptions as in Theorem\"", bailey_eval_14)
            .field("q = 1 mod 6", q1_mod6).slots(AB_ETA3).point().admit(bailey_adm).on(&[7, 13, 19, 25]),
        thm("bailey-degenerate", "\"a primitive cubic character\"", bailey_degenerate)
            .field("q = 1 mod 6", q1_mod6).slots(E_ETA3).admit(bailey_degenerate_adm).arg(bailey_degenerate_arg)
            .on(&[7, 13, 19, 25]),
        thm("andrews-stanton", "\"For a given finite field\"", andrews_stanton)
            .field("q odd", odd).slots(AB).admit(andrews_stanton_adm).arg(andrews_stanton_arg).on(&[5, 7, 9, 13, 25]),
        thm("deg24-234", "\"Let eta be an order 24 character\"", deg24_234)
            .field("q = 1 mod 24", q1_mod24).slots(ETA24).arg(deg24_arg).on(&[73, 97, 193, 241, 289]),
        // isogeny, units, involution
        thm("isogeny-trace", "\"with D=eta, C=eta^2 and B=eta^4\"", isogeny_trace)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).arg(isogeny_arg).on(&[13, 25, 37, 49]),
        thm("r-eta-unit", "\"is a root of unity\"", r_eta_unit)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).point().on(&[13, 25, 37, 49, 61, 73]),
        thm("stanton-involution", "\"F(F(z))=z when z=0\"", stanton_involution)
            .field("q odd", odd).delta().on(&[3, 5, 7, 9, 11, 13, 25]),
        // conjectures
        conj("cohen-4F3", "\"numeric observation made by Henri Cohen\"", cohen_4f3)
            .field("p = 1 mod 12, prime", prime_q1_mod12).slots(ETA12).point().on(&[13, 37, 61]),
        conj("tuyang-466", "\"Let p = 1 (mod 24)\"", tuyang_466)
            .field("p = 1 mod 24, prime", prime_q1_mod24).slots(ETA24).on(&[73]),
        conj("tuyang-466b", "\"a finite field version of the second formula\"", tuyang_466b)
            .field("p = 1 mod 24, prime", prime_q1_mod24).slots(ETA24).on(&[73]),
        conj("tuyang-ord20", "\"a primitive character of order 20\"", tuyang_ord20)
            .field("q = 1 mod 20", q1_mod20).slots(ETA20).on(&[41]),
        conj("tuyang-ord6", "\"a primitive character of order 6\"", tuyang_ord6)
            .field("q = 1 mod 6", q1_mod6).slots(A_ETA6).admit(tuyang_ord6_adm).arg(tuyang_ord6_arg).on(&[13]),
        conj("tuyang-ord12", "\"with A^{12} != eps\"", tuyang_ord12)
            .field("q = 1 mod 12", q1_mod12).slots(A_ETA12).admit(tuyang_ord12_adm).on(&[37]),
        conj("dihedral-233", "\"Numerical evidence suggests\"", dihedral_233)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).arg(dihedral_233_arg).on(&[13, 37]),
        conj("vidunas", "\"We observe numerically\"", vidunas)
            .field("q = 1 mod 12", q1_mod12).slots(ETA12).on(&[13, 37]),
    ]
}

/// Every record, in a fixed order.
pub fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(build)
}
