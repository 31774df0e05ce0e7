//! Registry of finite-field hypergeometric identities and an exact sweep
//! engine.
//!
//! Each record evaluates a list of displays `(lhs, rhs)` for one character
//! tuple and one argument; the sweep compares them as canonical cyclotomic
//! numbers. Evaluators take a `keep_delta` flag so the delta-correction
//! terms can be stripped for [`delta_audit`].

mod catalog;

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chars::{all_chars, chars_of_order, MultChar};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::hyper::{HGSpec, HyperContext};
use crate::sums::SumsContext;

pub use catalog::registry;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Theorem,
    Conjecture,
}

/// Candidate characters for one slot.
#[derive(Copy, Clone, Debug)]
pub enum Slot {
    Any,
    /// Exact order.
    Order(u32),
    /// Exact order in the list (orders not dividing `q - 1` are skipped).
    Orders(&'static [u32]),
}

/// Whether the record ranges over arguments or is a single evaluation.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Args {
    Point,
    All,
}

pub type Displays = Vec<(CycloNum, CycloNum)>;
pub type Eval = fn(&Ctx, &[MultChar], FieldElement, bool) -> Result<Displays>;
pub type TuplePred = fn(&Ctx, &[MultChar]) -> bool;
pub type ArgPred = fn(&Ctx, &[MultChar], FieldElement) -> bool;

pub struct IdentityRecord {
    pub id: &'static str,
    pub kind: Kind,
    pub anchor: &'static str,
    pub congruence: &'static str,
    pub field_ok: fn(&FiniteField) -> bool,
    pub slots: &'static [(&'static str, Slot)],
    pub args: Args,
    pub admissible: TuplePred,
    pub arg_ok: ArgPred,
    pub eval: Eval,
    pub has_delta: bool,
    /// A weaker admissibility predicate with one stated exclusion dropped.
    pub relaxed: Option<(&'static str, TuplePred)>,
    /// Fields the record is checked on by default.
    pub fields: &'static [u64],
}

fn yes(_: &Ctx, _: &[MultChar]) -> bool {
    true
}

fn any_arg(_: &Ctx, _: &[MultChar], _: FieldElement) -> bool {
    true
}

fn any_field(_: &FiniteField) -> bool {
    true
}

impl IdentityRecord {
    fn new(id: &'static str, kind: Kind, anchor: &'static str, eval: Eval) -> IdentityRecord {
        IdentityRecord {
            id,
            kind,
            anchor,
            congruence: "any q",
            field_ok: any_field,
            slots: &[],
            args: Args::All,
            admissible: yes,
            arg_ok: any_arg,
            eval,
            has_delta: false,
            relaxed: None,
            fields: &[3, 4, 5, 7, 9],
        }
    }

    fn field(mut self, congruence: &'static str, ok: fn(&FiniteField) -> bool) -> Self {
        self.congruence = congruence;
        self.field_ok = ok;
        self
    }

    fn slots(mut self, s: &'static [(&'static str, Slot)]) -> Self {
        self.slots = s;
        self
    }

    fn point(mut self) -> Self {
        self.args = Args::Point;
        self
    }

    fn admit(mut self, p: TuplePred) -> Self {
        self.admissible = p;
        self
    }

    fn arg(mut self, p: ArgPred) -> Self {
        self.arg_ok = p;
        self
    }

    fn delta(mut self) -> Self {
        self.has_delta = true;
        self
    }

    fn relax(mut self, dropped: &'static str, p: TuplePred) -> Self {
        self.relaxed = Some((dropped, p));
        self
    }

    fn on(mut self, fields: &'static [u64]) -> Self {
        self.fields = fields;
        self
    }

    pub fn applies_to(&self, f: &FiniteField) -> bool {
        (self.field_ok)(f)
    }
}

/// Looks up a record by id.
pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    registry()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Evaluation context for one field: cached period values and the
/// character and field helpers the catalog is written in.
pub struct Ctx {
    f: Arc<FiniteField>,
    h: HyperContext,
    cache: RefCell<HashMap<(HGSpec, u32), CycloNum>>,
}

impl Ctx {
    pub fn new(f: &Arc<FiniteField>) -> Ctx {
        Ctx {
            f: f.clone(),
            h: HyperContext::new(f),
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.f
    }

    pub fn sums(&self) -> &SumsContext {
        self.h.sums()
    }

    pub fn q(&self) -> i64 {
        self.f.q() as i64
    }

    fn n(&self) -> u32 {
        self.f.q() - 1
    }

    pub fn eps(&self) -> MultChar {
        MultChar::trivial(self.f.q())
    }

    pub fn phi(&self) -> MultChar {
        MultChar::quadratic(self.f.q())
    }

    pub fn order(&self, k: u32) -> Vec<MultChar> {
        chars_of_order(self.f.q(), k).unwrap_or_default()
    }

    // field arithmetic; operands always come from this field

    pub fn el(&self, n: i64) -> FieldElement {
        self.f.from_int(n)
    }

    pub fn ratio(&self, a: i64, b: i64) -> Option<FieldElement> {
        self.f.from_ratio(a, b)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.f.wrap(self.f.add_raw(a.raw(), b.raw()))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.f.wrap(self.f.sub_raw(a.raw(), b.raw()))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.f.wrap(self.f.mul_raw(a.raw(), b.raw()))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.f.wrap(self.f.neg_raw(a.raw()))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        (!b.is_zero()).then(|| self.f.wrap(self.f.div_raw(a.raw(), b.raw())))
    }

    pub fn pw(&self, a: FieldElement, k: i64) -> FieldElement {
        self.f.wrap(self.f.pow_raw(a.raw(), k))
    }

    /// `a + k` for an integer `k`.
    pub fn addi(&self, a: FieldElement, k: i64) -> FieldElement {
        self.add(a, self.el(k))
    }

    /// `k - a` for an integer `k`.
    pub fn isub(&self, k: i64, a: FieldElement) -> FieldElement {
        self.sub(self.el(k), a)
    }

    pub fn muli(&self, k: i64, a: FieldElement) -> FieldElement {
        self.mul(self.el(k), a)
    }

    pub fn is(&self, a: FieldElement, k: i64) -> bool {
        a == self.el(k)
    }

    pub fn is_ratio(&self, a: FieldElement, num: i64, den: i64) -> bool {
        self.ratio(num, den) == Some(a)
    }

    /// All `w` with `w^k = x`.
    pub fn roots(&self, x: FieldElement, k: u32) -> Vec<FieldElement> {
        self.f.nth_roots(x, k).unwrap_or_default()
    }

    // cyclotomic values

    pub fn int(&self, k: i64) -> CycloNum {
        CycloNum::from_int(self.n(), k)
    }

    pub fn frac(&self, a: i64, b: i64) -> CycloNum {
        CycloNum::from_ratio(self.n(), a, b).expect("nonzero denominator")
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum::zero(self.n())
    }

    /// `c(x)`, zero at `x = 0` for every character.
    pub fn ch(&self, c: MultChar, x: FieldElement) -> CycloNum {
        match c.exp_at(&self.f, x) {
            None => self.zero(),
            Some(e) => CycloNum::zeta(self.n(), e as i64),
        }
    }

    /// `c(k)` at an integer.
    pub fn chi(&self, c: MultChar, k: i64) -> CycloNum {
        self.ch(c, self.el(k))
    }

    /// `c(-1)` as a sign.
    pub fn sg(&self, c: MultChar) -> i64 {
        c.sign(&self.f)
    }

    pub fn j(&self, a: MultChar, b: MultChar) -> CycloNum {
        self.sums().jacobi(a, b)
    }

    pub fn ji(&self, a: MultChar, b: MultChar) -> CycloNum {
        self.sums().jacobi_inv(a, b)
    }

    pub fn g(&self, a: MultChar) -> Result<CycloNum> {
        self.sums().gauss(a)
    }

    pub fn gi(&self, a: MultChar) -> Result<CycloNum> {
        self.sums().gauss_inv(a)
    }

    /// `P[spec; x]`, cached per field.
    pub fn p(&self, spec: &HGSpec, x: FieldElement) -> Result<CycloNum> {
        let key = (spec.clone(), x.raw());
        if let Some(v) = self.cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = self.h.period_direct(spec, x)?;
        self.cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    pub fn f(&self, spec: &HGSpec, x: FieldElement) -> Result<CycloNum> {
        Ok(self.h.normalize(spec, &self.p(spec, x)?))
    }

    pub fn p2(&self, a: MultChar, b: MultChar, c: MultChar, x: FieldElement) -> Result<CycloNum> {
        self.p(&HGSpec::two_one(a, b, c), x)
    }

    pub fn f2(&self, a: MultChar, b: MultChar, c: MultChar, x: FieldElement) -> Result<CycloNum> {
        self.f(&HGSpec::two_one(a, b, c), x)
    }

    pub fn p3(&self, a: [MultChar; 3], b: [MultChar; 2], x: FieldElement) -> Result<CycloNum> {
        self.p(&HGSpec::three_two(a, b), x)
    }

    pub fn f3(&self, a: [MultChar; 3], b: [MultChar; 2], x: FieldElement) -> Result<CycloNum> {
        self.f(&HGSpec::three_two(a, b), x)
    }

    /// `pref * value()`, skipping `value` when the prefactor vanishes (its
    /// argument may then be undefined).
    pub fn guard(&self, pref: CycloNum, value: impl FnOnce() -> Result<CycloNum>) -> Result<CycloNum> {
        if pref.is_zero() {
            Ok(pref)
        } else {
            Ok(pref * value()?)
        }
    }

    /// A delta-correction term: `term()` when kept and `on`, else zero.
    pub fn dt(&self, keep: bool, on: bool, term: impl FnOnce() -> Result<CycloNum>) -> Result<CycloNum> {
        if keep && on {
            term()
        } else {
            Ok(self.zero())
        }
    }

    /// `(1 + phi(w))/2 * h(sqrt w)` for `h` already symmetric in the sign
    /// of the root.
    pub fn root_pair(&self, w: FieldElement, h: impl Fn(FieldElement) -> Result<CycloNum>) -> Result<CycloNum> {
        if w.is_zero() {
            return h(w)?.div_int(2);
        }
        match self.roots(w, 2).first() {
            None => Ok(self.zero()),
            Some(&r) => h(r),
        }
    }
}

/// Sweep mode.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { n: usize, seed: u64 },
}

impl Mode {
    /// `exhaustive` or `sample:N:SEED`.
    pub fn parse(s: &str) -> Result<Mode> {
        if s == "exhaustive" {
            return Ok(Mode::Exhaustive);
        }
        let bad = || Error::Invalid(format!("bad mode '{s}'"));
        let rest = s.strip_prefix("sample:").ok_or_else(bad)?;
        let (n, seed) = rest.split_once(':').ok_or_else(bad)?;
        Ok(Mode::Sample {
            n: n.parse().map_err(|_| bad())?,
            seed: seed.parse().map_err(|_| bad())?,
        })
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exhaustive => write!(f, "exhaustive"),
            Mode::Sample { n, seed } => write!(f, "sample:{n}:{seed}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Observed,
    Refuted,
    Inapplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub chars: Vec<u32>,
    pub arg: String,
    pub display: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub q: u32,
    pub status: Status,
    pub tuples_checked: u64,
    pub failures: Vec<Witness>,
}

impl VerifyReport {
    /// True when this report should fail a run: theorems only.
    pub fn is_theorem_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

fn slot_candidates(ctx: &Ctx, slot: Slot) -> Vec<MultChar> {
    let q = ctx.f.q();
    match slot {
        Slot::Any => all_chars(q).collect(),
        Slot::Order(k) => ctx.order(k),
        Slot::Orders(ks) => ks.iter().flat_map(|&k| ctx.order(k)).collect(),
    }
}

/// Every admissible character tuple, in lexicographic exponent order.
fn tuples(ctx: &Ctx, rec: &IdentityRecord, pred: TuplePred) -> Vec<Vec<MultChar>> {
    let cands: Vec<Vec<MultChar>> = rec.slots.iter().map(|&(_, s)| slot_candidates(ctx, s)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(cands.len());
    fn rec_fill(
        ctx: &Ctx,
        cands: &[Vec<MultChar>],
        cur: &mut Vec<MultChar>,
        pred: TuplePred,
        out: &mut Vec<Vec<MultChar>>,
    ) {
        if cur.len() == cands.len() {
            if pred(ctx, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &c in &cands[cur.len()] {
            cur.push(c);
            rec_fill(ctx, cands, cur, pred, out);
            cur.pop();
        }
    }
    rec_fill(ctx, &cands, &mut cur, pred, &mut out);
    out
}

fn args_for(ctx: &Ctx, rec: &IdentityRecord, t: &[MultChar]) -> Vec<FieldElement> {
    match rec.args {
        Args::Point => vec![ctx.f.zero()],
        Args::All => ctx.f.elements().filter(|&x| (rec.arg_ok)(ctx, t, x)).collect(),
    }
}

fn arg_label(ctx: &Ctx, rec: &IdentityRecord, x: FieldElement) -> String {
    match rec.args {
        Args::Point => "-".into(),
        Args::All => ctx.f.format_poly(x),
    }
}

/// Runs `visit` on every displayed pair of every checked tuple.
fn sweep(
    ctx: &Ctx,
    rec: &IdentityRecord,
    mode: Mode,
    pred: TuplePred,
    mut visit: impl FnMut(&[MultChar], FieldElement, &Displays) -> Result<()>,
) -> Result<u64> {
    let mut checked = 0u64;
    match mode {
        Mode::Exhaustive => {
            for t in tuples(ctx, rec, pred) {
                for x in args_for(ctx, rec, &t) {
                    let d = (rec.eval)(ctx, &t, x, true)?;
                    if !d.is_empty() {
                        checked += 1;
                    }
                    visit(&t, x, &d)?;
                }
            }
        }
        Mode::Sample { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cands: Vec<Vec<MultChar>> =
                rec.slots.iter().map(|&(_, s)| slot_candidates(ctx, s)).collect();
            if cands.iter().any(|c| c.is_empty()) {
                return Ok(0);
            }
            let q = ctx.f.q();
            let mut attempts = 0usize;
            let mut taken = 0usize;
            while taken < n && attempts < n.saturating_mul(1000).max(1000) {
                attempts += 1;
                let t: Vec<MultChar> = cands.iter().map(|c| c[rng.gen_range(0..c.len())]).collect();
                let x = match rec.args {
                    Args::Point => ctx.f.zero(),
                    Args::All => ctx.f.wrap(rng.gen_range(0..q)),
                };
                if !pred(ctx, &t) || (rec.args == Args::All && !(rec.arg_ok)(ctx, &t, x)) {
                    continue;
                }
                taken += 1;
                let d = (rec.eval)(ctx, &t, x, true)?;
                if !d.is_empty() {
                    checked += 1;
                }
                visit(&t, x, &d)?;
            }
        }
    }
    Ok(checked)
}

fn witness(ctx: &Ctx, rec: &IdentityRecord, t: &[MultChar], x: FieldElement, i: usize, l: &CycloNum, r: &CycloNum) -> Witness {
    Witness {
        chars: t.iter().map(|c| c.exponent()).collect(),
        arg: arg_label(ctx, rec, x),
        display: i,
        lhs: l.to_string(),
        rhs: r.to_string(),
    }
}

/// Checks one identity on one field.
pub fn verify(id: &str, f: &Arc<FiniteField>, mode: Mode) -> Result<VerifyReport> {
    let rec = lookup(id)?;
    verify_record(rec, &Ctx::new(f), mode)
}

pub fn verify_record(rec: &IdentityRecord, ctx: &Ctx, mode: Mode) -> Result<VerifyReport> {
    let q = ctx.f.q();
    if !rec.applies_to(&ctx.f) {
        return Ok(VerifyReport {
            id: rec.id.into(),
            q,
            status: Status::Inapplicable,
            tuples_checked: 0,
            failures: Vec::new(),
        });
    }
    let mut failures = Vec::new();
    let checked = sweep(ctx, rec, mode, rec.admissible, |t, x, d| {
        for (i, (l, r)) in d.iter().enumerate() {
            if l != r {
                failures.push(witness(ctx, rec, t, x, i, l, r));
            }
        }
        Ok(())
    })?;
    let status = match (rec.kind, failures.is_empty()) {
        (Kind::Theorem, true) => Status::Pass,
        (Kind::Theorem, false) => Status::Fail,
        (Kind::Conjecture, true) => Status::Observed,
        (Kind::Conjecture, false) => Status::Refuted,
    };
    Ok(VerifyReport {
        id: rec.id.into(),
        q,
        status,
        tuples_checked: checked,
        failures,
    })
}

/// Every applicable record on every field, in registry order per field.
pub fn verify_all(fields: &[Arc<FiniteField>], mode: Mode) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for f in fields {
        let ctx = Ctx::new(f);
        for rec in registry().iter().filter(|r| r.applies_to(f)) {
            out.push(verify_record(rec, &ctx, mode)?);
        }
    }
    Ok(out)
}

/// Result of re-running an identity with its delta terms removed.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaAudit {
    pub id: String,
    pub q: u32,
    pub tuples_checked: u64,
    /// Failures of the full identity (expected empty).
    pub full_failures: usize,
    /// Failures once the delta terms are stripped.
    pub failures: Vec<Witness>,
    /// Distinct arguments among `failures`.
    pub failing_args: Vec<String>,
    /// Pairs where some delta term is nonzero.
    pub predicted: usize,
    /// Stripped failures occur exactly where a delta term is nonzero.
    pub exact: bool,
}

pub fn delta_audit(id: &str, f: &Arc<FiniteField>) -> Result<DeltaAudit> {
    let rec = lookup(id)?;
    let ctx = Ctx::new(f);
    let mut failures = Vec::new();
    let mut args = BTreeSet::new();
    let mut full_failures = 0;
    let mut predicted = 0;
    let mut exact = true;
    let mut checked = 0;
    if rec.applies_to(f) {
        checked = sweep(&ctx, rec, Mode::Exhaustive, rec.admissible, |t, x, full| {
            let bare = (rec.eval)(&ctx, t, x, false)?;
            for (i, ((fl, fr), (bl, br))) in full.iter().zip(&bare).enumerate() {
                if fl != fr {
                    full_failures += 1;
                }
                let supported = fl != bl || fr != br;
                let fails = bl != br;
                predicted += supported as usize;
                if fails != supported {
                    exact = false;
                }
                if fails {
                    args.insert(x.raw());
                    failures.push(witness(&ctx, rec, t, x, i, bl, br));
                }
            }
            Ok(())
        })?;
    }
    Ok(DeltaAudit {
        id: rec.id.into(),
        q: f.q(),
        tuples_checked: checked,
        full_failures,
        failures,
        failing_args: args.into_iter().map(|v| f.format_poly(f.wrap(v))).collect(),
        predicted,
        exact,
    })
}

/// Counterexamples among tuples admitted only once a stated exclusion is
/// dropped.
#[derive(Clone, Debug, Serialize)]
pub struct Tightness {
    pub id: String,
    pub q: u32,
    pub dropped: String,
    pub extra_tuples: u64,
    pub counterexamples: Vec<Witness>,
}

pub fn tightness(id: &str, f: &Arc<FiniteField>) -> Result<Tightness> {
    let rec = lookup(id)?;
    let (dropped, relaxed) = rec
        .relaxed
        .ok_or_else(|| Error::Invalid(format!("'{id}' has no relaxed form")))?;
    let ctx = Ctx::new(f);
    let mut counterexamples = Vec::new();
    let mut extra = 0;
    if rec.applies_to(f) {
        let strict = rec.admissible;
        // tuples admitted by the relaxed predicate only
        let tuples_only: Vec<Vec<MultChar>> = tuples(&ctx, rec, relaxed)
            .into_iter()
            .filter(|t| !strict(&ctx, t))
            .collect();
        for t in tuples_only {
            for x in args_for(&ctx, rec, &t) {
                let d = (rec.eval)(&ctx, &t, x, true)?;
                extra += 1;
                for (i, (l, r)) in d.iter().enumerate() {
                    if l != r {
                        counterexamples.push(witness(&ctx, rec, &t, x, i, l, r));
                    }
                }
            }
        }
    }
    Ok(Tightness {
        id: rec.id.into(),
        q: f.q(),
        dropped: dropped.into(),
        extra_tuples: extra,
        counterexamples,
    })
}
