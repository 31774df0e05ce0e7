//! One line per acceptance criterion. Gating criteria are asserted at the end.

use std::sync::Arc;
use std::time::Instant;

use hgff::chars::{all_chars, MultChar};
use hgff::hyper::{HGSpec, HyperContext};
use hgff::identities::*;
use hgff::sums::context;
use hgff::varieties::{count_affine_brute, count_via_periods, legendre_count, HGVariety, POINTS_AT_INFINITY};
use hgff::zeta::{charpoly_2, lifted_period, weil_purity_check, zeta_factor, zeta_series, Purity, PURITY_TOL};
use hgff::{CycloNum, FiniteField};

const FOUNDATION_QS: [u64; 10] = [3, 4, 5, 7, 9, 11, 13, 25, 27, 49];
const FOUNDATION_IDS: [&str; 11] = [
    "gauss-reflection",
    "gauss-reflection-inv",
    "gauss-conj",
    "gauss-conj-inv",
    "jacobi-gauss",
    "jacobi-conj",
    "jacobi-swap",
    "double-jacobi",
    "rising-product",
    "hasse-davenport-product",
    "hasse-davenport-lift",
];
const DEG24_SAMPLES: usize = 10_000;
const DEG24_SEED: u64 = 24;

struct Line {
    label: String,
    ok: bool,
    gating: bool,
    detail: String,
}

fn fq(q: u64) -> Arc<FiniteField> {
    FiniteField::from_q(q).unwrap()
}

fn criterion_1() -> Line {
    let t = Instant::now();
    let mut tuples = 0;
    let mut bad = Vec::new();
    for q in FOUNDATION_QS {
        let f = fq(q);
        for id in FOUNDATION_IDS {
            let r = verify(id, &f, Mode::Exhaustive).unwrap();
            tuples += r.tuples_checked;
            if r.status == Status::Fail {
                bad.push(format!("{id}@{q}"));
            }
        }
    }
    Line {
        label: "criterion 1".into(),
        ok: bad.is_empty() && tuples > 0,
        gating: true,
        detail: format!("{} relations, {tuples} tuples, failures {bad:?}, {:.1}s", FOUNDATION_IDS.len(), t.elapsed().as_secs_f64()),
    }
}

fn criterion_2() -> Line {
    let t = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    for q in [5u64, 7, 9, 11, 13] {
        let f = fq(q);
        let h = HyperContext::new(&f);
        for a in all_chars(f.q()) {
            for b in all_chars(f.q()) {
                for c in all_chars(f.q()) {
                    let s = HGSpec::two_one(a, b, c);
                    for x in f.elements() {
                        checked += 1;
                        if h.period_direct(&s, x).unwrap() != h.period_spectral(&s, x).unwrap() {
                            mismatches += 1;
                        }
                    }
                }
            }
        }
    }
    for q in [5u64, 7] {
        let f = fq(q);
        let h = HyperContext::new(&f);
        let chars: Vec<MultChar> = all_chars(f.q()).collect();
        for &a in &chars {
            for &b in &chars {
                for &c in &chars {
                    for &d in &chars {
                        for &e in &chars {
                            let s = HGSpec::three_two([a, b, c], [d, e]);
                            for x in f.elements() {
                                checked += 1;
                                if h.period_direct(&s, x).unwrap() != h.period_spectral(&s, x).unwrap() {
                                    mismatches += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Line {
        label: "criterion 2".into(),
        ok: mismatches == 0,
        gating: true,
        detail: format!("{checked} (spec, lambda) pairs, {mismatches} mismatches, {:.1}s", t.elapsed().as_secs_f64()),
    }
}

fn exponent_lists(n: u32, len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..n as i64).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn criterion_3() -> Line {
    let t = Instant::now();
    let mut checked = 0u64;
    let mut bad = 0u64;
    let mut skipped = Vec::new();
    for q in [5u64, 9, 13, 17, 25] {
        let f = fq(q);
        for x in f.elements() {
            let v = HGVariety::new(2, vec![1], vec![1], 1, x).unwrap();
            checked += 1;
            if count_via_periods(&f, &v).unwrap() != count_affine_brute(&f, &v).unwrap() + POINTS_AT_INFINITY {
                bad += 1;
            }
        }
    }
    for (n, len) in [(3u32, 1usize), (4, 1), (6, 1), (3, 2)] {
        for q in [7u64, 13] {
            if (q - 1) % n as u64 != 0 {
                skipped.push(format!("N={n}@{q}"));
                continue;
            }
            let f = fq(q);
            for i in exponent_lists(n, len) {
                for j in exponent_lists(n, len) {
                    for k in 1..n as i64 {
                        for x in f.elements() {
                            let v = HGVariety::new(n, i.clone(), j.clone(), k, x).unwrap();
                            checked += 1;
                            let brute = count_affine_brute(&f, &v).unwrap() + POINTS_AT_INFINITY;
                            if count_via_periods(&f, &v).unwrap() != brute {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    let f5 = fq(5);
    let ono = legendre_count(&f5, f5.from_int(2)).unwrap();
    Line {
        label: "criterion 3".into(),
        ok: bad == 0 && ono == 8,
        gating: true,
        detail: format!(
            "{checked} varieties, {bad} mismatches, F_5 lambda=2 count {ono}, no character of order N for {skipped:?}, {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    }
}

fn criterion_4() -> Line {
    let t = Instant::now();
    let mut runs = 0;
    let mut fails = Vec::new();
    let mut thin = Vec::new();
    for rec in registry().iter().filter(|r| r.kind == Kind::Theorem) {
        let ctx_fields: Vec<_> = rec.fields.iter().map(|&q| fq(q)).collect();
        let mut nonvacuous = 0;
        for f in &ctx_fields {
            let r = verify_record(rec, &Ctx::new(f), Mode::Exhaustive).unwrap();
            runs += 1;
            if r.is_theorem_failure() {
                fails.push(format!("{}@{}", rec.id, f.q()));
            }
            if r.tuples_checked > 0 {
                nonvacuous += 1;
            }
        }
        if nonvacuous < 3 {
            thin.push(rec.id);
        }
    }
    let headline: &[(&str, &[u64])] = &[
        ("quad-2F1", &[9, 13, 25]),
        ("clausen", &[9, 13]),
        ("bailey-cubic-1", &[7, 13, 25]),
        ("bailey-cubic-2", &[7, 13, 25]),
        ("gs-cubic", &[5, 7, 9, 11, 13]),
        ("gs-eval-34", &[7, 13, 25]),
        ("andrews-stanton", &[13, 25]),
        ("dihedral-1", &[5, 7, 9, 11, 13]),
        ("dihedral-2", &[5, 7, 9, 11, 13]),
    ];
    let mut vacuous = Vec::new();
    for (id, qs) in headline {
        for &q in *qs {
            let r = verify(id, &fq(q), Mode::Exhaustive).unwrap();
            runs += 1;
            if r.status != Status::Pass {
                fails.push(format!("{id}@{q}"));
            }
            if r.tuples_checked == 0 {
                vacuous.push(format!("{id}@{q}"));
            }
        }
    }
    for q in [73u64, 97] {
        let r = verify("deg24-234", &fq(q), Mode::Sample { n: DEG24_SAMPLES, seed: DEG24_SEED }).unwrap();
        runs += 1;
        if r.status != Status::Pass || r.tuples_checked < DEG24_SAMPLES as u64 {
            fails.push(format!("deg24-234@{q} sampled"));
        }
    }
    Line {
        label: "criterion 4".into(),
        ok: fails.is_empty() && thin.is_empty(),
        gating: true,
        detail: format!(
            "{runs} runs, failures {fails:?}, under 3 nonvacuous fields {thin:?}, vacuous headline fields {vacuous:?}, {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    }
}

fn criterion_5() -> Line {
    let cases: [(&str, u64, [(i64, i64); 2]); 6] = [
        ("quad-2F1", 9, [(1, 1), (-1, 1)]),
        ("quad-2F1", 13, [(1, 1), (-1, 1)]),
        ("gs-cubic", 7, [(1, 1), (1, 3)]),
        ("gs-cubic", 13, [(1, 1), (1, 3)]),
        ("bailey-cubic-1", 7, [(-2, 1), (1, 1)]),
        ("bailey-cubic-1", 13, [(-2, 1), (1, 1)]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, q, args) in cases {
        let f = fq(q);
        let a = delta_audit(id, &f).unwrap();
        let allowed: Vec<String> = args.iter().map(|&(n, d)| f.format_poly(f.from_ratio(n, d).unwrap())).collect();
        let here = a.full_failures == 0
            && a.exact
            && !a.failures.is_empty()
            && a.failing_args.iter().all(|x| allowed.contains(x));
        ok &= here;
        parts.push(format!("{id}@{q}: {} stripped failures at {:?}", a.failures.len(), a.failing_args));
    }
    Line { label: "criterion 5".into(), ok, gating: true, detail: parts.join("; ") }
}

fn criterion_6() -> Vec<Line> {
    let t = Instant::now();
    let mut factors = 0u64;
    let mut failures = 0u64;
    let mut integral = 0u64;
    let mut worst = 0f64;
    for q in [5u64, 7, 9, 13] {
        let f = fq(q);
        let sq = (f.q() as f64).sqrt();
        for a in all_chars(f.q()) {
            for b in all_chars(f.q()) {
                for c in all_chars(f.q()) {
                    let s = HGSpec::two_one(a, b, c);
                    if !s.is_primitive() {
                        continue;
                    }
                    for x in f.elements().filter(|&x| !x.is_zero() && x != f.one()) {
                        let h = charpoly_2(&f, &s, x).unwrap();
                        let rep = weil_purity_check(&h);
                        factors += 1;
                        for m in &rep.moduli {
                            worst = worst.max((m - sq).abs());
                        }
                        if rep.status != Purity::Pass || !rep.det_exact || rep.det_pm_q == Some(false) {
                            failures += 1;
                        }
                        if h.integer_coeffs().is_some() {
                            integral += 1;
                        }
                    }
                }
            }
        }
    }
    let mut examples = true;
    for q in [5u64, 7, 9, 13] {
        let f = fq(q);
        let ctx = context(&f);
        for a in all_chars(f.q()) {
            for b in all_chars(f.q()) {
                for c in all_chars(f.q()) {
                    if a == c {
                        continue;
                    }
                    let s = HGSpec::two_one(a, b, c);
                    let h = zeta_factor(&f, &s, f.one()).unwrap();
                    examples &= h.degree() == 1 && h.coeffs[1] == ctx.jacobi(b, (a * b).conj() * c);
                }
            }
        }
        let phi = MultChar::quadratic(f.q());
        for b in all_chars(f.q()) {
            for d in all_chars(f.q()) {
                let c = d * d;
                if b * b == c {
                    continue;
                }
                let s = HGSpec::two_one(b, c, c * b.conj());
                let m1 = f.from_int(-1);
                let z: Vec<CycloNum> = (1..=3).map(|r| lifted_period(&f, &s, m1, r).unwrap()).collect();
                let z = zeta_series(&z).unwrap();
                let (j1, j2) = (ctx.jacobi(d, b.conj()), ctx.jacobi(d * phi, b.conj()));
                examples &= z[1] == &j1 + &j2 && z[2] == &j1 * &j2 && z[3].is_zero();
            }
        }
    }
    vec![
        Line {
            label: "criterion 6".into(),
            ok: integral == factors,
            gating: false,
            detail: format!(
                "unattainable as stated: integer tr and det hold for {integral} of {factors} primitive factors; \
                 the rest have coefficients in Z[zeta_(q-1)] outside Z"
            ),
        },
        Line {
            label: "criterion 6 (exact purity invariants)".into(),
            ok: failures == 0 && examples && worst < PURITY_TOL,
            gating: true,
            detail: format!(
                "{factors} factors, {failures} failures of |det|^2 = q^2, det = +-q when rational, |root| = sqrt q; \
                 max ||root| - sqrt q| = {worst:.1e}; factorization examples {}; {:.1}s",
                if examples { "hold" } else { "FAIL" },
                t.elapsed().as_secs_f64()
            ),
        },
    ]
}

fn criterion_7() -> Line {
    let cases: [(&str, &[u64]); 8] = [
        ("cohen-4F3", &[13, 37, 61]),
        ("tuyang-466", &[73]),
        ("tuyang-466b", &[73]),
        ("tuyang-ord20", &[41]),
        ("tuyang-ord6", &[13]),
        ("tuyang-ord12", &[37]),
        ("vidunas", &[13, 37]),
        ("dihedral-233", &[13, 37]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, qs) in cases {
        for &q in qs {
            let r = verify(id, &fq(q), Mode::Exhaustive).unwrap();
            ok &= r.status == Status::Observed;
            let status = serde_json::to_value(&r.status).unwrap();
            parts.push(format!("{id}@{q} {} ({} tuples, {} counterexamples)", status.as_str().unwrap(), r.tuples_checked, r.failures.len()));
        }
    }
    Line { label: "criterion 7".into(), ok, gating: false, detail: parts.join("; ") }
}

#[test]
fn acceptance() {
    let mut lines = vec![criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5()];
    lines.extend(criterion_6());
    lines.push(criterion_7());
    for l in &lines {
        let tag = match (l.ok, l.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (not asserted)",
        };
        println!("{}: {tag}: {}", l.label, l.detail);
    }
    let gating: Vec<&str> = lines.iter().filter(|l| l.gating && !l.ok).map(|l| l.label.as_str()).collect();
    assert!(gating.is_empty(), "gating criteria failed: {gating:?}");
}
