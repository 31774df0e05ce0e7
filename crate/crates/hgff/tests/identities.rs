use std::sync::Arc;

use hgff::chars::{all_chars, MultChar};
use hgff::identities::*;
use hgff::{Error, FieldElement, FiniteField};

fn fq(q: u64) -> Arc<FiniteField> {
    FiniteField::from_q(q).unwrap()
}

fn mismatches(id: &str, f: &Arc<FiniteField>, chars: &[MultChar], x: FieldElement) -> usize {
    let rec = lookup(id).unwrap();
    let ctx = Ctx::new(f);
    (rec.eval)(&ctx, chars, x, true).unwrap().iter().filter(|(l, r)| l != r).count()
}

#[test]
fn gauss_eval_f7_all_tuples() {
    let r = verify("gauss-eval", &fq(7), Mode::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.tuples_checked, 216);
    assert!(r.failures.is_empty());
}

#[test]
fn stanton_involution_f9() {
    let r = verify("stanton-involution", &fq(9), Mode::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.tuples_checked, 9);
}

#[test]
fn foundation_records_small_fields() {
    for id in ["gauss-reflection", "gauss-conj", "jacobi-gauss", "jacobi-swap", "double-jacobi", "rising-product"] {
        for q in [3, 4, 5, 7, 9] {
            let r = verify(id, &fq(q), Mode::Exhaustive).unwrap();
            assert!(matches!(r.status, Status::Pass | Status::Inapplicable), "{id} q={q} {r:?}");
        }
    }
}

#[test]
fn congruence_gates_records() {
    let r = verify("kummer-quad-eta4", &fq(7), Mode::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Inapplicable);
    assert_eq!(r.tuples_checked, 0);
    let r = verify("deg24-234", &fq(13), Mode::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Inapplicable);
}

#[test]
fn unknown_id() {
    assert!(matches!(lookup("no-such-identity"), Err(Error::UnknownIdentity(_))));
    assert!(matches!(verify("no-such-identity", &fq(5), Mode::Exhaustive), Err(Error::UnknownIdentity(_))));
}

#[test]
fn registry_ids_unique() {
    let mut ids: Vec<&str> = registry().iter().map(|r| r.id).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
    for r in registry() {
        assert!(!r.fields.is_empty(), "{}", r.id);
    }
}

#[test]
fn mode_parse() {
    assert_eq!(Mode::parse("exhaustive").unwrap(), Mode::Exhaustive);
    assert_eq!(Mode::parse("sample:100:7").unwrap(), Mode::Sample { n: 100, seed: 7 });
    assert!(Mode::parse("sample:x").is_err());
    assert_eq!(Mode::Sample { n: 5, seed: 1 }.to_string(), "sample:5:1");
}

#[test]
fn sampled_sweep_is_seeded() {
    let f = fq(13);
    let a = verify("quad-2F1", &f, Mode::Sample { n: 200, seed: 3 }).unwrap();
    let b = verify("quad-2F1", &f, Mode::Sample { n: 200, seed: 3 }).unwrap();
    assert_eq!(a.status, Status::Pass);
    assert_eq!(a.tuples_checked, 200);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn report_json_deterministic() {
    let fields = [fq(5), fq(7)];
    let a = verify_all(&fields, Mode::Exhaustive).unwrap();
    let b = verify_all(&fields, Mode::Exhaustive).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.iter().all(|r| !r.is_theorem_failure()));
}

#[test]
fn delta_terms_quad_2f1() {
    for q in [9, 13] {
        let f = fq(q);
        let a = delta_audit("quad-2F1", &f).unwrap();
        assert_eq!(a.full_failures, 0);
        assert!(a.exact);
        assert!(!a.failures.is_empty());
        let pm1 = [f.format_poly(f.one()), f.format_poly(f.from_int(-1))];
        assert!(a.failing_args.iter().all(|x| pm1.contains(x)), "{:?}", a.failing_args);
    }
}

#[test]
fn delta_terms_gs_cubic() {
    let f = fq(7);
    let a = delta_audit("gs-cubic", &f).unwrap();
    assert!(a.exact && a.full_failures == 0);
    let allowed = [f.format_poly(f.one()), f.format_poly(f.from_ratio(1, 3).unwrap())];
    assert!(a.failing_args.iter().all(|x| allowed.contains(x)));
}

#[test]
fn delta_terms_bailey_cubic() {
    let f = fq(13);
    let a = delta_audit("bailey-cubic-1", &f).unwrap();
    assert!(a.exact && a.full_failures == 0);
    let allowed = [f.format_poly(f.one()), f.format_poly(f.from_int(-2))];
    assert!(a.failing_args.iter().all(|x| allowed.contains(x)));
    assert_eq!(a.predicted, a.failures.len());
}

#[test]
fn dropped_hypotheses_break() {
    for (id, q) in [("quad-2F1", 9), ("clausen", 9), ("bailey-cubic-1", 13)] {
        let t = tightness(id, &fq(q)).unwrap();
        assert!(t.extra_tuples > 0, "{id}");
        assert!(!t.counterexamples.is_empty(), "{id}");
    }
    assert!(tightness("gauss-eval", &fq(5)).is_err());
}

#[test]
fn ramanujan_eighth_needs_char_not_3() {
    // -1/8 = 1 in characteristic 3
    let f = fq(9);
    assert_eq!(verify("ramanujan-eighth", &f, Mode::Exhaustive).unwrap().status, Status::Inapplicable);
    assert!(mismatches("ramanujan-eighth", &f, &[], f.zero()) > 0);
    let f = fq(7);
    assert_eq!(mismatches("ramanujan-eighth", &f, &[], f.zero()), 0);
}

#[test]
fn quad_aux_needs_b_ne_d() {
    let f = fq(7);
    let bad = all_chars(7)
        .filter(|d| (MultChar::quadratic(7) * *d * d.conj()).order() > 1)
        .filter(|d| *d != *d * *d)
        .filter(|&d| mismatches("quad-aux-44", &f, &[d, d], f.zero()) > 0)
        .count();
    assert!(bad > 0);
}

#[test]
fn andrews_stanton_needs_a_ne_b_squared() {
    let f = fq(7);
    let b = MultChar::new(7, 1);
    let a = b * b;
    let bad = f
        .elements()
        .filter(|&x| x != f.one() && x != f.from_int(-1) && Some(x) != f.from_ratio(1, 2))
        .filter(|&x| mismatches("andrews-stanton", &f, &[a, b], x) > 0)
        .count();
    assert!(bad > 0);
}

#[test]
fn dihedral_square_root_convention() {
    for q in [5, 7, 9, 11, 13] {
        for id in ["dihedral-1", "dihedral-2"] {
            let r = verify(id, &fq(q), Mode::Exhaustive).unwrap();
            assert_eq!(r.status, Status::Pass, "{id} q={q}");
            assert!(r.tuples_checked > 0);
        }
    }
}

#[test]
fn conjectures_never_fail() {
    let r = verify("tuyang-ord6", &fq(13), Mode::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Observed);
    // the order-24 transformation, as stated, does not hold at 73
    let r = verify("tuyang-466", &fq(73), Mode::Exhaustive).unwrap();
    assert_eq!(lookup("tuyang-466").unwrap().kind, Kind::Conjecture);
    assert_eq!(r.status, Status::Refuted);
    assert!(!r.is_theorem_failure());
}
