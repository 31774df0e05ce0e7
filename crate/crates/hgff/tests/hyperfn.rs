use hgff::chars::{all_chars, MultChar};
use hgff::hyper::{rational_spec, HGSpec, HyperContext};
use hgff::{CycloNum, FiniteField, RationalParam};

fn specs_2f1(q: u32) -> Vec<HGSpec> {
    let mut v = Vec::new();
    for a in all_chars(q) {
        for b in all_chars(q) {
            for c in all_chars(q) {
                v.push(HGSpec::two_one(a, b, c));
            }
        }
    }
    v
}

#[test]
fn direct_matches_spectral_n1() {
    for q in [5u64, 9] {
        let f = FiniteField::from_q(q).unwrap();
        let h = HyperContext::new(&f);
        for s in specs_2f1(f.q()) {
            let sp = h.spectral(&s);
            for x in f.elements() {
                assert_eq!(h.period_direct(&s, x).unwrap(), sp.eval(&f, x.raw()), "{s:?} {x:?}");
            }
        }
    }
}

#[test]
fn direct_matches_spectral_n2_f5() {
    let f = FiniteField::new(5, 1).unwrap();
    let h = HyperContext::new(&f);
    let cs: Vec<MultChar> = all_chars(5).collect();
    for &a1 in &cs {
        for &a2 in &cs {
            for &a3 in &cs {
                for &b1 in &cs {
                    for &b2 in &cs {
                        let s = HGSpec::three_two([a1, a2, a3], [b1, b2]);
                        let sp = h.spectral(&s);
                        for x in f.elements() {
                            assert_eq!(h.period_direct(&s, x).unwrap(), sp.eval(&f, x.raw()));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn lambda_zero_and_one() {
    let f = FiniteField::new(7, 1).unwrap();
    let h = HyperContext::new(&f);
    let sums = h.sums();
    for s in specs_2f1(7) {
        let (a, b, c) = (s.upper()[0], s.upper()[1], s.lower()[0]);
        assert_eq!(h.period_direct(&s, f.zero()).unwrap(), sums.jacobi(b, b.conj() * c));
        assert_eq!(h.period_direct(&s, f.one()).unwrap(), sums.jacobi(b, (a * b).conj() * c));
        if s.is_primitive() {
            assert!(h.f_normalized(&s, f.zero()).unwrap().is_one());
            let t = HGSpec::two_one(b, a, c);
            for x in f.elements() {
                assert_eq!(h.f_normalized(&s, x).unwrap(), h.f_normalized(&t, x).unwrap());
            }
        }
    }
}

#[test]
fn imprimitive_trivial_upper() {
    let f = FiniteField::new(7, 1).unwrap();
    let h = HyperContext::new(&f);
    let e = MultChar::trivial(7);
    for b in all_chars(7).filter(|b| !b.is_trivial()) {
        for c in all_chars(7).filter(|c| !c.is_trivial()) {
            let s = HGSpec::two_one(e, b, c);
            let j = h.sums().jacobi(b, b.conj() * c);
            for x in f.nonzero() {
                let cb = c.conj().exp_at(&f, x).unwrap();
                let xm1 = f.sub(x, f.one()).unwrap();
                let rhs = match (b.conj() * c).exp_at(&f, xm1) {
                    None => CycloNum::one(6),
                    Some(e2) => {
                        CycloNum::one(6) - CycloNum::zeta(6, (cb + e2) as i64) * j.inv().unwrap()
                    }
                };
                assert_eq!(h.f_normalized(&s, x).unwrap(), rhs, "{s:?} {x:?}");
            }
        }
    }
}

#[test]
fn greene_and_mccarthy() {
    for q in [5u64, 7, 9] {
        let f = FiniteField::from_q(q).unwrap();
        let h = HyperContext::new(&f);
        for s in specs_2f1(f.q()) {
            let sign = (s.upper()[1] * s.lower()[0]).sign(&f);
            for x in f.elements() {
                let p = h.period_direct(&s, x).unwrap();
                let mut rhs = h.greene_f(&s, x).unwrap().scale(f.q() as i64 * sign);
                if x.is_zero() {
                    rhs = rhs + h.jacobi_product(&s);
                }
                assert_eq!(p, rhs);
                if s.is_primitive() {
                    let m = h.mccarthy_f(&s, x).unwrap();
                    let d = CycloNum::from_int(6, x.is_zero() as i64);
                    assert_eq!(h.normalize(&s, &p), m + d);
                    assert!(h.katz_conversion_check(&s, x).unwrap());
                }
            }
        }
    }
}

#[test]
fn greene_n2_relation() {
    let f = FiniteField::new(5, 1).unwrap();
    let h = HyperContext::new(&f);
    let cs: Vec<MultChar> = all_chars(5).collect();
    for &a1 in &cs {
        for &a2 in &cs {
            for &a3 in &cs {
                for &b1 in &cs {
                    for &b2 in &cs {
                        let s = HGSpec::three_two([a1, a2, a3], [b1, b2]);
                        let sign = (a2 * b1).sign(&f) * (a3 * b2).sign(&f);
                        for x in f.elements() {
                            let p = h.period_direct(&s, x).unwrap();
                            let mut rhs = h.greene_f(&s, x).unwrap().scale(25 * sign);
                            if x.is_zero() {
                                rhs = rhs + h.jacobi_product(&s);
                            }
                            assert_eq!(p, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rational_parameters() {
    let f5 = FiniteField::new(5, 1).unwrap();
    let half = RationalParam::parse("1/2").unwrap();
    let one = RationalParam::parse("1").unwrap();
    let s = rational_spec(&[half, half], &[one], &f5).unwrap();
    assert_eq!(s, HGSpec::two_one(MultChar::quadratic(5), MultChar::quadratic(5), MultChar::trivial(5)));
    let f13 = FiniteField::new(13, 1).unwrap();
    let s = rational_spec(
        &[RationalParam::parse("1/12").unwrap(), RationalParam::parse("5/12").unwrap()],
        &[one],
        &f13,
    )
    .unwrap();
    assert_eq!(s.upper()[0].order(), 12);
    assert_eq!(s.upper()[1].order(), 12);
    assert!(rational_spec(&[RationalParam::parse("1/3").unwrap(), half], &[one], &f5).is_err());
}

#[test]
fn weil_bound_witness() {
    let f = FiniteField::new(13, 1).unwrap();
    let h = HyperContext::new(&f);
    for s in specs_2f1(13).into_iter().filter(|s| s.is_primitive()) {
        for x in f.nonzero().filter(|x| *x != f.one()) {
            let v = h.period_direct(&s, x).unwrap().to_complex(12);
            assert!(v.norm_sqr() <= 4.0 * 13.0 + 1e-6);
        }
    }
}
