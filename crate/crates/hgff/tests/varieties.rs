use hgff::varieties::{
    count_affine_brute, count_affine_characters, count_via_periods, glc_trace, legendre_count,
    legendre_count_brute, GLCurve, HGVariety, TrivialAtZero, POINTS_AT_INFINITY,
};
use hgff::{Error, FiniteField};

#[test]
fn period_formula_matches_enumeration() {
    let cases: &[(u32, &[i64], &[i64], i64, u64)] = &[
        (3, &[1], &[1], 1, 7),
        (3, &[1], &[2], 2, 7),
        (4, &[1], &[3], 1, 13),
        (6, &[4], &[3], 1, 13),
        (3, &[1, 2], &[1, 1], 1, 7),
    ];
    for &(n, i, j, k, q) in cases {
        let f = FiniteField::from_q(q).unwrap();
        for x in f.elements() {
            let v = HGVariety::new(n, i.to_vec(), j.to_vec(), k, x).unwrap();
            let brute = count_affine_brute(&f, &v).unwrap();
            assert_eq!(count_via_periods(&f, &v).unwrap(), brute + POINTS_AT_INFINITY);
            assert_eq!(count_affine_characters(&f, &v, TrivialAtZero::One).unwrap(), brute);
            assert_eq!(count_affine_characters(&f, &v, TrivialAtZero::Zero).unwrap(), brute);
        }
    }
}

#[test]
fn congruence_required() {
    let f = FiniteField::new(5, 1).unwrap();
    let v = HGVariety::new(3, vec![1], vec![1], 1, f.from_int(2)).unwrap();
    assert!(matches!(count_via_periods(&f, &v), Err(Error::IncompatibleCongruence { .. })));
    assert!(count_affine_brute(&f, &v).is_ok());
}

#[test]
fn hasse_interval() {
    for q in [5u64, 7, 9, 11, 13, 25, 27, 49, 101] {
        let f = FiniteField::from_q(q).unwrap();
        let bound = 2.0 * (q as f64).sqrt();
        for x in f.elements().filter(|&x| !x.is_zero() && x != f.one()) {
            let n = legendre_count(&f, x).unwrap();
            assert_eq!(n, legendre_count_brute(&f, x));
            assert!(((n - q as i64 - 1) as f64).abs() <= bound);
        }
    }
}

#[test]
fn glc_traces() {
    let f = FiniteField::new(13, 1).unwrap();
    for x in f.elements().filter(|&x| !x.is_zero() && x != f.one()) {
        let c = GLCurve::new(2, 1, 1, 1, x).unwrap();
        let t = glc_trace(&f, &c).unwrap().as_i64().unwrap();
        assert_eq!(t, 13 + 1 - legendre_count(&f, x).unwrap());
        let c = GLCurve::new(6, 4, 3, 1, x).unwrap();
        let t = glc_trace(&f, &c).unwrap();
        let t = t.as_i64().unwrap();
        assert!((t.abs() as f64) <= 2.0 * 2.0 * 13f64.sqrt() + 1e-6);
    }
    let f7 = FiniteField::new(7, 1).unwrap();
    let c = GLCurve::new(3, 1, 1, 1, f7.one()).unwrap();
    assert!(matches!(glc_trace(&f7, &c), Err(Error::DegenerateLambda(_))));
}
