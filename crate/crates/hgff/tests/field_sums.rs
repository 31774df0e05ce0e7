use proptest::prelude::*;

use hgff::chars::{all_chars, char_value, chars_of_order, iota, kappa, parse_char};
use hgff::sums::context;
use hgff::{CycloNum, FiniteField, MultChar, RationalParam};

const QS: [u64; 8] = [3, 4, 5, 7, 8, 9, 25, 27];

proptest! {
    #[test]
    fn field_axioms(qi in 0usize..QS.len(), a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let f = FiniteField::from_q(QS[qi]).unwrap();
        let q = f.q();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.add_raw(a, b), f.add_raw(b, a));
        prop_assert_eq!(f.mul_raw(a, f.add_raw(b, c)), f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c)));
        prop_assert_eq!(f.mul_raw(f.mul_raw(a, b), c), f.mul_raw(a, f.mul_raw(b, c)));
        prop_assert_eq!(f.add_raw(a, f.neg_raw(a)), 0);
        if b != 0 {
            prop_assert_eq!(f.mul_raw(f.div_raw(a, b), b), a);
        }
    }

    #[test]
    fn frobenius_fixes_prime_field(qi in 0usize..QS.len(), a in 0u32..64) {
        let f = FiniteField::from_q(QS[qi]).unwrap();
        let a = a % f.q();
        prop_assert_eq!(f.pow_raw(a, f.q() as i64), a);
        let t = f.wrap(f.trace_raw(a));
        prop_assert_eq!(f.pow(t, f.p() as i64).unwrap(), t);
    }

    #[test]
    fn cyclo_ring(order in 1u32..25, i in -30i64..30, j in -30i64..30, n in -9i64..9) {
        let x = CycloNum::zeta(order, i).scale(n) + CycloNum::one(order);
        let y = CycloNum::zeta(order, j);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &y, &(&x * &y) + &(&y * &y));
        prop_assert_eq!(&y * &y.conj(), CycloNum::one(order));
        prop_assert_eq!(CycloNum::zeta(order, i + order as i64), CycloNum::zeta(order, i));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), CycloNum::one(order));
        }
    }
}

#[test]
fn cyclo_lifts_between_orders() {
    assert_eq!(CycloNum::zeta(4, 1), CycloNum::zeta(12, 3));
    assert_eq!(CycloNum::zeta(6, 1) + CycloNum::zeta(3, 1), CycloNum::zeta(12, 2).scale(2) - CycloNum::one(12));
    let s: CycloNum = (0..7).fold(CycloNum::zero(7), |acc, k| acc + CycloNum::zeta(7, k));
    assert!(s.is_zero());
}

#[test]
fn character_orthogonality() {
    for q in QS {
        let f = FiniteField::from_q(q).unwrap();
        let n = f.q() as i64 - 1;
        for x in f.nonzero() {
            let s = all_chars(f.q()).fold(CycloNum::zero(f.q() - 1), |acc, c| acc + char_value(&f, c, x).unwrap());
            assert_eq!(s.as_i64().unwrap(), if x == f.one() { n } else { 0 });
        }
        for c in all_chars(f.q()) {
            let s = f.nonzero().fold(CycloNum::zero(f.q() - 1), |acc, x| acc + char_value(&f, c, x).unwrap());
            assert_eq!(s.as_i64().unwrap(), if c.is_trivial() { n } else { 0 });
            assert!(char_value(&f, c, f.zero()).unwrap().is_zero());
        }
    }
}

#[test]
fn character_groups() {
    assert_eq!(chars_of_order(13, 4).unwrap().len(), 2);
    assert_eq!(chars_of_order(13, 12).unwrap().len(), 4);
    assert!(chars_of_order(13, 5).is_err());
    let f = FiniteField::from_q(13).unwrap();
    let eta = iota(RationalParam::new(1, 4).unwrap(), &f).unwrap();
    assert_eq!(eta.order(), 4);
    assert_eq!(kappa(eta, 4).unwrap(), RationalParam::new(1, 4).unwrap());
    assert_eq!(MultChar::quadratic(13), eta * eta);
    assert_eq!(parse_char(13, "eps").unwrap(), MultChar::trivial(13));
    assert_eq!(parse_char(13, "phi").unwrap(), MultChar::quadratic(13));
}

#[test]
fn gauss_norms_and_jacobi() {
    for q in [4u64, 5, 7, 9, 13, 25, 27] {
        let f = FiniteField::from_q(q).unwrap();
        let ctx = context(&f);
        let qq = f.q() as i64;
        let m1 = f.from_int(-1);
        for a in all_chars(f.q()) {
            let g = ctx.gauss(a).unwrap();
            if a.is_trivial() {
                assert_eq!(g.as_i64().unwrap(), -1);
                continue;
            }
            assert_eq!((&g * &g.conj()).as_i64().unwrap(), qq);
            let sign = char_value(&f, a, m1).unwrap();
            assert_eq!(ctx.jacobi(a, a.conj()), -sign);
            for b in all_chars(f.q()) {
                assert_eq!(ctx.jacobi(a, b), ctx.jacobi(b, a));
                assert_eq!(ctx.jacobi_from_gauss(a, b).unwrap(), ctx.jacobi(a, b), "{q} {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn hasse_davenport() {
    for q in [7u64, 13, 25] {
        let f = FiniteField::from_q(q).unwrap();
        let ctx = context(&f);
        for psi in all_chars(f.q()) {
            for m in [2u32, 3] {
                if (f.q() - 1).is_multiple_of(m) {
                    assert!(ctx.hasse_davenport_product_check(psi, m).unwrap());
                }
            }
            assert!(ctx.hasse_davenport_lift_check(psi, 2).unwrap());
        }
    }
}
