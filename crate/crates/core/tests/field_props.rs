use bandinv::field::{Approx, Field, OpCounter, Phase, PrimeField, Rationals};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn check_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    assert!(f.is_zero(&f.add(a, &f.neg(a))));
    assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
    if !f.is_zero(a) {
        assert_eq!(f.mul(a, &f.invert(a).unwrap()), f.one());
    } else {
        assert!(f.invert(a).is_err());
    }
    assert_eq!(&f.normalize(a), a);
}

fn rational() -> impl Strategy<Value = BigRational> {
    (any::<i64>(), 1..i64::MAX)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 65537, 2_147_483_647]),
                          a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (f.normalize(&a), f.normalize(&b), f.normalize(&c));
        check_axioms(&f, &a, &b, &c);
        prop_assert!(a < f.modulus());
    }

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        check_axioms(&Rationals, &a, &b, &c);
    }

    #[test]
    fn rational_canonical_form_is_unique(n in -1000i64..1000, d in 1i64..1000, m in 1i64..50) {
        let a = BigRational::new(n.into(), d.into());
        let b = BigRational::new((n * m).into(), (d * m).into());
        prop_assert_eq!(a.numer(), b.numer());
        prop_assert_eq!(a.denom(), b.denom());
        prop_assert!(a.denom() > &BigInt::from(0));
    }

    #[test]
    fn approx_axioms(a in -1e3f64..1e3, b in -1e3f64..1e3, c in -1e3f64..1e3) {
        let tol = 1e-6;
        let f = Approx::new(tol).unwrap();
        let close = |x: f64, y: f64| (x - y).abs() <= 4.0 * tol;
        prop_assert!(close(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c))));
        prop_assert!(close(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c))));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(close(f.mul(&a, &f.invert(&a).unwrap()), 1.0));
        }
    }

    #[test]
    fn counter_counts_exactly(n in 0u64..200) {
        let f = PrimeField::new(101).unwrap();
        let mut c = OpCounter::new();
        c.set_phase(Phase::Eliminate);
        for i in 0..n {
            c.mul(&f, &(i as u32 % 101), &3);
            c.add(&f, &1, &2);
            c.div(&f, &1, &2).unwrap();
        }
        let t = c.tally(Phase::Eliminate);
        prop_assert_eq!((t.muls, t.adds, t.divs), (n, n, n));
        prop_assert_eq!(c.tally(Phase::Generate).mul_div(), 0);
    }
}
