use eck::algebra::{Character, EvalPoint, Monomial, RatExpr, SparsePoly, Q};
use num_traits::Zero;
use proptest::prelude::*;

const ARITY: usize = 3;

fn character() -> impl Strategy<Value = Character> {
    prop::collection::vec(-2i32..=2, ARITY).prop_map(|v| Character::from_slice(&v))
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((0u32..=2, character(), -6i64..=6, 1i64..=3), 1..5).prop_map(|ts| {
        SparsePoly::from_terms(
            ARITY,
            ts.into_iter()
                .map(|(y, c, n, d)| (Monomial::new(y, c), Q::new(n.into(), d.into())))
                .collect::<Vec<_>>(),
        )
    })
}

fn weight() -> impl Strategy<Value = Character> {
    prop::collection::vec(-1i32..=1, ARITY)
        .prop_filter("nonzero weight", |v| v.iter().any(|&e| e != 0))
        .prop_map(|v| Character::from_slice(&v))
}

fn expr() -> impl Strategy<Value = RatExpr> {
    (poly(), prop::collection::vec(weight(), 0..3)).prop_map(|(p, w)| RatExpr::new(p, w).unwrap())
}

fn point() -> impl Strategy<Value = EvalPoint> {
    (prop::collection::vec(2i64..=40, ARITY), -9i64..=9).prop_map(|(t, y)| {
        EvalPoint::new(
            t.into_iter().map(|v| Q::new(v.into(), 7.into())).collect(),
            Q::from_integer(y.into()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn addition_laws(a in expr(), b in expr(), c in expr()) {
        prop_assert!((&a + &b).equals(&(&b + &a)));
        prop_assert!((&(&a + &b) + &c).equals(&(&a + &(&b + &c))));
        prop_assert!((&(&a - &b) + &b).equals(&a));
        prop_assert!((&a + &a.scale(&Q::from_integer((-1).into()))).reduce().is_zero());
    }

    #[test]
    fn multiplication_laws(a in expr(), b in expr(), c in expr()) {
        prop_assert!((&a * &b).equals(&(&b * &a)));
        prop_assert!((&(&a * &b) * &c).equals(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).equals(&(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn exact_division_round_trip(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        let prod = &p * &d;
        prop_assert_eq!(prod.div_exact(&d).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in expr(), b in expr(), pt in point()) {
        if let (Ok(x), Ok(y)) = (a.eval(&pt), b.eval(&pt)) {
            prop_assert_eq!((&a + &b).eval(&pt).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &x * &y);
        }
    }

    #[test]
    fn reduce_is_idempotent_and_value_preserving(a in expr(), pt in point()) {
        let r = a.reduce();
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(r.equals(&a));
        if let (Ok(x), Ok(y)) = (a.eval(&pt), r.eval(&pt)) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn equality_agrees_with_evaluation(a in expr(), b in expr(), pt in point()) {
        if a.equals(&b) {
            if let (Ok(x), Ok(y)) = (a.eval(&pt), b.eval(&pt)) {
                prop_assert_eq!(x, y);
            }
        } else {
            prop_assert!(!(&a - &b).reduce().is_zero());
        }
    }

    #[test]
    fn y_substitution_commutes_with_evaluation(a in expr(), pt in point()) {
        let at = a.subs_y(&pt.y);
        if let Ok(v) = a.eval(&pt) {
            prop_assert_eq!(at.eval(&pt).unwrap(), v);
        }
        prop_assert!(a.subs_y(&Q::zero()).numerator().y_degree().unwrap_or(0) == 0);
    }
}
