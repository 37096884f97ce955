use num_bigint::BigInt;
use proptest::prelude::*;

use kchevalley::kexpr::{ClassKey, ExpansionDocument, KExpression, LaurentPoly};
use kchevalley::{CartanType, Family, Root, Weight};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..4, -5i64..6), 0..4).prop_map(|ms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in ms {
            p.add_monomial(BigInt::from(c), e);
        }
        p
    })
}

fn key() -> impl Strategy<Value = ClassKey> {
    (
        prop::sample::select(vec![
            vec![],
            vec![1],
            vec![2],
            vec![1, 2],
            vec![2, 1],
            vec![1, 2, 1],
        ]),
        prop::collection::vec(-2i64..3, 2),
        prop::collection::vec(-2i64..3, 2),
    )
        .prop_map(|(word, xi, mu)| ClassKey {
            word,
            xi: Root(xi),
            mu: Weight(mu),
        })
}

fn expr() -> impl Strategy<Value = KExpression> {
    prop::collection::vec((key(), poly()), 0..6).prop_map(|terms| {
        let mut e = KExpression::new();
        for (k, c) in terms {
            e.add_term(k, &c);
        }
        e
    })
}

proptest! {
    #[test]
    fn json_round_trip(e in expr()) {
        prop_assert_eq!(KExpression::parse_json(&e.to_json()).unwrap(), e.clone());
        let doc = ExpansionDocument {
            cartan_type: CartanType::new(Family::A, 2).unwrap(),
            conjectural: false,
            walks: Some(7),
            decorated_walks: None,
            expression: e,
        };
        prop_assert_eq!(ExpansionDocument::parse_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn addition_is_commutative_and_associative(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.add(&a.negate()).is_empty());
        prop_assert_eq!(a.add(&KExpression::new()), a);
    }

    #[test]
    fn scaling_distributes(a in expr(), b in expr(), p in poly(), r in poly()) {
        prop_assert_eq!(a.add(&b).scale(&p), a.scale(&p).add(&b.scale(&p)));
        prop_assert_eq!(a.scale(&(&p + &r)), a.scale(&p).add(&a.scale(&r)));
        prop_assert_eq!(a.scale(&p).scale(&r), a.scale(&(&p * &r)));
        prop_assert_eq!(a.scale(&LaurentPoly::one()), a.clone());
        prop_assert!(a.scale(&LaurentPoly::zero()).is_empty());
    }

    #[test]
    fn no_zero_coefficients_are_stored(a in expr(), b in expr()) {
        for (_, c) in a.add(&b.negate()).iter() {
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(p in poly(), r in poly()) {
        prop_assert_eq!((&p * &r).at_one(), p.at_one() * r.at_one());
        prop_assert_eq!((&p + &r).at_one(), p.at_one() + r.at_one());
    }
}
