mod common;

use cab_core::{format, parse, Coefficient, MonomialOrder, Polynomial};
use common::{arb_poly, ring};
use proptest::prelude::*;

fn r3() -> cab_core::Ring {
    ring(&["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_commutative_and_associative(a in arb_poly(r3(), 6, 3), b in arb_poly(r3(), 6, 3), c in arb_poly(r3(), 6, 3)) {
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        let l = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let r = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert!(a.checked_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(r3(), 5, 3), b in arb_poly(r3(), 5, 3), c in arb_poly(r3(), 5, 3)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        let l = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let r = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        let l = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let r = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(a.checked_mul(&Polynomial::one(&r3())).unwrap(), a.clone());
    }

    #[test]
    fn degree_is_additive(a in arb_poly(r3(), 5, 3), b in arb_poly(r3(), 5, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = a.checked_mul(&b).unwrap();
        prop_assert_eq!(p.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        prop_assert_eq!(p.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in arb_poly(r3(), 8, 4)) {
        let s = format(&a);
        let b = parse(&s, &r3()).unwrap();
        prop_assert_eq!(&b, &a.canonical());
        prop_assert_eq!(format(&b), s);
    }

    #[test]
    fn order_change_keeps_the_value(a in arb_poly(r3(), 8, 4)) {
        for order in [MonomialOrder::Lex, MonomialOrder::BlockElim { split: 1 }] {
            let b = a.with_order(order);
            prop_assert_eq!(&b, &a);
            prop_assert_eq!(b.nterms(), a.nterms());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(r3(), 5, 3), b in arb_poly(r3(), 5, 3), pt in prop::collection::vec(-5i64..5, 3)) {
        let pt: Vec<Coefficient> = pt.into_iter().map(Coefficient::from).collect();
        let ea = a.evaluate(&pt).unwrap();
        let eb = b.evaluate(&pt).unwrap();
        prop_assert_eq!(a.checked_mul(&b).unwrap().evaluate(&pt).unwrap(), &ea * &eb);
        prop_assert_eq!(a.checked_add(&b).unwrap().evaluate(&pt).unwrap(), ea + eb);
    }

    #[test]
    fn monomial_orders_are_total_and_compatible(e in prop::collection::vec(0u16..4, 3), f in prop::collection::vec(0u16..4, 3), g in prop::collection::vec(0u16..4, 3)) {
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::BlockElim { split: 2 }] {
            let ef = order.compare(&e, &f).unwrap();
            prop_assert_eq!(ef.reverse(), order.compare(&f, &e).unwrap());
            let eg: Vec<u16> = e.iter().zip(&g).map(|(a, b)| a + b).collect();
            let fg: Vec<u16> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
            prop_assert_eq!(order.compare(&eg, &fg).unwrap(), ef);
            prop_assert!(order.compare(&eg, &e).unwrap().is_ge());
        }
    }
}

#[test]
fn parse_errors_report_position() {
    match parse("x+*y", &r3()) {
        Err(cab_core::Error::Parse { position, .. }) => assert_eq!(position, 2),
        other => panic!("{other:?}"),
    }
    assert!(parse("x+q", &r3()).is_err());
}

#[test]
fn orbitope_quartic_round_trip() {
    let names: Vec<String> = ["12", "13", "14", "15", "23", "24", "25", "34", "35", "45"].iter().map(|s| format!("p{s}")).collect();
    let r = cab_core::RingContext::new(&names).unwrap();
    let text = include_str!("data/orbitope_quartic.txt").trim();
    let p = parse(text, &r).unwrap();
    assert_eq!(p.nterms(), 81);
    assert_eq!(p.degree(), Some(4));
    let again = parse(&format(&p), &r).unwrap();
    assert_eq!(again, p);
    assert_eq!(format(&again), format(&p));
    let ones = vec![Coefficient::from(1); 10];
    assert_eq!(p.evaluate(&ones).unwrap(), Coefficient::from(61));
    let thirds: Vec<Coefficient> = (1..=10).map(|i| Coefficient::from(i) / Coefficient::from(3)).collect();
    assert_eq!(p.evaluate(&thirds).unwrap(), Coefficient::from(14000) / Coefficient::from(9));
}
