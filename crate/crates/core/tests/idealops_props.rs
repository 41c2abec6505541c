mod common;

use cab_core::idealops::{poly_gcd, squarefree_part, Ideal};
use cab_core::{Budget, Polynomial};
use common::{arb_poly, ideal, ring};
use proptest::prelude::*;

fn r3() -> cab_core::Ring {
    ring(&["x", "y", "z"])
}

fn arb_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(arb_poly(r3(), 3, 2), 1..=2).prop_map(|g| Ideal::new(&r3(), g).unwrap())
}

fn homogeneous_part(p: &Polynomial, d: u32) -> Polynomial {
    let terms = p.terms().filter(|(_, e)| e.iter().map(|&k| k as u32).sum::<u32>() == d).map(|(c, e)| (c.clone(), e.to_vec())).collect();
    Polynomial::from_terms(p.ring(), p.order(), terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn saturation_grows_and_is_idempotent(i in arb_ideal(), g in arb_poly(r3(), 2, 1)) {
        prop_assume!(!g.is_zero());
        let b = Budget::unlimited();
        let s = i.saturate_by_poly(&g, &b).unwrap();
        prop_assert!(s.contains_ideal(&i, &b).unwrap());
        let again = s.saturate_by_poly(&g, &b).unwrap();
        prop_assert!(again.equals(&s, &b).unwrap());
    }

    #[test]
    fn intersection_bounds(i in arb_ideal(), j in arb_ideal()) {
        let b = Budget::unlimited();
        let meet = i.intersect(&j, &b).unwrap();
        prop_assert!(i.contains_ideal(&meet, &b).unwrap());
        prop_assert!(j.contains_ideal(&meet, &b).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap(), &b).unwrap());
        prop_assert!(i.intersect(&i, &b).unwrap().equals(&i, &b).unwrap());
    }

    #[test]
    fn elimination_is_a_subideal(i in arb_ideal()) {
        let b = Budget::unlimited();
        let e = i.eliminate(&[0], &b).unwrap();
        prop_assert!(i.contains_ideal(&e, &b).unwrap());
        for g in e.generators() {
            prop_assert!(!g.uses_var(0));
        }
    }

    #[test]
    fn squarefree_part_is_a_fixed_point(p in arb_poly(r3(), 3, 2)) {
        prop_assume!(!p.is_zero() && !p.is_constant());
        let s = squarefree_part(&p).unwrap();
        prop_assert_eq!(squarefree_part(&s).unwrap().canonical(), s.canonical());
        let sq = squarefree_part(&p.checked_mul(&p).unwrap()).unwrap();
        prop_assert_eq!(sq.canonical(), s.canonical());
        prop_assert!(p.exact_divide(&s).is_ok());
    }

    #[test]
    fn gcd_divides_and_keeps_common_factors(a in arb_poly(r3(), 3, 2), b in arb_poly(r3(), 3, 2), c in arb_poly(r3(), 2, 1)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (a.checked_mul(&c).unwrap(), b.checked_mul(&c).unwrap());
        let g = poly_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.exact_divide(&g).is_ok());
        prop_assert!(bc.exact_divide(&g).is_ok());
        prop_assert!(g.exact_divide(&c).is_ok());
    }

    #[test]
    fn hypersurface_degree(p in arb_poly(r3(), 4, 3), d in 1u32..=3) {
        let f = homogeneous_part(&p, d);
        prop_assume!(!f.is_zero());
        let b = Budget::unlimited();
        let i = Ideal::homogeneous(&r3(), vec![f]).unwrap();
        prop_assert_eq!(i.dimension(&b).unwrap(), 1);
        prop_assert_eq!(i.degree(&b).unwrap(), d as u64);
        prop_assert_eq!(i.codim(&b).unwrap(), 1);
    }

    #[test]
    fn radical_sees_through_powers(p in arb_poly(r3(), 3, 2), k in 2u32..4) {
        prop_assume!(!p.is_constant());
        let b = Budget::unlimited();
        let i = Ideal::new(&r3(), vec![p.pow(k).unwrap()]).unwrap();
        prop_assert!(i.radical_contains(&p, &b).unwrap());
        let j = Ideal::new(&r3(), vec![p.clone()]).unwrap();
        prop_assert!(i.radical_equal(&j, &b).unwrap());
    }
}

#[test]
fn homogenize_then_dehomogenize() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["y-x^2", "x^3-y*x"]);
    let h = i.homogenize("w", &b).unwrap();
    assert!(h.is_homogeneous());
    let w = h.ring().index_of("w").unwrap();
    let back = h.dehomogenize(w).unwrap().rename_into(&r).unwrap();
    assert!(back.equals(&i, &b).unwrap());
}

#[test]
fn twisted_cubic_invariants() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y", "z", "w"]);
    let i = Ideal::homogeneous(&r, common::polys(&r, &["x*z-y^2", "y*w-z^2", "x*w-y*z"])).unwrap();
    assert_eq!((i.dimension(&b).unwrap(), i.degree(&b).unwrap(), i.codim(&b).unwrap()), (1, 3, 2));
    // the affine cone is three dimensional
    let cone = Ideal::new(&r, i.generators().to_vec()).unwrap();
    assert!(!cone.is_homogeneous());
    assert_eq!(cone.dimension(&b).unwrap(), 2);
}
