#![allow(dead_code)]

use cab_core::duality::ProjectiveVariety;
use cab_core::idealops::Ideal;
use cab_core::{parse, Coefficient, Polynomial, Ring, RingContext};
use proptest::prelude::*;

pub fn ring(vars: &[&str]) -> Ring {
    RingContext::new(vars).unwrap()
}

pub fn polys(ring: &Ring, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| parse(g, ring).unwrap()).collect()
}

pub fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(ring, polys(ring, gens)).unwrap()
}

pub fn variety(vars: &[&str], gens: &[&str]) -> ProjectiveVariety {
    let r = ring(vars);
    ProjectiveVariety::new(Ideal::homogeneous(&r, polys(&r, gens)).unwrap()).unwrap()
}

/// Random polynomial with small integer coefficients and up to `terms` terms
/// of total degree at most `deg`.
pub fn arb_poly(ring: Ring, terms: usize, deg: u16) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((-9i64..=9, prop::collection::vec(0..=deg, n)), 0..=terms).prop_map(move |ts| {
        let mut p = Polynomial::zero(&ring);
        for (c, e) in ts {
            if e.iter().map(|&k| k as u32).sum::<u32>() > deg as u32 {
                continue;
            }
            let m = Polynomial::monomial(&ring, Coefficient::from(c), &e).unwrap();
            p = p.checked_add(&m).unwrap();
        }
        p
    })
}
