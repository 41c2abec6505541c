//! Shared fixtures for the benchmarks.

use cab_core::duality::ProjectiveVariety;
use cab_core::idealops::Ideal;
use cab_core::{parse, Polynomial, Ring, RingContext};

pub fn ring(vars: &[&str]) -> Ring {
    RingContext::new(vars).unwrap()
}

pub fn polys(ring: &Ring, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| parse(g, ring).unwrap()).collect()
}

/// Katsura-3 style system, a standard small Gröbner benchmark.
pub fn katsura3() -> (Ring, Vec<Polynomial>) {
    let r = ring(&["a", "b", "c", "d"]);
    let g = polys(
        &r,
        &["a+2*b+2*c+2*d-1", "a^2+2*b^2+2*c^2+2*d^2-a", "2*a*b+2*b*c+2*c*d-b", "b^2+2*a*c+2*b*d-c"],
    );
    (r, g)
}

pub fn cyclic4() -> (Ring, Vec<Polynomial>) {
    let r = ring(&["a", "b", "c", "d"]);
    let g = polys(&r, &["a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"]);
    (r, g)
}

pub fn variety(vars: &[&str], gens: &[&str]) -> ProjectiveVariety {
    let r = ring(vars);
    ProjectiveVariety::new(Ideal::homogeneous(&r, polys(&r, gens)).unwrap()).unwrap()
}

pub fn twisted_cubic() -> ProjectiveVariety {
    variety(&["x", "y", "z", "w"], &["x*z-y^2", "y*w-z^2", "x*w-y*z"])
}

pub fn plane_cubic() -> ProjectiveVariety {
    variety(&["x", "y", "z"], &["y^2*z-x^3+x*z^2-z^3"])
}
