//! Reduced Gröbner bases by Buchberger's algorithm.

pub(crate) mod engine;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial, Ring};

use engine::{EPoly, EngineOptions, Layout};

/// A Gröbner basis together with the order it was computed for.
///
/// Reduced bases are canonical: primitive integer generators with positive
/// leading coefficients, sorted ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
    engine: Vec<EPoly>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Vec<u16>> {
        self.generators.iter().map(|g| g.leading_monomial().unwrap().to_vec()).collect()
    }

    fn layout(&self) -> Layout {
        Layout::new(self.ring.nvars(), self.order)
    }

    /// Wraps `gens` as a basis without running Buchberger, e.g. to check a
    /// claimed basis with `verify_s_pairs`. Zero polynomials are dropped.
    pub fn from_generators_unchecked(ring: &Ring, order: MonomialOrder, gens: Vec<Polynomial>) -> Self {
        let l = Layout::new(ring.nvars(), order);
        let ident: Vec<usize> = (0..ring.nvars()).collect();
        let generators: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order)).collect();
        let engine = generators.iter().map(|g| engine::to_engine(g, &l, &ident)).collect();
        GroebnerBasis { ring: ring.clone(), order, generators, reduced: false, engine }
    }

    pub(crate) fn from_engine(ring: &Ring, order: MonomialOrder, engine: Vec<EPoly>) -> Result<Self> {
        let l = Layout::new(ring.nvars(), order);
        let inv: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
        let generators = engine
            .iter()
            .map(|p| engine::from_engine(p, &l, ring, order, &inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroebnerBasis { ring: ring.clone(), order, generators, reduced: true, engine })
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.order == other.order && self.generators == other.generators
    }
}

fn check_ring(ring: &Ring, p: &Polynomial) -> Result<()> {
    if **p.ring() != **ring {
        return Err(Error::RingMismatch(format!("{} vs {}", p.ring(), ring)));
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ring, gens, order, &Budget::unlimited())
}

pub fn buchberger_with(ring: &Ring, gens: &[Polynomial], order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    buchberger_opts(ring, gens, order, true, budget)
}

/// Variant with the pair criteria switchable, for cross-checking.
pub fn buchberger_opts(ring: &Ring, gens: &[Polynomial], order: MonomialOrder, criteria: bool, budget: &Budget) -> Result<GroebnerBasis> {
    if let MonomialOrder::BlockElim { split } = order {
        if split > ring.nvars() {
            return Err(Error::Structural(format!("block split {split} exceeds {} variables", ring.nvars())));
        }
    }
    for g in gens {
        check_ring(ring, g)?;
    }
    let l = Layout::new(ring.nvars(), order);
    let ident: Vec<usize> = (0..ring.nvars()).collect();
    let input: Vec<EPoly> = gens.iter().map(|g| engine::to_engine(g, &l, &ident)).collect();
    let out = engine::groebner(&l, input, EngineOptions { criteria }, budget)?;
    GroebnerBasis::from_engine(ring, order, out)
}

/// Exact normal form of `f` modulo the basis (remainder of full division).
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    normal_form_with(f, g, &Budget::unlimited())
}

pub fn normal_form_with(f: &Polynomial, g: &GroebnerBasis, budget: &Budget) -> Result<Polynomial> {
    check_ring(&g.ring, f)?;
    if f.order() != g.order {
        return Err(Error::Structural(format!("polynomial in {} order, basis in {}", f.order().name(), g.order.name())));
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    let l = g.layout();
    let ident: Vec<usize> = (0..g.ring.nvars()).collect();
    let (_, factor) = f.primitive_integer_coeffs();
    let ef = engine::to_engine(f, &l, &ident);
    let (r, mult) = engine::normal_form(&l, ef, &g.engine, budget)?;
    let inv: Vec<Option<usize>> = (0..g.ring.nvars()).map(Some).collect();
    let rp = engine::from_engine(&r, &l, &g.ring, g.order, &inv)?;
    Ok(rp.scale(&(factor / mult)))
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
/// When `sample` is set, only that many pairs (chosen deterministically)
/// are checked.
pub fn verify_s_pairs(g: &GroebnerBasis, sample: Option<usize>) -> Result<bool> {
    let l = g.layout();
    let elems: Vec<engine::Elem> = g.engine.iter().map(|p| engine::Elem::new(&l, p.clone(), 0)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..elems.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    if let Some(k) = sample {
        if pairs.len() > k {
            let step = pairs.len() / k;
            pairs = pairs.into_iter().step_by(step.max(1)).take(k).collect();
        }
    }
    let active: Vec<usize> = (0..elems.len()).collect();
    let red = engine::Reducers { elems: &elems, active: &active };
    for (i, j) in pairs {
        let lcm = l.lcm(&elems[i].lm, &elems[j].lm);
        let s = engine_spoly(&l, &elems[i], &elems[j], &lcm);
        if s.is_empty() {
            continue;
        }
        let out = engine::reduce(&l, s, 0, &red, None, true, &Budget::unlimited())?;
        if !out.poly.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn engine_spoly(l: &Layout, a: &engine::Elem, b: &engine::Elem, lcm: &[u16]) -> EPoly {
    // S(a,b) = cb*(lcm/la)*a - ca*(lcm/lb)*b
    let ma = l.quotient(lcm, &a.lm);
    let mb = l.quotient(lcm, &b.lm);
    let mut terms = Vec::new();
    let ca = &a.poly.coeffs[0];
    let cb = &b.poly.coeffs[0];
    for i in 0..a.poly.len() {
        let mut m = Vec::new();
        l.mul_into(a.poly.mon(l, i), &ma, &mut m);
        terms.push((cb * &a.poly.coeffs[i], m));
    }
    for i in 0..b.poly.len() {
        let mut m = Vec::new();
        l.mul_into(b.poly.mon(l, i), &mb, &mut m);
        terms.push((-(ca * &b.poly.coeffs[i]), m));
    }
    EPoly::from_terms(l, terms)
}
