//! Ideals and the operations the dualization recipe is built from.

pub mod gcd;
pub mod hilbert;
pub mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::RBig;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::engine::{self, EngineOptions, Layout};
use crate::groebner::{self, GroebnerBasis};
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingContext};

pub use gcd::{gcd as poly_gcd, squarefree_part};
pub use matrix::PolyMatrix;

/// Generating set of an ideal with cached Gröbner bases.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: Arc<Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if **a != **b {
        return Err(Error::RingMismatch(format!("{a} vs {b}")));
    }
    Ok(())
}

impl Ideal {
    /// Affine ideal; zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            check_same(ring, g.ring())?;
            if !g.is_zero() {
                out.push(g.with_order(MonomialOrder::GrevLex));
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out, homogeneous: false, cache: Default::default() })
    }

    /// Ideal with projective semantics; every generator must be homogeneous.
    pub fn homogeneous(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut i = Self::new(ring, gens)?;
        if let Some(g) = i.gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::InvalidArgument(format!("generator {g} is not homogeneous")));
        }
        i.homogeneous = true;
        Ok(i)
    }

    /// Flags the ideal as homogeneous when its generators allow it.
    pub fn into_projective(self) -> Result<Self> {
        Self::homogeneous(&self.ring, self.gens.clone()).map(|mut i| {
            i.cache = self.cache;
            i
        })
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, vec![]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn with_gens(&self, gens: Vec<Polynomial>, gb: Option<GroebnerBasis>) -> Ideal {
        let homogeneous = self.homogeneous && gens.iter().all(|g| g.is_homogeneous());
        let out = Ideal { ring: self.ring.clone(), gens, homogeneous, cache: Default::default() };
        if let Some(gb) = gb {
            out.cache.lock().unwrap().insert(gb.order(), Arc::new(gb));
        }
        out
    }

    fn from_basis(ring: &Ring, gb: GroebnerBasis, homogeneous: bool) -> Ideal {
        let gens = gb.generators().iter().map(|g| g.with_order(MonomialOrder::GrevLex)).collect::<Vec<_>>();
        let homogeneous = homogeneous && gens.iter().all(|g: &Polynomial| g.is_homogeneous());
        let out = Ideal { ring: ring.clone(), gens, homogeneous, cache: Default::default() };
        out.cache.lock().unwrap().insert(gb.order(), Arc::new(gb));
        out
    }

    /// Reduced Gröbner basis in `order`, cached.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        self.groebner_with(order, &Budget::unlimited())
    }

    pub fn groebner_with(&self, order: MonomialOrder, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::buchberger_with(&self.ring, &self.gens, order, budget)?);
        self.cache.lock().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    /// The reduced GrevLex basis as a new ideal presentation.
    pub fn reduced(&self, budget: &Budget) -> Result<Ideal> {
        let gb = self.groebner_with(MonomialOrder::GrevLex, budget)?;
        Ok(Ideal::from_basis(&self.ring, (*gb).clone(), self.homogeneous))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.contains_with(f, &Budget::unlimited())
    }

    pub fn contains_with(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        let gb = self.groebner_with(MonomialOrder::GrevLex, budget)?;
        Ok(groebner::normal_form_with(&f.with_order(MonomialOrder::GrevLex), &gb, budget)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.contains_with(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (compares reduced GrevLex bases).
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        let a = self.groebner_with(MonomialOrder::GrevLex, budget)?;
        let b = other.groebner_with(MonomialOrder::GrevLex, budget)?;
        Ok(a.generators() == b.generators())
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner_with(MonomialOrder::GrevLex, budget)?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let mut out = self.with_gens(gens, None);
        out.homogeneous = self.homogeneous && other.homogeneous;
        Ok(out)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        let mut out = self.with_gens(gens, None);
        out.homogeneous = self.homogeneous && other.homogeneous;
        Ok(out)
    }

    /// Adds generators.
    pub fn extend(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for g in extra {
            check_same(&self.ring, g.ring())?;
            if !g.is_zero() {
                gens.push(g.with_order(MonomialOrder::GrevLex));
            }
        }
        Ok(self.with_gens(gens, None))
    }

    /// Moves the ideal into another ring, matching variables by name.
    pub fn rename_into(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.rename_into(target)).collect::<Result<Vec<_>>>()?;
        let mut out = Ideal::new(target, gens)?;
        out.homogeneous = self.homogeneous && out.gens.iter().all(|g| g.is_homogeneous());
        Ok(out)
    }

    /// `I ∩ Q[remaining variables]`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize], budget: &Budget) -> Result<Ideal> {
        if vars.iter().any(|&v| v >= self.ring.nvars()) {
            return Err(Error::Structural("elimination variable out of range".into()));
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let keep: Vec<Option<usize>> =
            (0..self.ring.nvars()).map(|i| if vars.contains(&i) { None } else { Some(i) }).collect();
        let gb = eliminate_core(&self.ring, &self.gens, &keep, &self.ring, budget)?;
        Ok(Ideal::from_basis(&self.ring, gb, self.homogeneous))
    }

    /// Eliminates every variable missing from `target` and moves the result
    /// there (variables matched by name, relative order preserved).
    pub fn eliminate_into(&self, target: &Ring, budget: &Budget) -> Result<Ideal> {
        let keep: Vec<Option<usize>> = (0..self.ring.nvars()).map(|i| target.index_of(self.ring.var_name(i))).collect();
        let gb = eliminate_core(&self.ring, &self.gens, &keep, target, budget)?;
        Ok(Ideal::from_basis(target, gb, self.homogeneous))
    }

    /// `I : g^∞` by the tag-variable construction.
    pub fn saturate_by_poly(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        check_same(&self.ring, g.ring())?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        if self.gens.iter().all(|p| p.is_homogeneous()) && g.is_homogeneous() {
            return self.saturate_graded(g, budget);
        }
        let (ext, t) = extend_ring(&self.ring, "t")?;
        let mut gens = self.gens.iter().map(|p| p.rename_into(&ext)).collect::<Result<Vec<_>>>()?;
        let tg = Polynomial::var(&ext, t).checked_mul(&g.rename_into(&ext)?)?;
        gens.push(Polynomial::one(&ext).checked_sub(&tg)?);
        let keep: Vec<Option<usize>> = (0..ext.nvars()).map(|i| if i == t { None } else { Some(i) }).collect();
        let gb = eliminate_core(&ext, &gens, &keep, &self.ring, budget)?;
        Ok(Ideal::from_basis(&self.ring, gb, self.homogeneous))
    }

    /// `I : g^∞` for homogeneous data: with a slack variable `s` of weight
    /// `deg g` placed last, a weighted GrevLex basis of `I + <s - g>` gives
    /// `(I + <s - g>) : s^∞` by stripping powers of `s`; then `s = g`.
    fn saturate_graded(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        let (ext, s) = extend_ring(&self.ring, "s")?;
        let n = ext.nvars();
        let d = g.degree().unwrap_or(0).max(1) as u16;
        let mut w = vec![1u16; n];
        w[s] = d;
        let l = Layout::weighted(n, MonomialOrder::GrevLex, w);
        let ident: Vec<usize> = (0..n).collect();
        let mut input: Vec<engine::EPoly> =
            self.gens.iter().map(|p| Ok(engine::to_engine(&p.rename_into(&ext)?, &l, &ident))).collect::<Result<_>>()?;
        let ge = g.rename_into(&ext)?;
        input.push(engine::to_engine(&Polynomial::var(&ext, s).checked_sub(&ge)?, &l, &ident));
        let started = std::time::Instant::now();
        let out = engine::groebner(&l, input, EngineOptions::default(), budget)?;
        log::debug!("graded saturation in {n} variables: {} elements in {:?}", out.len(), started.elapsed());
        let inv: Vec<Option<usize>> = (0..n).map(Some).collect();
        let mut gens = Vec::with_capacity(out.len());
        for p in &out {
            let q = engine::from_engine(p, &l, &ext, MonomialOrder::GrevLex, &inv)?;
            let k = q.terms().map(|(_, e)| e[s]).min().unwrap_or(0);
            let q = if k > 0 {
                let mut m = vec![0u16; n];
                m[s] = k;
                q.exact_divide(&Polynomial::monomial(&ext, RBig::ONE, &m)?)?
            } else {
                q
            };
            let q = if q.uses_var(s) { q.substitute(s, &ge)? } else { q };
            gens.push(q.rename_into(&self.ring)?);
        }
        let mut out = Ideal::new(&self.ring, gens)?;
        out.homogeneous = self.homogeneous;
        Ok(out)
    }

    /// `I : J^∞`.
    pub fn saturate(&self, j: &Ideal, budget: &Budget) -> Result<Ideal> {
        check_same(&self.ring, &j.ring)?;
        let js: Vec<&Polynomial> = j.gens.iter().filter(|g| !g.is_zero()).collect();
        if js.is_empty() {
            return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
        }
        if js.iter().any(|g| g.is_constant()) {
            return Ok(self.clone());
        }
        // exact: intersect I:g^∞ over the generators, skipping repeats
        let mut parts: Vec<Ideal> = Vec::new();
        for &g in &js {
            let sat = self.saturate_by_poly(g, budget)?;
            let mut seen = false;
            for p in &parts {
                if p.equals(&sat, budget)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                parts.push(sat);
            }
        }
        // a part containing another adds nothing to the intersection
        let mut minimal: Vec<Ideal> = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            let mut redundant = false;
            for (j, q) in parts.iter().enumerate() {
                if i != j && p.contains_ideal(q, budget)? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                minimal.push(p.clone());
            }
        }
        if minimal.len() == 1 {
            return Ok(minimal.remove(0));
        }
        // I:J^∞ lies in I:g^∞ for any g in J; if that is also inside every
        // part it is the intersection, and the costly intersect is avoided
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a7_0001);
        let mut g = Polynomial::zero(&self.ring);
        for p in js {
            g = g.checked_add(&p.scale(&RBig::from(rng.gen_range(1..=9i64))))?;
        }
        if !g.is_zero() {
            let candidate = self.saturate_by_poly(&g, budget)?;
            let mut inside = true;
            for p in &minimal {
                if !p.contains_ideal(&candidate, budget)? {
                    inside = false;
                    break;
                }
            }
            if inside {
                return Ok(candidate);
            }
            log::debug!("combined saturation rejected, intersecting {} parts", minimal.len());
        }
        let mut acc = minimal.remove(0);
        for p in &minimal {
            acc = acc.intersect(p, budget)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` via `<t*I, (1-t)*J>` eliminating `t`.
    pub fn intersect(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal { homogeneous: self.homogeneous && other.homogeneous, ..Ideal::zero(&self.ring) });
        }
        let (ext, t) = extend_ring(&self.ring, "t")?;
        let tv = Polynomial::var(&ext, t);
        let one_minus = Polynomial::one(&ext).checked_sub(&tv)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(tv.checked_mul(&g.rename_into(&ext)?)?);
        }
        for g in &other.gens {
            gens.push(one_minus.checked_mul(&g.rename_into(&ext)?)?);
        }
        let keep: Vec<Option<usize>> = (0..ext.nvars()).map(|i| if i == t { None } else { Some(i) }).collect();
        let gb = eliminate_core(&ext, &gens, &keep, &self.ring, budget)?;
        Ok(Ideal::from_basis(&self.ring, gb, self.homogeneous && other.homogeneous))
    }

    /// Krull dimension of `Q[x]/I` and the degree, read from the GrevLex
    /// leading-term ideal. `None` for the unit ideal.
    pub fn krull_dimension_and_degree(&self, budget: &Budget) -> Result<Option<(usize, u64)>> {
        let gb = self.groebner_with(MonomialOrder::GrevLex, budget)?;
        let lms = gb.leading_monomials();
        Ok(hilbert::dimension_and_degree(&lms, self.ring.nvars()).map(|(d, deg)| (d, deg as u64)))
    }

    /// Projective dimension for homogeneous ideals, affine dimension
    /// otherwise; −1 for the empty variety.
    pub fn dimension(&self, budget: &Budget) -> Result<i64> {
        Ok(match self.krull_dimension_and_degree(budget)? {
            None => -1,
            Some((d, _)) if self.homogeneous => d as i64 - 1,
            Some((d, _)) => d as i64,
        })
    }

    /// Degree; 0 for the unit ideal.
    pub fn degree(&self, budget: &Budget) -> Result<u64> {
        Ok(self.krull_dimension_and_degree(budget)?.map(|(_, d)| d).unwrap_or(0))
    }

    /// Ambient dimension minus dimension.
    pub fn codim(&self, budget: &Budget) -> Result<i64> {
        let ambient = self.ring.nvars() as i64 - if self.homogeneous { 1 } else { 0 };
        Ok(ambient - self.dimension(budget)?)
    }

    /// Homogenizes with a fresh variable `x0` appended to the ring, then
    /// saturates by it so the result is the ideal of the projective closure.
    pub fn homogenize(&self, x0: &str, budget: &Budget) -> Result<Ideal> {
        if self.ring.index_of(x0).is_some() {
            return Err(Error::InvalidArgument(format!("variable '{x0}' already in the ring")));
        }
        let (ext, w) = extend_ring(&self.ring, x0)?;
        // a GrevLex basis homogenizes to a basis of the closure
        let gb = self.groebner_with(MonomialOrder::GrevLex, budget)?;
        let gens = gb
            .generators()
            .iter()
            .map(|g| homogenize_poly(&g.rename_into(&ext)?, w))
            .collect::<Result<Vec<_>>>()?;
        let h = Ideal::homogeneous(&ext, gens)?;
        h.saturate_by_poly(&Polynomial::var(&ext, w), budget)
    }

    /// Substitutes `var = 1` and drops the variable from the ring.
    pub fn dehomogenize(&self, var: usize) -> Result<Ideal> {
        let names: Vec<&str> = (0..self.ring.nvars()).filter(|&i| i != var).map(|i| self.ring.var_name(i)).collect();
        let target = RingContext::new(&names)?;
        let gens = self
            .gens
            .iter()
            .map(|g| dehomogenize(g, var)?.rename_into(&target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)
    }

    /// Matrix of partial derivatives, rows indexed by `vars`, columns by
    /// generators.
    pub fn jacobian(&self, vars: &[usize]) -> Result<PolyMatrix> {
        jacobian(&self.ring, &self.gens, vars)
    }

    /// Radical membership: `f` vanishes on `V(I)` iff `1 ∈ I + <1 - t f>`.
    pub fn radical_contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.contains_with(f, budget)? {
            return Ok(true);
        }
        let (ext, t) = extend_ring(&self.ring, "t")?;
        let mut gens = self.gens.iter().map(|p| p.rename_into(&ext)).collect::<Result<Vec<_>>>()?;
        let tf = Polynomial::var(&ext, t).checked_mul(&f.rename_into(&ext)?)?;
        gens.push(Polynomial::one(&ext).checked_sub(&tf)?);
        Ok(groebner::buchberger_with(&ext, &gens, MonomialOrder::GrevLex, budget)?.is_unit())
    }

    /// `V(self) ⊆ V(other)`.
    pub fn variety_contained_in(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same zero set over the algebraic closure.
    pub fn radical_equal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        Ok(self.variety_contained_in(other, budget)? && other.variety_contained_in(self, budget)?)
    }
}

/// Ideal membership through a cached Gröbner basis.
pub fn is_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Ideal of all `r x r` minors.
pub fn minors(m: &PolyMatrix, r: usize) -> Result<Ideal> {
    let ms = m.minors(r)?;
    Ideal::new(m.ring(), ms)
}

pub fn jacobian(ring: &Ring, gens: &[Polynomial], vars: &[usize]) -> Result<PolyMatrix> {
    let rows = vars.iter().map(|&v| gens.iter().map(|g| g.derivative(v)).collect()).collect();
    PolyMatrix::from_rows(ring, rows)
}

/// Substitutes `var = 1`.
pub fn dehomogenize(p: &Polynomial, var: usize) -> Result<Polynomial> {
    p.substitute(var, &Polynomial::one(p.ring()))
}

/// Multiplies each term by the power of `w` lifting it to the total degree.
pub fn homogenize_poly(p: &Polynomial, w: usize) -> Result<Polynomial> {
    let Some(d) = p.degree() else { return Ok(p.clone()) };
    let terms = p
        .terms()
        .map(|(c, e)| {
            let mut e = e.to_vec();
            let deg: u32 = e.iter().map(|&k| k as u32).sum();
            e[w] += (d - deg) as u16;
            (c.clone(), e)
        })
        .collect();
    Polynomial::from_terms(p.ring(), p.order(), terms)
}

/// Appends a fresh variable named after `base`; returns the ring and its index.
pub fn extend_ring(ring: &Ring, base: &str) -> Result<(Ring, usize)> {
    let name = ring.fresh_name(base);
    let mut blocks: Vec<(String, Vec<String>)> =
        ring.blocks().iter().map(|b| (b.name.clone(), ring.vars()[b.range()].to_vec())).collect();
    blocks.push(("aux".into(), vec![name]));
    let ext = RingContext::with_blocks(blocks)?;
    let idx = ext.nvars() - 1;
    Ok((ext, idx))
}

/// Elimination kernel. `keep[i]` is the target index of source variable
/// `i`, `None` for eliminated variables. Kept variables must appear in the
/// target in the same relative order; the returned basis is then the
/// reduced GrevLex basis of the elimination ideal in `target`.
pub(crate) fn eliminate_core(
    source: &Ring,
    gens: &[Polynomial],
    keep: &[Option<usize>],
    target: &Ring,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let kept: Vec<usize> = keep.iter().flatten().copied().collect();
    if kept.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Structural("kept variables must stay in order".into()));
    }
    for g in gens {
        check_same(source, g.ring())?;
    }
    let n = source.nvars();
    let e = keep.iter().filter(|k| k.is_none()).count();
    let order = if e == 0 { MonomialOrder::GrevLex } else { MonomialOrder::BlockElim { split: e } };
    let l = Layout::new(n, order);
    let mut map = vec![0usize; n];
    let (mut front, mut back) = (0usize, e);
    for (i, k) in keep.iter().enumerate() {
        if k.is_none() {
            map[i] = front;
            front += 1;
        } else {
            map[i] = back;
            back += 1;
        }
    }
    let input: Vec<engine::EPoly> = gens.iter().map(|g| engine::to_engine(g, &l, &map)).collect();
    let started = std::time::Instant::now();
    let out = engine::groebner(&l, input, EngineOptions::default(), budget)?;
    log::debug!("eliminated {e} of {n} variables: {} elements in {:?}", out.len(), started.elapsed());
    let mut inv: Vec<Option<usize>> = vec![None; n];
    for (i, k) in keep.iter().enumerate() {
        if let Some(t) = k {
            inv[map[i]] = Some(*t);
        }
    }
    let tl = Layout::new(target.nvars(), MonomialOrder::GrevLex);
    let ident: Vec<usize> = (0..target.nvars()).collect();
    let mut basis = Vec::new();
    for p in out.iter().filter(|p| !p.uses_any(&l, 0..e)) {
        let q = engine::from_engine(p, &l, target, MonomialOrder::GrevLex, &inv)?;
        basis.push(engine::to_engine(&q, &tl, &ident));
    }
    GroebnerBasis::from_engine(target, MonomialOrder::GrevLex, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn setup(vars: &[&str]) -> Ring {
        RingContext::new(vars).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse(g, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn eliminate_parabola() {
        let r = setup(&["t", "x", "y"]);
        let i = ideal(&r, &["x-t", "y-t^2"]);
        let e = i.eliminate(&[0], &Budget::unlimited()).unwrap();
        assert_eq!(e.generators(), &[parse("x^2-y", &r).unwrap()]);
    }

    #[test]
    fn eliminate_inverse() {
        let r = setup(&["x", "u"]);
        let i = ideal(&r, &["u*x-1", "x^2-2"]);
        let e = i.eliminate(&[0], &Budget::unlimited()).unwrap();
        assert_eq!(e.generators(), &[parse("2*u^2-1", &r).unwrap()]);
    }

    #[test]
    fn saturation_examples() {
        let r = setup(&["x", "y"]);
        let b = Budget::unlimited();
        let s = ideal(&r, &["x*y"]).saturate(&ideal(&r, &["y"]), &b).unwrap();
        assert_eq!(s.generators(), &[parse("x", &r).unwrap()]);
        let s = ideal(&r, &["x^2", "x*y"]).saturate(&ideal(&r, &["x"]), &b).unwrap();
        assert!(s.is_unit(&b).unwrap());
        let i = ideal(&r, &["x^2+y^3"]);
        assert!(i.saturate(&ideal(&r, &["1"]), &b).unwrap().equals(&i, &b).unwrap());
        assert!(i.saturate(&Ideal::zero(&r), &b).is_err());
    }

    #[test]
    fn saturation_many_generators() {
        let r = setup(&["x", "y", "z"]);
        let b = Budget::unlimited();
        // plane and a line inside the origin-free part
        let i = ideal(&r, &["x*z", "y*z"]);
        let j = ideal(&r, &["x", "y", "x+y", "x-y"]);
        let s = i.saturate(&j, &b).unwrap();
        assert!(s.equals(&ideal(&r, &["z"]), &b).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = setup(&["x", "y"]);
        let b = Budget::unlimited();
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"]), &b).unwrap();
        assert_eq!(i.generators(), &[parse("x*y", &r).unwrap()]);
        let j = ideal(&r, &["x^2-y"]);
        assert!(j.intersect(&Ideal::unit(&r), &b).unwrap().equals(&j, &b).unwrap());
    }

    #[test]
    fn dimension_degree_sextic() {
        let r = setup(&["x", "y", "z", "w"]);
        let b = Budget::unlimited();
        let i = Ideal::homogeneous(&r, vec![parse("x^2+y^2+z^2+w^2", &r).unwrap(), parse("x*y*z-w^3", &r).unwrap()]).unwrap();
        assert_eq!(i.dimension(&b).unwrap(), 1);
        assert_eq!(i.degree(&b).unwrap(), 6);
        assert_eq!(i.codim(&b).unwrap(), 2);
        let irr = Ideal::homogeneous(&r, ["x", "y", "z", "w"].iter().map(|g| parse(g, &r).unwrap()).collect()).unwrap();
        assert_eq!(irr.codim(&b).unwrap(), 4);
        assert_eq!(Ideal::unit(&r).dimension(&b).unwrap(), -1);
    }

    #[test]
    fn homogenize_and_back() {
        let r = setup(&["x", "y"]);
        let b = Budget::unlimited();
        let h = ideal(&r, &["y-x^2"]).homogenize("w", &b).unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.generators(), &[parse("x^2-y*w", h.ring()).unwrap()]);
        let back = h.dehomogenize(2).unwrap();
        assert_eq!(back.generators(), &[parse("x^2-y", &r).unwrap()]);
    }

    #[test]
    fn radical_membership_examples() {
        let r = setup(&["x", "y"]);
        let b = Budget::unlimited();
        assert!(ideal(&r, &["x^2"]).radical_contains(&parse("x", &r).unwrap(), &b).unwrap());
        assert!(!ideal(&r, &["x"]).radical_contains(&parse("y", &r).unwrap(), &b).unwrap());
        assert!(ideal(&r, &["x^2", "y^2", "x*y"]).radical_contains(&parse("x+y", &r).unwrap(), &b).unwrap());
    }

    #[test]
    fn jacobian_and_minors() {
        let r = setup(&["x", "y"]);
        let i = ideal(&r, &["x^2+y^2-1"]);
        let j = i.jacobian(&[0, 1]).unwrap();
        assert_eq!((j.rows(), j.cols()), (2, 1));
        assert_eq!(j.get(0, 0), &parse("2*x", &r).unwrap());
        let m = PolyMatrix::from_rows(&r, vec![
            vec![parse("x", &r).unwrap(), parse("0", &r).unwrap()],
            vec![parse("0", &r).unwrap(), parse("y", &r).unwrap()],
        ])
        .unwrap();
        let mi = minors(&m, 2).unwrap();
        assert_eq!(mi.generators(), &[parse("x*y", &r).unwrap()]);
    }
}
