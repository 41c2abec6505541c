//! Buchberger engine on primitive integer polynomials.
//!
//! Monomials are stored with leading weight slots so that the hot
//! comparison never recomputes degrees: GrevLex carries the total degree,
//! BlockElim carries the degrees of both blocks, Lex carries nothing.

use std::cmp::Ordering;

use crate::arith::{self, IBig, RBig};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Layout {
    pub nvars: usize,
    pub order: MonomialOrder,
    pub nw: usize,
    pub stride: usize,
    /// Positive variable weights for the degree slots; `None` means all 1.
    pub weights: Option<Vec<u16>>,
}

impl Layout {
    pub fn new(nvars: usize, order: MonomialOrder) -> Self {
        let nw = match order {
            MonomialOrder::Lex => 0,
            MonomialOrder::GrevLex => 1,
            MonomialOrder::BlockElim { .. } => 2,
        };
        Layout { nvars, order, nw, stride: nw + nvars, weights: None }
    }

    pub fn weighted(nvars: usize, order: MonomialOrder, weights: Vec<u16>) -> Self {
        assert_eq!(weights.len(), nvars);
        assert!(weights.iter().all(|&w| w > 0));
        let mut l = Self::new(nvars, order);
        if weights.iter().any(|&w| w != 1) {
            l.weights = Some(weights);
        }
        l
    }

    #[inline]
    fn wsum(&self, e: &[u16], offset: usize) -> u16 {
        match &self.weights {
            None => e.iter().sum(),
            Some(w) => e.iter().zip(&w[offset..]).map(|(a, b)| a * b).sum(),
        }
    }

    #[inline]
    pub fn exps<'a>(&self, m: &'a [u16]) -> &'a [u16] {
        &m[self.nw..]
    }

    pub fn set_weights(&self, m: &mut [u16]) {
        match self.order {
            MonomialOrder::Lex => {}
            MonomialOrder::GrevLex => {
                m[0] = self.wsum(&m[1..], 0);
            }
            MonomialOrder::BlockElim { split } => {
                m[0] = self.wsum(&m[2..2 + split], 0);
                m[1] = self.wsum(&m[2 + split..], split);
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self.order {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => a[0].cmp(&b[0]).then_with(|| revscan(&a[1..], &b[1..])),
            MonomialOrder::BlockElim { split } => {
                let s = 2 + split;
                a[0].cmp(&b[0])
                    .then_with(|| revscan(&a[2..s], &b[2..s]))
                    .then_with(|| a[1].cmp(&b[1]))
                    .then_with(|| revscan(&a[s..], &b[s..]))
            }
        }
    }

    /// Does `a` divide `b`?
    #[inline]
    pub fn divides(&self, a: &[u16], b: &[u16]) -> bool {
        a[self.nw..].iter().zip(&b[self.nw..]).all(|(x, y)| x <= y)
    }

    #[inline]
    pub fn mul_into(&self, a: &[u16], b: &[u16], out: &mut Vec<u16>) {
        out.extend(a.iter().zip(b).map(|(x, y)| x.checked_add(*y).expect("exponent overflow")));
    }

    /// `b / a`, assuming `a | b`.
    pub fn quotient(&self, b: &[u16], a: &[u16]) -> Vec<u16> {
        b.iter().zip(a).map(|(x, y)| x - y).collect()
    }

    pub fn lcm(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        let mut m: Vec<u16> = a.iter().zip(b).map(|(x, y)| *x.max(y)).collect();
        self.set_weights(&mut m);
        m
    }

    pub fn coprime(&self, a: &[u16], b: &[u16]) -> bool {
        a[self.nw..].iter().zip(&b[self.nw..]).all(|(x, y)| *x == 0 || *y == 0)
    }

    /// Weighted degree.
    pub fn degree(&self, m: &[u16]) -> u32 {
        match &self.weights {
            None => m[self.nw..].iter().map(|&e| e as u32).sum(),
            Some(w) => m[self.nw..].iter().zip(w).map(|(&e, &k)| e as u32 * k as u32).sum(),
        }
    }

    pub fn sev(&self, m: &[u16]) -> u64 {
        let mut s = 0u64;
        for (i, &e) in m[self.nw..].iter().enumerate() {
            if e > 0 {
                s |= 1 << (i % 64);
            }
        }
        s
    }
}

#[inline]
fn revscan(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Integer polynomial in engine layout, terms sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct EPoly {
    pub mons: Vec<u16>,
    pub coeffs: Vec<IBig>,
}

impl EPoly {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn mon<'a>(&'a self, l: &Layout, i: usize) -> &'a [u16] {
        &self.mons[i * l.stride..(i + 1) * l.stride]
    }

    pub fn lm<'a>(&'a self, l: &Layout) -> &'a [u16] {
        self.mon(l, 0)
    }

    pub fn degree(&self, l: &Layout) -> u32 {
        (0..self.len()).map(|i| l.degree(self.mon(l, i))).max().unwrap_or(0)
    }

    pub fn content(&self) -> IBig {
        let mut g = IBig::ZERO;
        for c in &self.coeffs {
            g = arith::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn normalize(&mut self) {
        if self.is_empty() {
            return;
        }
        let mut g = self.content();
        if arith::is_negative(&self.coeffs[0]) {
            g = -g;
        }
        if !g.is_one() {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn uses_any(&self, l: &Layout, vars: std::ops::Range<usize>) -> bool {
        (0..self.len()).any(|i| {
            let e = l.exps(self.mon(l, i));
            vars.clone().any(|v| e[v] > 0)
        })
    }

    pub fn is_constant(&self, l: &Layout) -> bool {
        self.len() == 1 && l.exps(self.mon(l, 0)).iter().all(|&e| e == 0)
    }

    /// Builds a polynomial from unsorted terms (no duplicates, no zeros assumed
    /// absent: duplicates are merged, zeros dropped).
    pub fn from_terms(l: &Layout, mut terms: Vec<(IBig, Vec<u16>)>) -> Self {
        terms.sort_by(|a, b| l.cmp(&b.1, &a.1));
        let mut out = EPoly::default();
        for (c, m) in terms {
            if let Some(last) = out.coeffs.len().checked_sub(1) {
                if out.mons[last * l.stride..] == m[..] {
                    out.coeffs[last] += c;
                    if out.coeffs[last].is_zero() {
                        out.coeffs.pop();
                        out.mons.truncate(last * l.stride);
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.coeffs.push(c);
                out.mons.extend_from_slice(&m);
            }
        }
        out
    }
}

/// Converts a rational polynomial into the engine layout, sending variable
/// `i` to engine variable `map[i]`. The result is primitive.
pub(crate) fn to_engine(p: &Polynomial, l: &Layout, map: &[usize]) -> EPoly {
    let (ints, _) = p.primitive_integer_coeffs();
    let terms = p
        .terms()
        .zip(ints)
        .map(|((_, e), c)| {
            let mut m = vec![0u16; l.stride];
            for (i, &k) in e.iter().enumerate() {
                m[l.nw + map[i]] += k;
            }
            l.set_weights(&mut m);
            (c, m)
        })
        .collect();
    EPoly::from_terms(l, terms)
}

/// Converts back; engine variable `v` goes to ring variable `inv[v]`
/// (`None` = variable must not occur).
pub(crate) fn from_engine(f: &EPoly, l: &Layout, ring: &Ring, order: MonomialOrder, inv: &[Option<usize>]) -> Result<Polynomial> {
    let n = ring.nvars();
    let mut terms = Vec::with_capacity(f.len());
    for i in 0..f.len() {
        let e = l.exps(f.mon(l, i));
        let mut out = vec![0u16; n];
        for (v, &k) in e.iter().enumerate() {
            if k > 0 {
                match inv[v] {
                    Some(j) => out[j] = k,
                    None => return Err(Error::Structural("engine variable without a ring counterpart".into())),
                }
            }
        }
        terms.push((RBig::from(f.coeffs[i].clone()), out));
    }
    Polynomial::from_terms(ring, order, terms)
}

/// `a*f[fi..] - b*m*g[1..]`, the workhorse of fraction-free reduction.
/// Consumes `f` so its coefficients move instead of being copied.
fn combine(l: &Layout, f: EPoly, fi: usize, a: &IBig, b: &IBig, m: &[u16], g: &EPoly) -> EPoly {
    let flen = f.len() - fi;
    let glen = g.len() - 1;
    let EPoly { mons: fmons, coeffs: fcoeffs } = f;
    let mut out = EPoly { mons: Vec::with_capacity((flen + glen) * l.stride), coeffs: Vec::with_capacity(flen + glen) };
    let mut scratch = Vec::with_capacity(l.stride);
    let a_one = a.is_one();
    let mut fc = fcoeffs.into_iter().skip(fi).peekable();
    let mut i = fi;
    let flen_total = fi + flen;
    let fmon = |i: usize| &fmons[i * l.stride..(i + 1) * l.stride];
    let mut j = 1;
    let mut gm_valid = false;
    while i < flen_total || j < g.len() {
        if j < g.len() && !gm_valid {
            scratch.clear();
            l.mul_into(m, g.mon(l, j), &mut scratch);
            gm_valid = true;
        }
        let ord = if i == flen_total {
            Ordering::Less
        } else if j == g.len() {
            Ordering::Greater
        } else {
            l.cmp(fmon(i), &scratch)
        };
        match ord {
            Ordering::Greater => {
                out.mons.extend_from_slice(fmon(i));
                let mut c = fc.next().unwrap();
                if !a_one {
                    c *= a;
                }
                out.coeffs.push(c);
                i += 1;
            }
            Ordering::Less => {
                out.mons.extend_from_slice(&scratch);
                out.coeffs.push(-(b * &g.coeffs[j]));
                j += 1;
                gm_valid = false;
            }
            Ordering::Equal => {
                let mut c = fc.next().unwrap();
                if !a_one {
                    c *= a;
                }
                c -= b * &g.coeffs[j];
                if !c.is_zero() {
                    out.mons.extend_from_slice(&scratch);
                    out.coeffs.push(c);
                }
                i += 1;
                j += 1;
                gm_valid = false;
            }
        }
    }
    out
}

/// Basis element during the Buchberger loop.
#[derive(Debug, Clone)]
pub(crate) struct Elem {
    pub poly: EPoly,
    pub lm: Vec<u16>,
    pub sev: u64,
    pub sugar: u32,
}

impl Elem {
    pub fn new(l: &Layout, poly: EPoly, sugar: u32) -> Self {
        let lm = poly.lm(l).to_vec();
        let sev = l.sev(&lm);
        Elem { poly, lm, sev, sugar }
    }
}

/// Reducer lookup over a set of basis elements.
pub(crate) struct Reducers<'a> {
    pub elems: &'a [Elem],
    pub active: &'a [usize],
}

impl Reducers<'_> {
    fn find(&self, l: &Layout, m: &[u16], skip: Option<usize>) -> Option<usize> {
        let sev = l.sev(m);
        let mut best: Option<usize> = None;
        for &k in self.active {
            if Some(k) == skip {
                continue;
            }
            let e = &self.elems[k];
            if e.sev & !sev != 0 || !l.divides(&e.lm, m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].poly.len() <= e.poly.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }
}

pub(crate) struct ReduceOutcome {
    pub poly: EPoly,
    pub sugar: u32,
    /// `poly = multiplier * (input - ideal element)`.
    pub multiplier: RBig,
}

const CONTENT_EVERY: usize = 12;

/// Reduces `f`. With `full`, every term is reduced; otherwise only until
/// the leading term is irreducible.
pub(crate) fn reduce(
    l: &Layout,
    f: EPoly,
    sugar: u32,
    red: &Reducers<'_>,
    skip: Option<usize>,
    full: bool,
    budget: &Budget,
) -> Result<ReduceOutcome> {
    let mut f = f;
    let mut fi = 0usize;
    let mut sugar = sugar;
    let mut done = EPoly::default();
    let mut multiplier = RBig::ONE;
    let mut steps = 0usize;
    while fi < f.len() {
        let lt = f.mon(l, fi);
        match red.find(l, lt, skip) {
            None => {
                if !full {
                    break;
                }
                done.mons.extend_from_slice(lt);
                done.coeffs.push(f.coeffs[fi].clone());
                fi += 1;
            }
            Some(k) => {
                let g = &red.elems[k];
                let m = l.quotient(lt, &g.lm);
                sugar = sugar.max(g.sugar + l.degree(&m));
                let cf = &f.coeffs[fi];
                let cg = &g.poly.coeffs[0];
                let d = arith::gcd(cf, cg);
                let mut a = cg / &d;
                let mut b = cf / &d;
                if arith::is_negative(&a) {
                    a = -a;
                    b = -b;
                }
                f = combine(l, f, fi + 1, &a, &b, &m, &g.poly);
                fi = 0;
                if !a.is_one() {
                    for c in done.coeffs.iter_mut() {
                        *c *= &a;
                    }
                    multiplier *= RBig::from(a);
                }
                steps += 1;
                budget.charge(1)?;
                if steps % CONTENT_EVERY == 0 {
                    let mut g = f.content();
                    for c in &done.coeffs {
                        if g.is_one() {
                            break;
                        }
                        g = arith::gcd(&g, c);
                    }
                    if !g.is_one() && !g.is_zero() {
                        for c in f.coeffs.iter_mut().chain(done.coeffs.iter_mut()) {
                            *c = &*c / &g;
                        }
                        multiplier /= RBig::from(g);
                    }
                }
            }
        }
    }
    if fi > 0 || !done.is_empty() {
        // remaining terms of f are appended as-is (top reduction stops early)
        done.mons.extend_from_slice(&f.mons[fi * l.stride..]);
        done.coeffs.extend_from_slice(&f.coeffs[fi..]);
        f = done;
    }
    Ok(ReduceOutcome { poly: f, sugar, multiplier })
}

#[derive(Debug, Clone)]
struct Pair {
    /// `None` for an input generator waiting to be inserted.
    i: Option<usize>,
    j: usize,
    lcm: Vec<u16>,
    sugar: u32,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct EngineOptions {
    pub criteria: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { criteria: true }
    }
}

/// Computes the reduced Gröbner basis of the given primitive polynomials.
/// Output elements are primitive with positive leading coefficient, sorted
/// ascending by leading monomial.
pub(crate) fn groebner(l: &Layout, input: Vec<EPoly>, opts: EngineOptions, budget: &Budget) -> Result<Vec<EPoly>> {
    let input: Vec<EPoly> = input.into_iter().filter(|p| !p.is_empty()).collect();
    if input.is_empty() {
        return Ok(vec![]);
    }
    let mut elems: Vec<Elem> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let gens: Vec<(EPoly, u32)> = input.into_iter().map(|p| {
        let d = p.degree(l);
        (p, d)
    }).collect();
    for (j, (p, d)) in gens.iter().enumerate() {
        pairs.push(Pair { i: None, j, lcm: p.lm(l).to_vec(), sugar: *d });
    }
    let mut gens: Vec<Option<(EPoly, u32)>> = gens.into_iter().map(Some).collect();

    let mut processed = 0usize;
    while let Some(idx) = select(l, &pairs) {
        let pair = pairs.swap_remove(idx);
        budget.check()?;
        processed += 1;
        if processed % 500 == 0 {
            log::trace!("{processed} pairs done, {} queued, {} in basis, sugar {}", pairs.len(), active.len(), pair.sugar);
        }
        let (spoly, sugar) = match pair.i {
            None => gens[pair.j].take().expect("generator used once"),
            Some(i) => (spoly(l, &elems[i], &elems[pair.j], &pair.lcm), pair.sugar),
        };
        if spoly.is_empty() {
            continue;
        }
        let red = Reducers { elems: &elems, active: &active };
        let out = reduce(l, spoly, sugar, &red, None, false, budget)?;
        let mut h = out.poly;
        if h.is_empty() {
            continue;
        }
        h.normalize();
        if h.is_constant(l) {
            return Ok(vec![h]);
        }
        if log::log_enabled!(log::Level::Trace) {
            let bits = h.coeffs.iter().map(|c| crate::arith::abs(c).to_string().len()).max().unwrap_or(0);
            log::trace!("pair {processed}: sugar {} new element with {} terms, {} coefficient digits, deg {}", out.sugar, h.len(), bits, l.degree(h.lm(l)));
        }
        let hidx = elems.len();
        elems.push(Elem::new(l, h, out.sugar));
        if opts.criteria {
            update(l, &elems, &mut active, &mut pairs, hidx);
        } else {
            for &k in &active {
                let lcm = l.lcm(&elems[k].lm, &elems[hidx].lm);
                let sugar = pair_sugar(l, &elems[k], &elems[hidx], &lcm);
                pairs.push(Pair { i: Some(k), j: hidx, lcm, sugar });
            }
            active.push(hidx);
        }
    }
    Ok(interreduce(l, &elems, &active, budget)?)
}

fn pair_sugar(l: &Layout, a: &Elem, b: &Elem, lcm: &[u16]) -> u32 {
    let d = l.degree(lcm);
    (a.sugar + d - l.degree(&a.lm)).max(b.sugar + d - l.degree(&b.lm))
}

fn select(l: &Layout, pairs: &[Pair]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let ord = p
                    .sugar
                    .cmp(&q.sugar)
                    .then_with(|| l.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i.map(|x| x + 1).unwrap_or(0), p.j).cmp(&(q.i.map(|x| x + 1).unwrap_or(0), q.j)));
                if ord == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

fn spoly(l: &Layout, a: &Elem, b: &Elem, lcm: &[u16]) -> EPoly {
    let ma = l.quotient(lcm, &a.lm);
    let mb = l.quotient(lcm, &b.lm);
    let ca = &a.poly.coeffs[0];
    let cb = &b.poly.coeffs[0];
    let d = arith::gcd(ca, cb);
    let fa = cb / &d;
    let fb = ca / &d;
    // fa*ma*a - fb*mb*b, both leading terms cancel
    let ashift = shift(l, &a.poly, &ma);
    combine(l, ashift, 1, &fa, &fb, &mb, &b.poly)
}

fn shift(l: &Layout, p: &EPoly, m: &[u16]) -> EPoly {
    let mut mons = Vec::with_capacity(p.mons.len());
    for i in 0..p.len() {
        l.mul_into(p.mon(l, i), m, &mut mons);
    }
    EPoly { mons, coeffs: p.coeffs.clone() }
}

/// Gebauer–Möller installation of the product and chain criteria.
fn update(l: &Layout, elems: &[Elem], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let hl = &elems[h].lm;
    let cand: Vec<(usize, Vec<u16>, bool)> = active
        .iter()
        .map(|&g| {
            let lcm = l.lcm(&elems[g].lm, hl);
            let coprime = l.coprime(&elems[g].lm, hl);
            (g, lcm, coprime)
        })
        .collect();
    // chain criterion among new pairs
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if cand[a].2 {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if l.divides(&cand[b].1, &cand[a].1) {
                let equal = cand[b].1 == cand[a].1;
                // proper divisor kills a; among equal lcms keep the coprime one, else the first
                if !equal || cand[b].2 || b < a {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    // old pairs: drop those whose lcm is strictly reducible through h
    pairs.retain(|p| {
        let Some(i) = p.i else { return true };
        if !l.divides(hl, &p.lcm) {
            return true;
        }
        let li = l.lcm(&elems[i].lm, hl);
        let lj = l.lcm(&elems[p.j].lm, hl);
        li == p.lcm || lj == p.lcm
    });
    for (k, (g, lcm, coprime)) in cand.into_iter().enumerate() {
        if keep[k] && !coprime {
            let sugar = pair_sugar(l, &elems[g], &elems[h], &lcm);
            pairs.push(Pair { i: Some(g), j: h, lcm, sugar });
        }
    }
    active.retain(|&g| !l.divides(hl, &elems[g].lm));
    active.push(h);
}

fn interreduce(l: &Layout, elems: &[Elem], active: &[usize], budget: &Budget) -> Result<Vec<EPoly>> {
    let mut minimal: Vec<usize> = Vec::new();
    for &a in active {
        let redundant = active.iter().any(|&b| {
            b != a && l.divides(&elems[b].lm, &elems[a].lm) && (elems[b].lm != elems[a].lm || b < a)
        });
        if !redundant {
            minimal.push(a);
        }
    }
    minimal.sort_by(|&a, &b| l.cmp(&elems[a].lm, &elems[b].lm));
    let red = Reducers { elems, active: &minimal };
    let mut out = Vec::with_capacity(minimal.len());
    for &k in &minimal {
        let e = &elems[k];
        let r = reduce(l, e.poly.clone(), e.sugar, &red, Some(k), true, budget)?;
        let mut p = r.poly;
        p.normalize();
        out.push(p);
    }
    Ok(out)
}

/// Full reduction of `f` against a reduced basis; returns the remainder and
/// the rational multiplier relating it to the exact normal form.
pub(crate) fn normal_form(l: &Layout, f: EPoly, basis: &[EPoly], budget: &Budget) -> Result<(EPoly, RBig)> {
    let elems: Vec<Elem> = basis.iter().map(|g| Elem::new(l, g.clone(), 0)).collect();
    let active: Vec<usize> = (0..elems.len()).collect();
    let red = Reducers { elems: &elems, active: &active };
    let out = reduce(l, f, 0, &red, None, true, budget)?;
    Ok((out.poly, out.multiplier))
}
