//! Multivariate gcd over the rationals by recursive primitive PRS, and
//! squarefree parts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::RBig;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring};

fn to_univariate(p: &Polynomial, x: usize) -> Vec<Polynomial> {
    let d = p.degree_in(x) as usize;
    let mut buckets: Vec<Vec<(RBig, Vec<u16>)>> = vec![Vec::new(); d + 1];
    for (c, e) in p.terms() {
        let mut e = e.to_vec();
        let k = e[x] as usize;
        e[x] = 0;
        buckets[k].push((c.clone(), e));
    }
    buckets
        .into_iter()
        .map(|t| Polynomial::from_terms(p.ring(), p.order(), t).expect("same ring"))
        .collect()
}

fn from_univariate(ring: &Ring, coeffs: &[Polynomial], x: usize) -> Polynomial {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        for (a, e) in c.terms() {
            let mut e = e.to_vec();
            e[x] = k as u16;
            terms.push((a.clone(), e));
        }
    }
    Polynomial::from_terms(ring, Default::default(), terms).expect("same ring")
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().map(|p| p.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` in the main variable.
fn prem(a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lcb = &b[db];
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.checked_mul(lcb)?;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].checked_sub(&lcr.checked_mul(bc)?)?;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    Ok(r)
}

fn content_of(coeffs: &[Polynomial]) -> Result<Polynomial> {
    let mut g = Polynomial::zero(coeffs[0].ring());
    for c in coeffs {
        g = gcd(&g, c)?;
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    Ok(g)
}

fn primitive_part(coeffs: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let c = content_of(coeffs)?;
    coeffs.iter().map(|p| p.exact_divide(&c)).collect()
}

/// Greatest common divisor, canonically normalized (integer, content 1,
/// positive leading coefficient). `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.canonical());
    }
    if b.is_zero() {
        return Ok(a.canonical());
    }
    if **a.ring() != **b.ring() {
        return Err(Error::RingMismatch("gcd operands".into()));
    }
    let ring = a.ring().clone();
    let mut vars: Vec<usize> = a.variables_used();
    for v in b.variables_used() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.is_empty() {
        return Ok(Polynomial::one(&ring));
    }
    // a variable missing from one side cannot occur in the gcd
    let x = *vars
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .unwrap();
    let ua = to_univariate(a, x);
    let ub = to_univariate(b, x);
    let ca = content_of(&ua)?;
    let cb = content_of(&ub)?;
    let c = gcd(&ca, &cb)?;
    if ua.len() == 1 || ub.len() == 1 {
        return Ok(c.canonical());
    }
    let pa: Vec<Polynomial> = ua.iter().map(|p| p.exact_divide(&ca)).collect::<Result<_>>()?;
    let pb: Vec<Polynomial> = ub.iter().map(|p| p.exact_divide(&cb)).collect::<Result<_>>()?;
    let (mut r0, mut r1) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let g = loop {
        let r = prem(&r0, &r1)?;
        if r.is_empty() {
            break r1;
        }
        if r.len() == 1 {
            break vec![Polynomial::one(&ring)];
        }
        let r = primitive_part(&r)?;
        r0 = r1;
        r1 = r;
    };
    let g = from_univariate(&ring, &g, x);
    Ok(c.checked_mul(&g)?.canonical())
}

fn uni_trim(v: &mut Vec<RBig>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn uni_rem(a: &[RBig], b: &[RBig]) -> Vec<RBig> {
    let mut r = a.to_vec();
    uni_trim(&mut r);
    let db = b.len() - 1;
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let q = &r[dr] / &b[db];
        for (i, bc) in b.iter().enumerate() {
            r[i + dr - db] -= &q * bc;
        }
        r[dr] = RBig::ZERO;
        uni_trim(&mut r);
    }
    r
}

/// Degree of `gcd(p, p')` for a univariate rational polynomial.
fn uni_squarefree(p: &[RBig]) -> bool {
    let dp: Vec<RBig> = p.iter().enumerate().skip(1).map(|(k, c)| c * RBig::from(k)).collect();
    let (mut a, mut b) = (p.to_vec(), dp);
    uni_trim(&mut b);
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() <= 1
}

/// Specializes every variable except `x` at `point`.
fn specialize(p: &Polynomial, x: usize, point: &[RBig]) -> Vec<RBig> {
    let mut out = vec![RBig::ZERO; p.degree_in(x) as usize + 1];
    for (c, e) in p.terms() {
        let mut t = c.clone();
        for (v, &k) in e.iter().enumerate() {
            if v != x && k > 0 {
                t *= point[v].pow(k as usize);
            }
        }
        out[e[x] as usize] += t;
    }
    out
}

/// Certifies squarefreeness by univariate specializations that preserve
/// the degree in each variable. `false` means "not certified".
fn certified_squarefree(f: &Polynomial) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for x in f.variables_used() {
        let dx = f.degree_in(x) as usize;
        let mut ok = false;
        for _ in 0..6 {
            let point: Vec<RBig> = (0..f.nvars()).map(|_| RBig::from(rng.gen_range(-97i64..=97))).collect();
            let s = specialize(f, x, &point);
            if s.len() != dx + 1 || s[dx].is_zero() {
                continue;
            }
            ok = uni_squarefree(&s);
            break;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Product of the distinct irreducible factors of `f`, canonically
/// normalized; constants map to 1.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of zero".into()));
    }
    if f.is_constant() {
        return Ok(Polynomial::one(f.ring()).with_order(f.order()));
    }
    if certified_squarefree(f) {
        return Ok(f.canonical());
    }
    let mut g = f.clone();
    for x in f.variables_used() {
        g = gcd(&g, &f.derivative(x))?;
        if g.is_constant() {
            return Ok(f.canonical());
        }
    }
    Ok(f.exact_divide(&g)?.with_order(f.order()).canonical())
}

/// Same as [`squarefree_part`] but always through the gcd route.
pub fn squarefree_part_by_gcd(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of zero".into()));
    }
    let mut g = f.clone();
    for x in f.variables_used() {
        g = gcd(&g, &f.derivative(x))?;
    }
    if f.variables_used().is_empty() {
        return Ok(Polynomial::one(f.ring()));
    }
    Ok(f.exact_divide(&g)?.canonical())
}
