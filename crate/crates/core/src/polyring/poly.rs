use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::order::MonomialOrder;
use super::ring::Ring;
use crate::arith::{self, IBig, RBig, UBig};
use crate::error::{Error, Result};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are stored as a flat exponent array (stride = number of variables)
/// alongside a coefficient array, sorted strictly descending in `order`.
/// There are no zero coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    exps: Vec<u16>,
    coeffs: Vec<RBig>,
}

pub(crate) fn checked_mono_mul(a: &[u16], b: &[u16], out: &mut Vec<u16>) -> Result<()> {
    for (x, y) in a.iter().zip(b) {
        out.push(x.checked_add(*y).ok_or(Error::ExponentOverflow)?);
    }
    Ok(())
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), order: MonomialOrder::default(), exps: vec![], coeffs: vec![] }
    }

    pub fn constant(ring: &Ring, c: RBig) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            exps: vec![0; ring.nvars()],
            coeffs: vec![c],
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, RBig::ONE)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, RBig::from(c))
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[index] = 1;
        Polynomial { ring: ring.clone(), order: MonomialOrder::default(), exps: e, coeffs: vec![RBig::ONE] }
    }

    pub fn monomial(ring: &Ring, coeff: RBig, exps: &[u16]) -> Result<Self> {
        Self::from_terms(ring, MonomialOrder::default(), vec![(coeff, exps.to_vec())])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Ring, order: MonomialOrder, terms: Vec<(RBig, Vec<u16>)>) -> Result<Self> {
        let n = ring.nvars();
        if let Some((_, e)) = terms.iter().find(|(_, e)| e.len() != n) {
            return Err(Error::Structural(format!("exponent vector of length {} in ring with {n} variables", e.len())));
        }
        if let MonomialOrder::BlockElim { split } = order {
            if split > n {
                return Err(Error::Structural(format!("block split {split} exceeds {n} variables")));
            }
        }
        let mut terms = terms;
        terms.sort_by(|a, b| order.cmp_unchecked(&b.1, &a.1));
        let mut exps = Vec::with_capacity(terms.len() * n);
        let mut coeffs: Vec<RBig> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            if let Some(last) = coeffs.len().checked_sub(1) {
                if exps[last * n..] == e[..] {
                    coeffs[last] += c;
                    if coeffs[last].is_zero() {
                        coeffs.pop();
                        exps.truncate(last * n);
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                coeffs.push(c);
                exps.extend_from_slice(&e);
            }
        }
        Ok(Polynomial { ring: ring.clone(), order, exps, coeffs })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn nterms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn exponents(&self, i: usize) -> &[u16] {
        let n = self.nvars();
        &self.exps[i * n..(i + 1) * n]
    }

    pub fn coeff(&self, i: usize) -> &RBig {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[RBig] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RBig, &[u16])> + '_ {
        let n = self.nvars();
        self.coeffs.iter().enumerate().map(move |(i, c)| (c, &self.exps[i * n..(i + 1) * n]))
    }

    pub fn leading_monomial(&self) -> Option<&[u16]> {
        (!self.is_zero()).then(|| self.exponents(0))
    }

    pub fn leading_coeff(&self) -> Option<&RBig> {
        self.coeffs.first()
    }

    /// Coefficient of a given monomial (zero when absent).
    pub fn coefficient_of(&self, exps: &[u16]) -> RBig {
        self.terms().find(|(_, e)| *e == exps).map(|(c, _)| c.clone()).unwrap_or(RBig::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.terms().all(|(_, e)| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<RBig> {
        if self.is_zero() {
            Some(RBig::ZERO)
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms().map(|(_, e)| e.iter().map(|&x| x as u32).sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms().map(|(_, e)| e[var] as u32).max().unwrap_or(0)
    }

    /// Degree restricted to a subset of variables.
    pub fn degree_in_vars(&self, vars: &[usize]) -> Option<u32> {
        self.terms().map(|(_, e)| vars.iter().map(|&v| e[v] as u32).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let all: Vec<usize> = (0..self.nvars()).collect();
        self.is_homogeneous_in(&all)
    }

    /// Homogeneity with respect to the grading by the given variables only.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms().map(|(_, e)| vars.iter().map(|&v| e[v] as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms().any(|(_, e)| e[var] > 0)
    }

    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&v| self.uses_var(v)).collect()
    }

    /// Re-sorts the terms with respect to another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let terms = self.terms().map(|(c, e)| (c.clone(), e.to_vec())).collect();
        Self::from_terms(&self.ring, order, terms).expect("re-sorting preserves structure")
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let other = if other.order == self.order { std::borrow::Cow::Borrowed(other) } else { std::borrow::Cow::Owned(other.with_order(self.order)) };
        let n = self.nvars();
        let (mut i, mut j) = (0, 0);
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let mut coeffs = Vec::with_capacity(self.nterms() + other.nterms());
        while i < self.nterms() || j < other.nterms() {
            let ord = if i == self.nterms() {
                Ordering::Less
            } else if j == other.nterms() {
                Ordering::Greater
            } else {
                self.order.cmp_unchecked(self.exponents(i), other.exponents(j))
            };
            match ord {
                Ordering::Greater => {
                    exps.extend_from_slice(self.exponents(i));
                    coeffs.push(self.coeffs[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    exps.extend_from_slice(other.exponents(j));
                    coeffs.push(if negate { -&other.coeffs[j] } else { other.coeffs[j].clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &self.coeffs[i] - &other.coeffs[j] } else { &self.coeffs[i] + &other.coeffs[j] };
                    if !c.is_zero() {
                        exps.extend_from_slice(self.exponents(i));
                        coeffs.push(c);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        debug_assert_eq!(exps.len(), coeffs.len() * n);
        Polynomial { ring: self.ring.clone(), order: self.order, exps, coeffs }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring).with_order(self.order));
        }
        let mut terms = Vec::with_capacity(self.nterms() * other.nterms());
        for (c1, e1) in self.terms() {
            for (c2, e2) in other.terms() {
                let mut e = Vec::with_capacity(e1.len());
                checked_mono_mul(e1, e2, &mut e)?;
                terms.push((c1 * c2, e));
            }
        }
        Self::from_terms(&self.ring, self.order, terms)
    }

    /// Multiplies by `c * x^mono`.
    pub fn mul_term(&self, c: &RBig, mono: &[u16]) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring).with_order(self.order));
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (_, e) in self.terms() {
            checked_mono_mul(e, mono, &mut exps)?;
        }
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Ok(Polynomial { ring: self.ring.clone(), order: self.order, exps, coeffs })
    }

    pub fn scale(&self, c: &RBig) -> Polynomial {
        self.mul_term(c, &vec![0; self.nvars()]).expect("scaling cannot overflow")
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut result = Polynomial::one(&self.ring).with_order(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Returns `r` with `r * q = self`, or `Error::NotDivisible`.
    pub fn exact_divide(&self, q: &Polynomial) -> Result<Polynomial> {
        self.same_ring(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = q.with_order(self.order);
        let n = self.nvars();
        let lq = q.exponents(0).to_vec();
        let lcq = q.coeffs[0].clone();
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while !rem.is_zero() {
            let lr = rem.exponents(0);
            if lr.iter().zip(&lq).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible);
            }
            let m: Vec<u16> = lr.iter().zip(&lq).map(|(a, b)| a - b).collect();
            let c = &rem.coeffs[0] / &lcq;
            rem = rem.merge(&q.mul_term(&c, &m)?, true);
            quot_terms.push((c, m));
        }
        debug_assert!(quot_terms.iter().all(|(_, m)| m.len() == n));
        Self::from_terms(&self.ring, self.order, quot_terms)
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms()
            .filter(|(_, e)| e[var] > 0)
            .map(|(c, e)| {
                let mut e = e.to_vec();
                let k = e[var];
                e[var] -= 1;
                (c * RBig::from(k), e)
            })
            .collect();
        Self::from_terms(&self.ring, self.order, terms).expect("derivative preserves structure")
    }

    /// Substitutes `value` for the variable `var`.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Result<Polynomial> {
        self.same_ring(value)?;
        let maxdeg = self.degree_in(var);
        let mut powers = vec![Polynomial::one(&self.ring).with_order(self.order)];
        for k in 1..=maxdeg as usize {
            let next = powers[k - 1].checked_mul(value)?;
            powers.push(next);
        }
        let mut acc = Polynomial::zero(&self.ring).with_order(self.order);
        for (c, e) in self.terms() {
            let mut m = e.to_vec();
            let k = m[var] as usize;
            m[var] = 0;
            acc = acc.merge(&powers[k].mul_term(c, &m)?, false);
        }
        Ok(acc)
    }

    /// Evaluates every variable at a rational point.
    pub fn evaluate(&self, point: &[RBig]) -> Result<RBig> {
        if point.len() != self.nvars() {
            return Err(Error::Structural("evaluation point has wrong length".into()));
        }
        let mut acc = RBig::ZERO;
        for (c, e) in self.terms() {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= x.pow(k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn map_into(&self, target: &Ring, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.nvars() || map.iter().any(|&m| m >= target.nvars()) {
            return Err(Error::Structural("variable map does not fit the target ring".into()));
        }
        let m = target.nvars();
        let terms = self
            .terms()
            .map(|(c, e)| {
                let mut out = vec![0u16; m];
                for (i, &k) in e.iter().enumerate() {
                    out[map[i]] = out[map[i]].checked_add(k).ok_or(Error::ExponentOverflow)?;
                }
                Ok((c.clone(), out))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(target, self.order_for(target), terms)
    }

    fn order_for(&self, target: &Ring) -> MonomialOrder {
        match self.order {
            MonomialOrder::BlockElim { split } if split > target.nvars() => MonomialOrder::GrevLex,
            o => o,
        }
    }

    /// Moves the polynomial into a ring that has (at least) all variables it
    /// uses, matching variables by name.
    pub fn rename_into(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<usize> = (0..self.nvars())
            .map(|i| {
                let name = self.ring.var_name(i);
                match target.index_of(name) {
                    Some(j) => Ok(j),
                    None if !self.uses_var(i) => Ok(0),
                    None => Err(Error::RingMismatch(format!("variable '{name}' missing from {target}"))),
                }
            })
            .collect::<Result<_>>()?;
        if target.nvars() == 0 {
            return match self.constant_value() {
                Some(c) => Ok(Polynomial::constant(target, c)),
                None => Err(Error::RingMismatch("nonconstant polynomial into empty ring".into())),
            };
        }
        self.map_into(target, &map)
    }

    /// Integer coefficients with content 1 (sign untouched), together with
    /// the rational factor `f` such that `self = f * result`.
    pub fn primitive_integer_coeffs(&self) -> (Vec<IBig>, RBig) {
        if self.is_zero() {
            return (vec![], RBig::ONE);
        }
        let mut den = UBig::ONE;
        for c in &self.coeffs {
            den = arith::lcm_u(&den, c.denominator());
        }
        let den_i = IBig::from(den.clone());
        let ints: Vec<IBig> = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&den_i / IBig::from(c.denominator().clone())))
            .collect();
        let mut g = IBig::ZERO;
        for c in &ints {
            g = arith::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        let ints: Vec<IBig> = ints.into_iter().map(|c| c / &g).collect();
        (ints, RBig::from_parts(g, den))
    }

    /// Canonical representative of the line `Q * self`: integer
    /// coefficients, content 1 and positive leading coefficient.
    pub fn canonical(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (mut ints, _) = self.primitive_integer_coeffs();
        if arith::is_negative(&ints[0]) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            exps: self.exps.clone(),
            coeffs: ints.into_iter().map(RBig::from).collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&(RBig::ONE / c)),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_int())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if *self.ring != *other.ring || self.nterms() != other.nterms() {
            return false;
        }
        if self.order == other.order {
            self.exps == other.exps && self.coeffs == other.coeffs
        } else {
            let o = other.with_order(self.order);
            self.exps == o.exps && self.coeffs == o.coeffs
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings.
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            exps: self.exps.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
