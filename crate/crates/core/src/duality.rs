//! Conormal varieties and projective duals.

use std::sync::OnceLock;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::idealops::{minors, squarefree_part, Ideal};
use crate::polyring::{Polynomial, Ring, RingContext};

/// A projective variety given by a homogeneous ideal in `x0..xn`.
///
/// `chart` optionally names the homogenizing variable when the variety is
/// the closure of an affine one; singular loci are then computed away from
/// the hyperplane at infinity.
#[derive(Debug, Clone)]
pub struct ProjectiveVariety {
    ideal: Ideal,
    chart: Option<usize>,
    invariants: OnceLock<(i64, u64)>,
}

impl ProjectiveVariety {
    pub fn new(ideal: Ideal) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::InvalidArgument("projective variety needs a homogeneous ideal".into()));
        }
        if ideal.ring().nvars() == 0 {
            return Err(Error::InvalidArgument("empty ambient space".into()));
        }
        Ok(ProjectiveVariety { ideal, chart: None, invariants: OnceLock::new() })
    }

    pub fn from_generators(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        Self::new(Ideal::homogeneous(ring, gens)?)
    }

    /// Projective closure of an affine variety, homogenized with `x0`.
    pub fn closure(affine: &Ideal, x0: &str, budget: &Budget) -> Result<Self> {
        let h = affine.homogenize(x0, budget)?;
        let w = h.ring().index_of(x0).unwrap();
        Ok(Self::new(h)?.with_chart(w))
    }

    pub fn with_chart(mut self, var: usize) -> Self {
        self.chart = Some(var);
        self
    }

    pub fn chart(&self) -> Option<usize> {
        self.chart
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    /// Dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.ring().nvars() - 1
    }

    fn invariants(&self, budget: &Budget) -> Result<(i64, u64)> {
        if let Some(v) = self.invariants.get() {
            return Ok(*v);
        }
        let v = (self.ideal.dimension(budget)?, self.ideal.degree(budget)?);
        Ok(*self.invariants.get_or_init(|| v))
    }

    pub fn dim(&self, budget: &Budget) -> Result<i64> {
        Ok(self.invariants(budget)?.0)
    }

    pub fn degree(&self, budget: &Budget) -> Result<u64> {
        Ok(self.invariants(budget)?.1)
    }

    pub fn codim(&self, budget: &Budget) -> Result<i64> {
        Ok(self.ambient_dim() as i64 - self.dim(budget)?)
    }

    fn check_proper(&self, budget: &Budget) -> Result<usize> {
        let d = self.dim(budget)?;
        if d < 0 {
            return Err(Error::InvalidArgument("the variety is empty".into()));
        }
        let e = self.ambient_dim() as i64 - d;
        if e == 0 {
            return Err(Error::InvalidArgument("the variety is the whole space".into()));
        }
        Ok(e as usize)
    }
}

/// Names for the dual coordinates: upper-cased primal names when that
/// gives fresh distinct names, otherwise `u0..un`.
pub fn dual_names(primal: &Ring) -> Vec<String> {
    let upper: Vec<String> = primal.vars().iter().map(|v| v.to_uppercase()).collect();
    let mut seen = std::collections::BTreeSet::new();
    let ok = upper.iter().all(|u| primal.index_of(u).is_none() && seen.insert(u.clone()));
    if ok {
        return upper;
    }
    let fresh: Vec<String> = (0..primal.nvars()).map(|i| format!("u{i}")).collect();
    if fresh.iter().all(|u| primal.index_of(u).is_none()) {
        return fresh;
    }
    (0..primal.nvars()).map(|i| format!("u_{i}")).collect()
}

/// The ideal of the conormal variety in `x0..xn, u0..un`.
#[derive(Debug, Clone)]
pub struct ConormalIdeal {
    pub ideal: Ideal,
    /// The ring `Q[x, u]` with blocks `primal` and `dual`.
    pub ring: Ring,
    /// The dual ring `Q[u]` alone.
    pub dual_ring: Ring,
}

impl ConormalIdeal {
    pub fn primal_vars(&self) -> std::ops::Range<usize> {
        self.ring.block("primal").unwrap().range()
    }

    pub fn dual_vars(&self) -> std::ops::Range<usize> {
        self.ring.block("dual").unwrap().range()
    }
}

/// Projective dual together with the variety it came from.
#[derive(Debug, Clone)]
pub struct DualVariety {
    pub ideal: Ideal,
    pub source: Ring,
    /// Pieces of higher codimension kept apart from a hypersurface `ideal`
    /// (only filled when dualizing a union piece by piece).
    pub extra: Vec<Ideal>,
}

impl DualVariety {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    /// The defining polynomial when the dual is a hypersurface given by a
    /// principal ideal.
    pub fn hypersurface(&self) -> Option<&Polynomial> {
        match self.ideal.generators() {
            [g] if !g.is_constant() => Some(g),
            _ => None,
        }
    }

    pub fn as_variety(&self) -> Result<ProjectiveVariety> {
        ProjectiveVariety::new(self.ideal.clone())
    }
}

pub(crate) fn doubled_ring(primal: &Ring, dual: &[String]) -> Result<Ring> {
    RingContext::with_blocks(vec![("primal".into(), primal.vars().to_vec()), ("dual".into(), dual.to_vec())])
}

/// Conormal ideal with dual coordinates named `dual`.
pub fn conormal_named(v: &ProjectiveVariety, dual: &[String], budget: &Budget) -> Result<ConormalIdeal> {
    let (c, sing) = conormal_unsaturated(v, dual, budget)?;
    let ideal = if sing.is_zero() { c.ideal } else { c.ideal.saturate(&sing, budget)? };
    Ok(ConormalIdeal { ideal, ..c })
}

/// Tangency conditions before removing the singular points, together with
/// the ideal of Jacobian minors that cuts those out.
pub(crate) fn conormal_unsaturated(v: &ProjectiveVariety, dual: &[String], budget: &Budget) -> Result<(ConormalIdeal, Ideal)> {
    let e = v.check_proper(budget)?;
    let n1 = v.ring().nvars();
    if dual.len() != n1 {
        return Err(Error::InvalidArgument("wrong number of dual names".into()));
    }
    let ring = doubled_ring(v.ring(), dual)?;
    let dual_ring = RingContext::new(dual)?;
    let gens = v.ideal().generators().iter().map(|g| g.rename_into(&ring)).collect::<Result<Vec<_>>>()?;
    let base = Ideal::homogeneous(&ring, gens.clone())?;
    let xs: Vec<usize> = (0..n1).collect();
    let jac = crate::idealops::jacobian(&ring, &gens, &xs)?;
    let u: Vec<Polynomial> = (n1..2 * n1).map(|i| Polynomial::var(&ring, i)).collect();
    let mut pairing = Polynomial::zero(&ring);
    for i in 0..n1 {
        pairing = pairing.checked_add(&Polynomial::var(&ring, i).checked_mul(&u[i])?)?;
    }
    let tangency = jac.augment(&u)?.minors(e + 1)?;
    let mut extra = tangency;
    extra.push(pairing);
    let big = base.extend(&extra)?;
    let sing = minors(&jac, e)?;
    Ok((ConormalIdeal { ideal: big, ring, dual_ring }, sing))
}

pub fn conormal(v: &ProjectiveVariety, budget: &Budget) -> Result<ConormalIdeal> {
    conormal_named(v, &dual_names(v.ring()), budget)
}

/// Dual variety with dual coordinates named `dual`.
pub fn dual_named(v: &ProjectiveVariety, dual: &[String], budget: &Budget) -> Result<DualVariety> {
    let c = conormal_named(v, dual, budget)?;
    let ideal = c.ideal.eliminate_into(&c.dual_ring, budget)?;
    Ok(DualVariety { ideal: normalize_principal(ideal)?, source: v.ring().clone(), extra: vec![] })
}

pub fn dual(v: &ProjectiveVariety, budget: &Budget) -> Result<DualVariety> {
    dual_named(v, &dual_names(v.ring()), budget)
}

/// Principal ideals are replaced by the squarefree part of the generator.
pub(crate) fn normalize_principal(ideal: Ideal) -> Result<Ideal> {
    match ideal.generators() {
        [g] if !g.is_constant() => {
            let s = squarefree_part(g)?;
            let out = Ideal::new(ideal.ring(), vec![s])?;
            if ideal.is_homogeneous() {
                out.into_projective()
            } else {
                Ok(out)
            }
        }
        _ => Ok(ideal),
    }
}

/// `(X^*)^* = X` up to radical.
pub fn check_biduality(v: &ProjectiveVariety, budget: &Budget) -> Result<bool> {
    let d = dual(v, budget)?;
    let dv = d.as_variety()?;
    let dd = dual_named(&dv, v.ring().vars(), budget)?;
    let back = dd.ideal.rename_into(v.ring())?;
    back.radical_equal(v.ideal(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn variety(vars: &[&str], gens: &[&str]) -> ProjectiveVariety {
        let r = RingContext::new(vars).unwrap();
        ProjectiveVariety::from_generators(&r, gens.iter().map(|g| parse(g, &r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn conic_is_self_dual() {
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z"], &["x^2+y^2-z^2"]);
        let d = dual(&v, &b).unwrap();
        assert_eq!(d.hypersurface().unwrap(), &parse("X^2+Y^2-Z^2", d.ring()).unwrap());
        assert!(check_biduality(&v, &b).unwrap());
    }

    #[test]
    fn point_dualizes_to_hyperplane() {
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z"], &["y", "z"]);
        let c = conormal(&v, &b).unwrap();
        let expect = Ideal::new(&c.ring, ["y", "z", "X"].iter().map(|g| parse(g, &c.ring).unwrap()).collect()).unwrap();
        assert!(c.ideal.equals(&expect, &b).unwrap());
        let d = dual(&v, &b).unwrap();
        assert_eq!(d.hypersurface().unwrap(), &parse("X", d.ring()).unwrap());
    }

    #[test]
    fn dual_names_fall_back() {
        let r = RingContext::new(&["x", "X"]).unwrap();
        assert_eq!(dual_names(&r), vec!["u0", "u1"]);
    }
}
