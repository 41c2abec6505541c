//! k-tangency varieties, secant dimensions and r(X).

use std::sync::OnceLock;

use crate::budget::Budget;
use crate::duality::{conormal_named, conormal_unsaturated, dual_named, dual_names, normalize_principal, DualVariety, ProjectiveVariety};
use crate::error::{Error, Result};
use crate::idealops::{jacobian, squarefree_part, Ideal, PolyMatrix};
use crate::polyring::{Polynomial, Ring, RingContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Smooth,
    WithSingularities,
}

/// The ideal of `X^[k]` in the dual coordinates.
#[derive(Debug, Clone)]
pub struct TangencyVariety {
    pub k: usize,
    pub ideal: Ideal,
    pub variant: Variant,
    /// Per stratum `s` (number of points on the singular locus), the ideal
    /// computed for it. Empty strata are omitted.
    pub strata: Vec<(usize, Ideal)>,
    pub source: Ring,
    invariants: OnceLock<(i64, u64)>,
}

impl TangencyVariety {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    fn invariants(&self, budget: &Budget) -> Result<(i64, u64)> {
        if let Some(v) = self.invariants.get() {
            return Ok(*v);
        }
        let v = (self.ideal.dimension(budget)?, self.ideal.degree(budget)?);
        Ok(*self.invariants.get_or_init(|| v))
    }

    /// Projective dimension, −1 when empty.
    pub fn dim(&self, budget: &Budget) -> Result<i64> {
        Ok(self.invariants(budget)?.0)
    }

    pub fn degree(&self, budget: &Budget) -> Result<u64> {
        Ok(self.invariants(budget)?.1)
    }
}

/// `I + minors(e, Jac I)`, saturated by the chart variable when there is one.
#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub ideal: Ideal,
    pub is_finite: bool,
    pub dim: i64,
}

pub fn singular_locus(v: &ProjectiveVariety, budget: &Budget) -> Result<SingularLocus> {
    let e = v.codim(budget)?;
    let n1 = v.ring().nvars();
    let xs: Vec<usize> = (0..n1).collect();
    let jac = v.ideal().jacobian(&xs)?;
    let mut ideal = if e <= 0 {
        v.ideal().clone()
    } else {
        v.ideal().extend(&jac.minors(e as usize)?)?
    };
    if let Some(w) = v.chart() {
        ideal = ideal.saturate_by_poly(&Polynomial::var(v.ring(), w), budget)?;
    }
    // squarefree parts of basis elements keep the radical and drop the
    // obvious multiplicities, which would otherwise kill the Jacobian
    let basis = ideal.reduced(budget)?;
    let gens = basis.generators().iter().map(squarefree_part).collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::homogeneous(v.ring(), gens)?.reduced(budget)?;
    let dim = ideal.dimension(budget)?;
    Ok(SingularLocus { ideal, is_finite: dim <= 0, dim })
}

/// Ring with `k` copies of the primal variables followed by the dual block.
fn point_ring(primal: &Ring, k: usize, dual: &[String]) -> Result<Ring> {
    let mut blocks = Vec::new();
    let taken = |name: &str| primal.index_of(name).is_some() || dual.iter().any(|d| d == name);
    let plain = (1..=k).all(|i| primal.vars().iter().all(|v| !taken(&format!("{v}_{i}"))));
    for i in 1..=k {
        let names: Vec<String> = primal
            .vars()
            .iter()
            .enumerate()
            .map(|(j, v)| if plain { format!("{v}_{i}") } else { format!("pt{i}_{j}") })
            .collect();
        blocks.push((format!("point{i}"), names));
    }
    blocks.push(("dual".into(), dual.to_vec()));
    RingContext::with_blocks(blocks)
}

fn block_map(ring: &Ring, i: usize) -> Vec<usize> {
    ring.block(&format!("point{}", i + 1)).unwrap().range().collect()
}

fn saturate_all(mut ideal: Ideal, sats: &[Vec<Polynomial>], budget: &Budget) -> Result<Ideal> {
    for gens in sats {
        let j = Ideal::new(ideal.ring(), gens.clone())?;
        if j.is_zero() {
            continue;
        }
        ideal = ideal.saturate(&j, budget)?;
        if ideal.is_unit(budget)? {
            break;
        }
    }
    Ok(ideal)
}

/// Shared data for the strata of one `X^[k]` computation.
struct StratumInput<'a> {
    v: &'a ProjectiveVariety,
    k: usize,
    dual: &'a [String],
    /// Conormal ideal in `Q[x, u]`.
    conormal: Ideal,
    /// Nonempty singular locus, when there is one.
    sing: Option<&'a SingularLocus>,
}

/// One stratum: the first `s` points lie on the singular locus (incidence
/// only), the others are regular tangency points.
///
/// Each regular block starts from a copy of the conormal ideal, which is
/// the block's tangency ideal already saturated by its singular minors.
/// Summing the copies and saturating by all singular minors again gives
/// the same ideal as saturating the plain sum; when `X` is smooth those
/// minors only vanish where a block is zero, which the spanning saturation
/// removes anyway, so that pass is skipped.
fn stratum(input: &StratumInput<'_>, s: usize, budget: &Budget) -> Result<Ideal> {
    let StratumInput { v, k, dual, .. } = *input;
    let e = v.codim(budget)? as usize;
    let n1 = v.ring().nvars();
    let ring = point_ring(v.ring(), k, dual)?;
    let uvars: Vec<usize> = ring.block("dual").unwrap().range().collect();
    let u: Vec<Polynomial> = uvars.iter().map(|&i| Polynomial::var(&ring, i)).collect();
    let mut gens = Vec::new();
    let mut sats: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..k {
        let map = block_map(&ring, i);
        if i < s {
            let sl = input.sing.ok_or_else(|| Error::Structural("singular stratum without a singular locus".into()))?;
            let mut incidence = Polynomial::zero(&ring);
            for j in 0..n1 {
                incidence = incidence.checked_add(&Polynomial::var(&ring, map[j]).checked_mul(&u[j])?)?;
            }
            gens.push(incidence);
            for g in sl.ideal.generators() {
                gens.push(g.map_into(&ring, &map)?);
            }
            continue;
        }
        let full: Vec<usize> = map.iter().chain(uvars.iter()).copied().collect();
        for g in input.conormal.generators() {
            gens.push(g.map_into(&ring, &full)?);
        }
        if input.sing.is_some() {
            let local: Vec<Polynomial> =
                v.ideal().generators().iter().map(|g| g.map_into(&ring, &map)).collect::<Result<_>>()?;
            sats.push(jacobian(&ring, &local, &map)?.minors(e)?);
        }
    }
    // spanning: rows are the points
    let rows: Vec<Vec<Polynomial>> =
        (0..k).map(|i| block_map(&ring, i).into_iter().map(|j| Polynomial::var(&ring, j)).collect()).collect();
    sats.push(PolyMatrix::from_rows(&ring, rows)?.minors(k)?);
    // planes through the affine origin are at infinity of the dual chart;
    // u_w is kept by the elimination, so removing them first is the same
    if let Some(w) = v.chart() {
        sats.insert(0, vec![u[w].clone()]);
    }
    let ideal = Ideal::homogeneous(&ring, gens)?;
    let ideal = saturate_all(ideal, &sats, budget)?;
    let dual_ring = RingContext::new(dual)?;
    if ideal.is_unit(budget)? {
        return Ok(Ideal::unit(&dual_ring));
    }
    ideal.eliminate_into(&dual_ring, budget)?.into_projective()
}

/// Conormal ideal, with the planes through the affine origin removed when
/// `v` has a chart.
fn chart_conormal(v: &ProjectiveVariety, dual: &[String], budget: &Budget) -> Result<Ideal> {
    let c = conormal_named(v, dual, budget)?;
    match v.chart() {
        Some(w) => {
            let uw = Polynomial::var(&c.ring, c.dual_vars().start + w);
            c.ideal.saturate_by_poly(&uw, budget)
        }
        None => Ok(c.ideal),
    }
}

/// Tangency conditions without the singular-point saturation. For smooth
/// `v` the extra components sit over the zero point of a block, which the
/// spanning saturation of `stratum` removes.
fn smooth_conormal(v: &ProjectiveVariety, dual: &[String], budget: &Budget) -> Result<Ideal> {
    Ok(conormal_unsaturated(v, dual, budget)?.0.ideal)
}

fn check_k(v: &ProjectiveVariety, k: usize) -> Result<()> {
    if k == 0 || k > v.ambient_dim() {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", v.ambient_dim())));
    }
    Ok(())
}

fn assemble(v: &ProjectiveVariety, k: usize, variant: Variant, strata: Vec<(usize, Ideal)>, dual: &[String], budget: &Budget) -> Result<TangencyVariety> {
    let dual_ring = RingContext::new(dual)?;
    let mut live = Vec::new();
    for (s, i) in strata {
        // the irrelevant ideal is as empty as the unit ideal
        if i.dimension(budget)? >= 0 {
            live.push((s, i));
        }
    }
    let mut ideal: Option<Ideal> = None;
    for (_, i) in &live {
        ideal = Some(match ideal {
            None => i.clone(),
            Some(a) => a.intersect(i, budget)?,
        });
    }
    let ideal = match ideal {
        Some(i) => normalize_principal(i.into_projective()?)?,
        None => Ideal::homogeneous(&dual_ring, vec![Polynomial::one(&dual_ring)])?,
    };
    Ok(TangencyVariety { k, ideal, variant, strata: live, source: v.ring().clone(), invariants: OnceLock::new() })
}

/// `X^[k]` for smooth `X`.
pub fn k_tangency(v: &ProjectiveVariety, k: usize, budget: &Budget) -> Result<TangencyVariety> {
    check_k(v, k)?;
    let dual = dual_names(v.ring());
    let conormal = smooth_conormal(v, &dual, budget)?;
    let input = StratumInput { v, k, dual: &dual, conormal, sing: None };
    let s0 = stratum(&input, 0, budget)?;
    assemble(v, k, Variant::Smooth, vec![(0, s0)], &dual, budget)
}

/// `X^[k]` for `X` with isolated singularities: union over the number `s`
/// of points placed on the singular locus.
pub fn k_tangency_singular(v: &ProjectiveVariety, k: usize, budget: &Budget) -> Result<TangencyVariety> {
    check_k(v, k)?;
    let sing = singular_locus(v, budget)?;
    if !sing.is_finite {
        return Err(Error::Unsupported(format!("singular locus has dimension {}", sing.dim)));
    }
    let dual = dual_names(v.ring());
    let empty = sing.dim < 0;
    let conormal = if empty { smooth_conormal(v, &dual, budget)? } else { chart_conormal(v, &dual, budget)? };
    let input = StratumInput { v, k, dual: &dual, conormal, sing: if empty { None } else { Some(&sing) } };
    let mut strata = Vec::new();
    for s in 0..=k {
        if s > 0 && empty {
            break;
        }
        let start = std::time::Instant::now();
        let ideal = stratum(&input, s, budget)?;
        log::debug!("k={k} stratum {s}: {:?}", start.elapsed());
        strata.push((s, ideal));
    }
    let variant = if empty { Variant::Smooth } else { Variant::WithSingularities };
    assemble(v, k, variant, strata, &dual, budget)
}

/// `(X^[k])^*` back in the primal coordinates. Strata are dualized one by
/// one; hypersurface pieces are multiplied into one squarefree generator
/// and lower-dimensional pieces are kept in `extra`.
pub fn tangency_dual(t: &TangencyVariety, budget: &Budget) -> Result<DualVariety> {
    let primal = t.source.vars().to_vec();
    if t.is_empty() {
        return Ok(DualVariety { ideal: Ideal::homogeneous(&t.source, vec![Polynomial::one(&t.source)])?, source: t.ring().clone(), extra: vec![] });
    }
    let mut hyper: Option<Polynomial> = None;
    let mut extra: Vec<Ideal> = Vec::new();
    for (_, i) in &t.strata {
        let pv = ProjectiveVariety::new(i.clone().into_projective()?)?;
        let d = dual_named(&pv, &primal, budget)?;
        let ideal = d.ideal.rename_into(&t.source)?;
        match ideal.generators() {
            [g] if !g.is_constant() => {
                hyper = Some(match hyper {
                    None => g.clone(),
                    Some(h) => h.checked_mul(g)?,
                });
            }
            _ => extra.push(ideal.into_projective()?),
        }
    }
    let ideal = match hyper {
        Some(h) => Ideal::homogeneous(&t.source, vec![squarefree_part(&h)?])?,
        None => {
            let mut acc: Option<Ideal> = None;
            for i in extra.drain(..) {
                acc = Some(match acc {
                    None => i,
                    Some(a) => a.intersect(&i, budget)?.into_projective()?,
                });
            }
            acc.unwrap()
        }
    };
    Ok(DualVariety { ideal, source: t.ring().clone(), extra })
}

/// Projective dimension of the `k`-th secant variety. On the affine cone the
/// join is `{p_1 + ... + p_k}`, so the last point is written as
/// `z - p_1 - ... - p_{k-1}` and only `k - 1` point blocks are eliminated.
pub fn secant_dimension(v: &ProjectiveVariety, k: usize, budget: &Budget) -> Result<i64> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if k == 1 {
        return v.dim(budget);
    }
    let n1 = v.ring().nvars();
    let zs: Vec<String> = v.ring().vars().to_vec();
    let mut blocks: Vec<(String, Vec<String>)> = Vec::new();
    for i in 1..k {
        blocks.push((format!("point{i}"), zs.iter().map(|x| format!("{x}_{i}")).collect()));
    }
    blocks.push(("primal".into(), zs.clone()));
    let ring = RingContext::with_blocks(blocks)?;
    let zmap: Vec<usize> = ring.block("primal").unwrap().range().collect();
    let mut gens = Vec::new();
    let mut last: Vec<Polynomial> = zmap.iter().map(|&j| Polynomial::var(&ring, j)).collect();
    for i in 0..k - 1 {
        let map: Vec<usize> = ring.block(&format!("point{}", i + 1)).unwrap().range().collect();
        for g in v.ideal().generators() {
            gens.push(g.map_into(&ring, &map)?);
        }
        for j in 0..n1 {
            last[j] = last[j].checked_sub(&Polynomial::var(&ring, map[j]))?;
        }
    }
    for g in v.ideal().generators() {
        let mut acc = Polynomial::zero(&ring);
        for (c, e) in g.terms() {
            let mut t = Polynomial::constant(&ring, c.clone());
            for (j, &p) in e.iter().enumerate() {
                if p > 0 {
                    t = t.checked_mul(&last[j].pow(p as u32)?)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        gens.push(acc);
    }
    let join = Ideal::homogeneous(&ring, gens)?;
    let image = join.eliminate_into(v.ring(), budget)?.into_projective()?;
    image.dimension(budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RFlag {
    /// Determined by secant dimensions (or the hypersurface shortcut).
    Exact,
    /// Only the lower bound was requested.
    BoundOnly,
    /// The search ran out of budget; the lower bound is reported.
    BoundAfterTimeout,
}

impl RFlag {
    pub fn name(self) -> &'static str {
        match self {
            RFlag::Exact => "exact",
            RFlag::BoundOnly => "bound_only",
            RFlag::BoundAfterTimeout => "bound_after_timeout",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RValue {
    pub bound: usize,
    pub value: usize,
    pub flag: RFlag,
}

/// `ceil(n / (dim + 1))`.
pub fn r_lower_bound(n: usize, dim: i64) -> usize {
    let d = (dim.max(0) + 1) as usize;
    n.div_ceil(d).max(1)
}

/// `r(X)`. `bound_only = None` picks the default: bound only when
/// `dim X >= 2` or `n >= 5`.
pub fn r_of_x(v: &ProjectiveVariety, bound_only: Option<bool>, budget: &Budget) -> Result<RValue> {
    let n = v.ambient_dim();
    let dim = v.dim(budget)?;
    let bound = r_lower_bound(n, dim);
    if dim >= n as i64 - 1 {
        return Ok(RValue { bound, value: 1, flag: RFlag::Exact });
    }
    if bound_only.unwrap_or(dim >= 2 || n >= 5) {
        return Ok(RValue { bound, value: bound, flag: RFlag::BoundOnly });
    }
    for k in bound..=n {
        match secant_dimension(v, k, budget) {
            Ok(d) if d >= n as i64 - 1 => return Ok(RValue { bound, value: k, flag: RFlag::Exact }),
            Ok(_) => continue,
            Err(Error::Timeout { .. }) => return Ok(RValue { bound, value: bound, flag: RFlag::BoundAfterTimeout }),
            Err(e) => return Err(e),
        }
    }
    Ok(RValue { bound, value: n, flag: RFlag::Exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::dual;
    use crate::polyring::parse;

    fn variety(vars: &[&str], gens: &[&str]) -> ProjectiveVariety {
        let r = RingContext::new(vars).unwrap();
        ProjectiveVariety::from_generators(&r, gens.iter().map(|g| parse(g, &r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn k1_matches_dual() {
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z"], &["x^2+2*y^2-z^2"]);
        let t = k_tangency(&v, 1, &b).unwrap();
        let d = dual(&v, &b).unwrap();
        assert!(t.ideal.equals(&d.ideal, &b).unwrap());
    }

    #[test]
    fn conic_has_no_bitangents() {
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z"], &["x^2+y^2-z^2"]);
        let t = k_tangency(&v, 2, &b).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.dim(&b).unwrap(), -1);
    }

    #[test]
    fn points_span_lines() {
        // three points in the plane: lines through pairs
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z"], &["x*y", "y*z", "x*z"]);
        let t = k_tangency(&v, 2, &b).unwrap();
        assert_eq!(t.dim(&b).unwrap(), 0);
        assert_eq!(t.degree(&b).unwrap(), 3);
    }

    #[test]
    fn bounds() {
        assert_eq!(r_lower_bound(3, 1), 2);
        assert_eq!(r_lower_bound(3, 0), 3);
        assert_eq!(r_lower_bound(3, 2), 1);
    }

    #[test]
    fn twisted_cubic_secants_fill_space() {
        let b = Budget::unlimited();
        let v = variety(&["x", "y", "z", "w"], &["x*z-y^2", "y*w-z^2", "x*w-y*z"]);
        assert_eq!(secant_dimension(&v, 2, &b).unwrap(), 3);
        let r = r_of_x(&v, None, &b).unwrap();
        assert_eq!((r.bound, r.value, r.flag), (2, 2, RFlag::Exact));
    }
}
