//! Candidate algebraic boundary of the convex hull: the union of the duals
//! of the k-tangency varieties for k = r(X)..n, plus closed-form degree
//! counts for plane curves and surfaces.

use std::time::{Duration, Instant};

use crate::budget::Budget;
use crate::duality::ProjectiveVariety;
use crate::error::{Error, Result};
use crate::idealops::{squarefree_part, Ideal};
use crate::polyring::Polynomial;
use crate::tangency::{k_tangency, k_tangency_singular, r_of_x, singular_locus, tangency_dual, RValue, Variant};

#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub k: usize,
    pub ideal: Ideal,
    pub is_hypersurface: bool,
    pub defining_poly: Option<Polynomial>,
    pub degree: u64,
    pub codim: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KStatus {
    Ok,
    /// X^[k] is empty, nothing to dualize.
    Empty,
    Timeout,
}

impl KStatus {
    pub fn name(self) -> &'static str {
        match self {
            KStatus::Ok => "ok",
            KStatus::Empty => "empty",
            KStatus::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KDiagnostic {
    pub k: usize,
    pub status: KStatus,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct BoundaryReport {
    pub n: usize,
    pub dim: i64,
    pub degree: u64,
    pub variant: Variant,
    pub r: RValue,
    pub components: Vec<BoundaryComponent>,
    pub product_poly: Option<Polynomial>,
    pub diagnostics: Vec<KDiagnostic>,
}

impl BoundaryReport {
    /// Degree of the squarefree product, 0 when there is no hypersurface.
    pub fn total_degree(&self) -> u64 {
        self.product_poly.as_ref().map_or(0, |p| p.degree().unwrap_or(0) as u64)
    }

    pub fn timed_out(&self) -> bool {
        self.diagnostics.iter().any(|d| d.status == KStatus::Timeout)
    }
}

#[derive(Debug, Clone, Default)]
pub struct BoundaryOptions {
    /// `None` decides from the singular locus.
    pub singular: Option<bool>,
    /// Passed to `r_of_x`; `None` uses its default.
    pub bound_only_r: Option<bool>,
    pub budget_per_k: Option<Duration>,
    pub parallel: bool,
}

pub fn algebraic_boundary(v: &ProjectiveVariety, options: &BoundaryOptions, budget: &Budget) -> Result<BoundaryReport> {
    let n = v.ambient_dim();
    let dim = v.dim(budget)?;
    let degree = v.degree(budget)?;
    if dim < 0 || dim >= n as i64 {
        return Err(Error::InvalidArgument(format!("variety of dimension {dim} in P^{n} is not proper")));
    }
    let singular = match options.singular {
        Some(s) => s,
        None => {
            let sl = singular_locus(v, budget)?;
            if !sl.is_finite {
                return Err(Error::Unsupported(format!("singular locus has dimension {}", sl.dim)));
            }
            sl.dim >= 0
        }
    };
    let variant = if singular { Variant::WithSingularities } else { Variant::Smooth };
    let r = r_of_x(v, options.bound_only_r, budget)?;
    let hypersurface = dim == n as i64 - 1;

    let ks: Vec<usize> = (r.value..=n).collect();
    let run = |k: usize| -> (usize, Result<Vec<BoundaryComponent>>, u64) {
        let start = Instant::now();
        let b = budget.child(options.budget_per_k);
        let out = components_for_k(v, k, singular, hypersurface, &b);
        (k, out, start.elapsed().as_millis() as u64)
    };
    let results: Vec<_> = if options.parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = ks.iter().map(|&k| s.spawn(move || run(k))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        ks.iter().map(|&k| run(k)).collect()
    };

    let mut components = Vec::new();
    let mut diagnostics = Vec::new();
    for (k, out, elapsed_ms) in results {
        let status = match out {
            Ok(cs) if cs.is_empty() => KStatus::Empty,
            Ok(cs) => {
                components.extend(cs);
                KStatus::Ok
            }
            Err(Error::Timeout { .. }) => KStatus::Timeout,
            Err(e) => return Err(e),
        };
        log::debug!("boundary k={k}: {} in {elapsed_ms} ms", status.name());
        diagnostics.push(KDiagnostic { k, status, elapsed_ms });
    }

    let mut product: Option<Polynomial> = None;
    for c in &components {
        if let Some(p) = &c.defining_poly {
            product = Some(match product {
                None => p.clone(),
                Some(q) => q.checked_mul(p)?,
            });
        }
    }
    let product_poly = product.map(|p| squarefree_part(&p)).transpose()?;
    Ok(BoundaryReport { n, dim, degree, variant, r, components, product_poly, diagnostics })
}

fn components_for_k(v: &ProjectiveVariety, k: usize, singular: bool, hypersurface: bool, budget: &Budget) -> Result<Vec<BoundaryComponent>> {
    if k == 1 && hypersurface {
        // (X^[1])^* = X
        let g = squarefree_part(&v.ideal().reduced(budget)?.generators()[0])?;
        let ideal = Ideal::homogeneous(v.ring(), vec![g.clone()])?;
        return Ok(vec![BoundaryComponent {
            k,
            degree: g.degree().unwrap_or(0) as u64,
            ideal,
            is_hypersurface: true,
            defining_poly: Some(g),
            codim: 1,
        }]);
    }
    let t = if singular { k_tangency_singular(v, k, budget)? } else { k_tangency(v, k, budget)? };
    if t.is_empty() {
        return Ok(vec![]);
    }
    let d = tangency_dual(&t, budget)?;
    let mut out = Vec::new();
    for ideal in std::iter::once(d.ideal).chain(d.extra) {
        out.push(component(k, ideal, budget)?);
    }
    // empty pieces have codimension n + 1
    out.retain(|c| c.codim <= v.ambient_dim() as i64);
    Ok(out)
}

fn component(k: usize, ideal: Ideal, budget: &Budget) -> Result<BoundaryComponent> {
    let poly = match ideal.generators() {
        [g] if !g.is_constant() => Some(g.clone()),
        _ => None,
    };
    let codim = ideal.codim(budget)?;
    let degree = match &poly {
        Some(p) => p.degree().unwrap_or(0) as u64,
        None => ideal.degree(budget)?,
    };
    Ok(BoundaryComponent { k, is_hypersurface: poly.is_some(), defining_poly: poly, ideal, degree, codim })
}

/// Number of complex bitangent lines of a smooth plane curve of degree `d`.
pub fn plucker_bitangent_count(d: i64) -> Result<i64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree {d} < 2")));
    }
    Ok((d - 3) * (d - 2) * d * (d + 3) / 2)
}

/// `(deg X^[2], deg (X^[2])^*, deg X^[3])` for a general surface of degree
/// `d` in 3-space.
pub fn surface_degree_oracles(d: i64) -> (i64, i64, i64) {
    let x2 = d * (d - 1) * (d - 2) * (d.pow(3) - d.pow(2) + d - 12) / 2;
    let x2_dual = d * (d - 2) * (d - 3) * (d.pow(2) + 2 * d - 4);
    let x3 = (d.pow(9) - 6 * d.pow(8) + 15 * d.pow(7) - 59 * d.pow(6) + 204 * d.pow(5) - 339 * d.pow(4)
        + 770 * d.pow(3)
        - 2056 * d.pow(2)
        + 1920 * d)
        / 6;
    (x2, x2_dual, x3)
}

/// Upper bound on the degree of the algebraic boundary of a plane curve.
pub fn curve_boundary_degree_bound(d: i64) -> Result<i64> {
    Ok(d + plucker_bitangent_count(d)?)
}
