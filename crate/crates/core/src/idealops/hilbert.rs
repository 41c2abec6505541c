//! Hilbert series numerators of monomial ideals by pivot recursion.
//!
//! For a monomial ideal `M` in `n` variables the Hilbert series of
//! `K[x]/M` is `N(t) / (1-t)^n`; we compute `N` with
//! `N(M) = N(M + <p>) + t^deg(p) N(M : p)` for a pure-power pivot `p`.

/// Coefficients of a univariate integer polynomial, lowest degree first.
pub type UniPoly = Vec<i128>;

fn trim(p: &mut UniPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn add(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn shift(a: &UniPoly, d: usize) -> UniPoly {
    if a.is_empty() {
        return vec![];
    }
    let mut out = vec![0; d];
    out.extend_from_slice(a);
    out
}

/// Multiplies by `1 - t^d`.
fn times_one_minus(a: &UniPoly, d: usize) -> UniPoly {
    let neg: UniPoly = shift(a, d).into_iter().map(|c| -c).collect();
    add(a, &neg)
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series of `K[x_1..x_n] / <gens>`.
pub fn hilbert_numerator(gens: &[Vec<u16>]) -> UniPoly {
    numerator(minimalize(gens.to_vec()))
}

fn numerator(gens: Vec<Vec<u16>>) -> UniPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![];
    }
    let n = gens[0].len();
    // pairwise coprime generators: product formula
    let mut seen = vec![false; n];
    let mut coprime = true;
    'outer: for g in &gens {
        for (v, &e) in g.iter().enumerate() {
            if e > 0 {
                if seen[v] {
                    coprime = false;
                    break 'outer;
                }
            }
        }
        for (v, &e) in g.iter().enumerate() {
            if e > 0 {
                seen[v] = true;
            }
        }
    }
    if coprime {
        let mut out: UniPoly = vec![1];
        for g in &gens {
            let d: usize = g.iter().map(|&e| e as usize).sum();
            out = times_one_minus(&out, d);
        }
        return out;
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mut counts = vec![0usize; n];
    for g in &gens {
        let support = g.iter().filter(|&&e| e > 0).count();
        if support > 1 {
            for (v, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[v] += 1;
                }
            }
        }
    }
    let var = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let mut exps: Vec<u16> = gens
        .iter()
        .filter(|g| g.iter().filter(|&&e| e > 0).count() > 1 && g[var] > 0)
        .map(|g| g[var])
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pivot = vec![0u16; n];
    pivot[var] = e;

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let plus = minimalize(plus);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let colon = minimalize(colon);
    add(&numerator(plus), &shift(&numerator(colon), e as usize))
}

/// Splits `N(t) = (1-t)^c * Q(t)` with `Q(1) != 0`; returns `(c, Q(1))`.
/// The zero numerator (unit ideal) yields `None`.
pub fn order_at_one(num: &UniPoly) -> Option<(usize, i128)> {
    if num.is_empty() {
        return None;
    }
    let mut q = num.clone();
    let mut c = 0;
    loop {
        let at_one: i128 = q.iter().sum();
        if at_one != 0 {
            return Some((c, at_one));
        }
        // q(t) = (1-t) r(t): r_i = q_0 + ... + q_i
        let mut r = Vec::with_capacity(q.len());
        let mut acc = 0i128;
        for &x in &q[..q.len() - 1] {
            acc += x;
            r.push(acc);
        }
        trim(&mut r);
        q = r;
        c += 1;
    }
}

/// Krull dimension and degree of `K[x]/<gens>`; `None` for the unit ideal.
pub fn dimension_and_degree(gens: &[Vec<u16>], nvars: usize) -> Option<(usize, i128)> {
    let num = hilbert_numerator(gens);
    order_at_one(&num).map(|(c, deg)| (nvars - c, deg))
}
