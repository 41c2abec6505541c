use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring};

/// Largest minor size computed by cofactor expansion.
pub const MAX_MINOR_SIZE: usize = 6;

/// Dense matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Structural(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(p) = entries.iter().find(|p| **p.ring() != **ring) {
            return Err(Error::RingMismatch(format!("entry in {}", p.ring())));
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Structural("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    /// Appends a column.
    pub fn augment(&self, column: &[Polynomial]) -> Result<PolyMatrix> {
        if column.len() != self.rows {
            return Err(Error::Structural("column length differs from row count".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                entries.push(self.get(r, c).clone());
            }
            entries.push(column[r].clone());
        }
        PolyMatrix::new(&self.ring, self.rows, self.cols + 1, entries)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    /// All nonzero `size x size` minors, row subsets outer and column
    /// subsets inner, both in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>> {
        if size == 0 {
            return Err(Error::InvalidArgument("minor size must be positive".into()));
        }
        if size > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {size} exceeds {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if size > MAX_MINOR_SIZE {
            return Err(Error::Unsupported(format!("minors larger than {MAX_MINOR_SIZE}x{MAX_MINOR_SIZE}")));
        }
        let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
        let mut out = Vec::new();
        for rs in subsets(self.rows, size) {
            for cs in subsets(self.cols, size) {
                let d = self.det(&rs, &cs, &mut memo)?;
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }

    fn det(&self, rows: &[usize], cols: &[usize], memo: &mut HashMap<(u64, u64), Polynomial>) -> Result<Polynomial> {
        if rows.len() == 1 {
            return Ok(self.get(rows[0], cols[0]).clone());
        }
        let key = (mask(rows), mask(cols));
        if let Some(p) = memo.get(&key) {
            return Ok(p.clone());
        }
        let r0 = rows[0];
        let sub_rows = &rows[1..];
        let mut acc = Polynomial::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(r0, c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.det(sub_rows, &sub_cols, memo)?;
            let term = entry.checked_mul(&sub)?;
            acc = if k % 2 == 0 { acc.checked_add(&term)? } else { acc.checked_sub(&term)? };
        }
        memo.insert(key, acc.clone());
        Ok(acc)
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        self.det(&idx, &idx, &mut HashMap::new())
    }
}

fn mask(ix: &[usize]) -> u64 {
    ix.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
