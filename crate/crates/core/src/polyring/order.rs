use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Monomial orders. `BlockElim { split }` orders the first `split`
/// variables (the eliminated block) by GrevLex and breaks ties with GrevLex
/// on the remaining variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    BlockElim { split: usize },
}

impl MonomialOrder {
    /// Compares two exponent vectors of the same length.
    pub fn compare(&self, a: &[u16], b: &[u16]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::Structural(format!(
                "exponent vectors of length {} and {}",
                a.len(),
                b.len()
            )));
        }
        if let MonomialOrder::BlockElim { split } = *self {
            if split > a.len() {
                return Err(Error::Structural(format!(
                    "block split {split} exceeds {} variables",
                    a.len()
                )));
            }
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &[u16], b: &[u16]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::BlockElim { split } => {
                grevlex(&a[..split], &b[..split]).then_with(|| grevlex(&a[split..], &b[split..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::BlockElim { split } => format!("elim:{split}"),
        }
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            _ => match s.strip_prefix("elim:").map(str::parse::<usize>) {
                Some(Ok(split)) => Ok(MonomialOrder::BlockElim { split }),
                _ => Err(Error::InvalidArgument(format!("unknown monomial order '{s}'"))),
            },
        }
    }
}
