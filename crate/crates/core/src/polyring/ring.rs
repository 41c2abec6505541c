use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Role of a contiguous block of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// Ordered variable names partitioned into contiguous named blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<String>,
    blocks: Vec<Block>,
}

pub type Ring = Arc<RingContext>;

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    /// A ring with a single block named `primal`.
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let len = names.len();
        Self::with_blocks(vec![("primal".to_string(), names)]).map(|r| {
            debug_assert_eq!(r.nvars(), len);
            r
        })
    }

    /// Builds a ring from named blocks; variables are laid out block by block.
    pub fn with_blocks(blocks: Vec<(String, Vec<String>)>) -> Result<Ring> {
        let mut vars = Vec::new();
        let mut out = Vec::new();
        for (name, names) in blocks {
            if names.is_empty() {
                continue;
            }
            out.push(Block { name, start: vars.len(), len: names.len() });
            vars.extend(names);
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidArgument(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable '{v}'")));
            }
        }
        Ok(Arc::new(RingContext { vars, blocks: out }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable '{}'", n.as_ref())))
            })
            .collect()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// A variable name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}{i}")).find(|n| self.index_of(n).is_none()).unwrap()
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(RingContext::new(&["x", "x"]).is_err());
        assert!(RingContext::new(&["2x"]).is_err());
        assert!(RingContext::new(&[""]).is_err());
    }

    #[test]
    fn blocks_partition_variables() {
        let r = RingContext::with_blocks(vec![
            ("point1".into(), vec!["a".into(), "b".into()]),
            ("dual".into(), vec!["u".into()]),
        ])
        .unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.block("dual").unwrap().range(), 2..3);
        assert_eq!(r.blocks().iter().map(|b| b.len).sum::<usize>(), 3);
        assert_eq!(r.fresh_name("a"), "a0");
        assert_eq!(r.fresh_name("t"), "t");
    }
}
