//! Problem files: a few `key: value` header lines, then one generator per
//! line. `#` starts a comment.
//!
//! ```text
//! vars: x y z
//! homogeneous: false
//! homogenize: w
//! x^2+z^2+(y^2-1)^3
//! ```

use std::fmt;

use cab_core::idealops::Ideal;
use cab_core::{parse, Error, MonomialOrder, Polynomial, Ring, RingContext};

#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub ring: Ring,
    pub homogeneous: bool,
    /// Name of the variable to homogenize with for projective commands.
    pub homogenize: Option<String>,
    pub generators: Vec<Polynomial>,
    pub order: Option<MonomialOrder>,
    pub k: Option<usize>,
    pub singular: Option<bool>,
    pub budget_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ProblemError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ProblemError {
    ProblemError { line, column, message: message.into() }
}

pub fn parse_order(s: &str) -> Option<MonomialOrder> {
    match s {
        "lex" => Some(MonomialOrder::Lex),
        "grevlex" => Some(MonomialOrder::GrevLex),
        _ => s.strip_prefix("elim:").and_then(|n| n.parse().ok()).map(|split| MonomialOrder::BlockElim { split }),
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "yes" => Some(true),
        "false" | "no" => Some(false),
        _ => None,
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ProblemError> {
        let mut vars: Option<Vec<String>> = None;
        let mut blocks: Option<Vec<(String, Vec<String>)>> = None;
        let mut homogeneous = None;
        let mut homogenize = None;
        let mut order = None;
        let mut k = None;
        let mut singular = None;
        let mut budget_seconds = None;
        let mut ring: Option<Ring> = None;
        let mut generators = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap();
            let indent = line.len() - line.trim_start().len();
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let header = line.split_once(':').filter(|(key, _)| key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'));
            if let Some((key, value)) = header {
                if ring.is_some() {
                    return Err(err(lineno, indent + 1, format!("header '{key}' after the first generator")));
                }
                let value = value.trim();
                let col = indent + key.len() + 2;
                let bad = |what: &str| err(lineno, col, format!("expected {what}, got '{value}'"));
                match key {
                    "vars" => vars = Some(value.split_whitespace().map(String::from).collect()),
                    "blocks" => {
                        let mut out = Vec::new();
                        for part in value.split(';').filter(|p| !p.trim().is_empty()) {
                            let (name, names) = part.split_once('=').ok_or_else(|| bad("name = vars; ..."))?;
                            out.push((name.trim().to_string(), names.split_whitespace().map(String::from).collect()));
                        }
                        blocks = Some(out);
                    }
                    "homogeneous" => homogeneous = Some(parse_bool(value).ok_or_else(|| bad("true or false"))?),
                    "homogenize" => homogenize = Some(value.to_string()),
                    "order" => order = Some(parse_order(value).ok_or_else(|| bad("lex, grevlex or elim:N"))?),
                    "k" => k = Some(value.parse().map_err(|_| bad("a positive integer"))?),
                    "variant" => {
                        singular = Some(match value {
                            "smooth" => false,
                            "singular" => true,
                            _ => return Err(bad("smooth or singular")),
                        })
                    }
                    "budget" => budget_seconds = Some(value.parse().map_err(|_| bad("seconds"))?),
                    _ => return Err(err(lineno, indent + 1, format!("unknown header '{key}'"))),
                }
                continue;
            }
            if ring.is_none() {
                ring = Some(build_ring(vars.take(), blocks.take()).map_err(|m| err(lineno, 1, m))?);
            }
            let r = ring.as_ref().unwrap();
            let g = parse(line, r).map_err(|e| match e {
                Error::Parse { position, message } => err(lineno, indent + position + 1, message),
                other => err(lineno, indent + 1, other.to_string()),
            })?;
            generators.push(g);
        }
        let ring = match ring {
            Some(r) => r,
            None => build_ring(vars, blocks).map_err(|m| err(1, 1, m))?,
        };
        let homogeneous = match homogeneous {
            Some(true) => {
                if let Some(pos) = generators.iter().position(|g| !g.is_homogeneous()) {
                    return Err(err(generator_line(text, pos), 1, "generator is not homogeneous"));
                }
                true
            }
            Some(false) => false,
            None => generators.iter().all(|g| g.is_homogeneous()),
        };
        Ok(ProblemFile { ring, homogeneous, homogenize, generators, order, k, singular, budget_seconds })
    }

    pub fn ideal(&self) -> Result<Ideal, Error> {
        if self.homogeneous {
            Ideal::homogeneous(&self.ring, self.generators.clone())
        } else {
            Ideal::new(&self.ring, self.generators.clone())
        }
    }
}

fn build_ring(vars: Option<Vec<String>>, blocks: Option<Vec<(String, Vec<String>)>>) -> Result<Ring, String> {
    match (vars, blocks) {
        (None, None) => Err("missing 'vars:' header".into()),
        (Some(v), None) => RingContext::new(&v).map_err(|e| e.to_string()),
        (vars, Some(b)) => {
            let flat: Vec<String> = b.iter().flat_map(|(_, names)| names.clone()).collect();
            if vars.is_some_and(|v| v != flat) {
                return Err("'blocks:' does not match 'vars:'".into());
            }
            RingContext::with_blocks(b).map_err(|e| e.to_string())
        }
    }
}

/// Line number of the `index`-th generator line.
fn generator_line(text: &str, index: usize) -> usize {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.split('#').next().unwrap().trim();
            !l.is_empty() && !l.split_once(':').is_some_and(|(k, _)| k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_'))
        })
        .nth(index)
        .map_or(1, |(i, _)| i + 1)
}
