//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring: z1, z2, z3 order: grevlex
//! z1 + z2      # one generator per line
//! z3^2 - z1*z2
//! ```
//!
//! `order:` accepts `grevlex`, `lex`, `block(k)` (lex on the first `k`
//! variables, grevlex on the rest) and `block(k, outer, inner)`.

use super::order::MonomialOrder;
use super::parse::parse_polynomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn syntax(line_no: usize, msg: impl std::fmt::Display) -> Error {
    Error::Syntax { pos: line_no, msg: format!("line {line_no}: {msg}") }
}

pub fn parse_order(text: &str) -> Option<MonomialOrder> {
    let text = text.trim();
    match text {
        "grevlex" => return Some(MonomialOrder::GrevLex),
        "lex" => return Some(MonomialOrder::Lex),
        _ => {}
    }
    let inner = text.strip_prefix("block(")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let split: usize = parts.first()?.parse().ok()?;
    match parts.len() {
        1 => Some(MonomialOrder::block(split, MonomialOrder::Lex, MonomialOrder::GrevLex)),
        3 => Some(MonomialOrder::block(split, parse_order(parts[1])?, parse_order(parts[2])?)),
        _ => None,
    }
}

/// Parses a `ring: ... order: ...` header line.
pub fn parse_ring_header(line: &str) -> Result<Ring> {
    let rest =
        line.trim().strip_prefix("ring:").ok_or_else(|| Error::InvalidRing("header must start with `ring:`".into()))?;
    let (vars, order) = match rest.find("order:") {
        Some(i) => (&rest[..i], Some(&rest[i + "order:".len()..])),
        None => (rest, None),
    };
    let vars: Vec<&str> = vars.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
    let order = match order {
        None => MonomialOrder::GrevLex,
        Some(o) => parse_order(o).ok_or_else(|| Error::InvalidRing(format!("unknown order `{}`", o.trim())))?,
    };
    Ring::new(&vars, order)
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ring: Option<Ring> = None;
    let mut generators = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        match &ring {
            None => {
                ring = Some(parse_ring_header(line).map_err(|e| syntax(line_no, e))?);
            }
            Some(r) => {
                let f = parse_polynomial(line, r).map_err(|e| match e {
                    Error::UnknownVariable(v) => syntax(line_no, format!("unknown variable `{v}`")),
                    Error::Syntax { pos, msg } => syntax(line_no, format!("column {pos}: {msg}")),
                    other => syntax(line_no, other),
                })?;
                generators.push(f);
            }
        }
    }
    let ring = ring.ok_or_else(|| syntax(0, "missing `ring:` header"))?;
    Ok(IdealFile { ring, generators })
}

pub fn read_ideal_file(path: &std::path::Path) -> Result<IdealFile> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_ideal_file(&text)
}

pub fn format_ideal_file(ring: &Ring, generators: &[Polynomial]) -> String {
    let mut out = format!("{ring}\n");
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
