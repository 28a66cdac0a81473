use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Variable names (in declaration order) together with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSignature {
    variables: Vec<String>,
    order: MonomialOrder,
}

/// Shared handle to a [`RingSignature`]; cheap to clone.
#[derive(Debug, Clone, Eq)]
pub struct Ring(Arc<RingSignature>);

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(variables: &[S], order: MonomialOrder) -> Result<Ring> {
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_valid_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(variables.len())?;
        Ok(Ring(Arc::new(RingSignature { variables, order })))
    }

    pub fn grevlex<S: AsRef<str>>(variables: &[S]) -> Result<Ring> {
        Ring::new(variables, MonomialOrder::GrevLex)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Ring::new(&self.variables, order)
    }

    /// Generates a variable name not already used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.variables.contains(&name) {
            k += 1;
            name = format!("{stem}{k}");
        }
        name
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.same(other)
    }
}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Deref for Ring {
    type Target = RingSignature;
    fn deref(&self) -> &RingSignature {
        &self.0
    }
}

impl RingSignature {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn require_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring: {} order: {}", self.variables.join(", "), self.order)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
