use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial order on exponent vectors of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Compares the first `split` exponents with `outer`, then the rest with `inner`.
    /// Eliminates the first block whenever `outer` is a monomial order.
    Block {
        split: usize,
        outer: Box<MonomialOrder>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(split: usize, outer: MonomialOrder, inner: MonomialOrder) -> Self {
        MonomialOrder::Block { split, outer: Box::new(outer), inner: Box::new(inner) }
    }

    /// Checks that the order makes sense for `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex | MonomialOrder::GrevLex => Ok(()),
            MonomialOrder::Block { split, outer, inner } => {
                if *split == 0 || *split >= nvars {
                    return Err(Error::InvalidRing(format!(
                        "block split {split} must lie strictly between 0 and {nvars}"
                    )));
                }
                outer.validate(*split)?;
                inner.validate(nvars - split)
            }
        }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block { split, outer, inner } => {
                outer.compare(&a[..*split], &b[..*split]).then_with(|| inner.compare(&a[*split..], &b[*split..]))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller exponent on the last differing variable is larger
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Block { split, outer, inner } => {
                if **outer == MonomialOrder::Lex && **inner == MonomialOrder::GrevLex {
                    write!(f, "block({split})")
                } else {
                    write!(f, "block({split}, {outer}, {inner})")
                }
            }
        }
    }
}
