//! Exact Gröbner-basis engine plus the drivers that certify the semi-invariant
//! rings of the non-locally-free fibers and their local deformation ideals.

pub mod cases;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod polyring;

pub use error::{Error, Result};
