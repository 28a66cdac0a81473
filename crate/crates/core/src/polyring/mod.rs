//! Exact sparse multivariate polynomials over the rationals.

mod ideal_file;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use ideal_file::{format_ideal_file, parse_ideal_file, parse_order, parse_ring_header, read_ideal_file, IdealFile};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, parse_rational};
pub use polynomial::{integer, rational, Coeff, Polynomial};
pub use ring::{Ring, RingSignature};
