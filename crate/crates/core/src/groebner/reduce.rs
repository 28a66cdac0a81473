use num_traits::Zero;

use crate::polyring::{Coeff, Monomial, Polynomial};

/// Bit signature of the variables occurring in a monomial; a cheap
/// necessary condition for divisibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct DivMask(u64);

impl DivMask {
    pub(crate) fn of(m: &Monomial) -> DivMask {
        let mut bits = 0u64;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                bits |= 1 << (i % 64);
            }
        }
        DivMask(bits)
    }

    #[inline]
    pub(crate) fn may_divide(self, other: DivMask) -> bool {
        self.0 & !other.0 == 0
    }
}

/// A divisor candidate: leading monomial, its mask and the polynomial.
pub(crate) struct Reducer<'a> {
    pub(crate) lm: &'a Monomial,
    pub(crate) mask: DivMask,
    pub(crate) poly: &'a Polynomial,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(poly: &'a Polynomial) -> Option<Reducer<'a>> {
        let lm = poly.leading_monomial()?;
        Some(Reducer { lm, mask: DivMask::of(lm), poly })
    }
}

pub(crate) fn find_divisor<'r, 'a>(reducers: &'r [Reducer<'a>], m: &Monomial) -> Option<&'r Reducer<'a>> {
    let mask = DivMask::of(m);
    reducers.iter().find(|r| r.mask.may_divide(mask) && r.lm.divides(m))
}

/// Fully reduces `f`: no term of the result is divisible by a leading
/// monomial of `reducers`.
pub(crate) fn reduce_full(f: &Polynomial, reducers: &[Reducer<'_>]) -> Polynomial {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        match find_divisor(reducers, &m) {
            Some(r) => {
                let q = r.lm.quotient_of(&m);
                let lc = r.poly.leading_coeff().expect("nonzero reducer");
                let factor = &c / lc;
                p = p.sub_scaled(&factor, &q, r.poly);
            }
            None => {
                remainder.push((m, c));
                let rest: Vec<_> = p.into_terms().into_iter().skip(1).collect();
                p = Polynomial::from_sorted_terms(&ring, rest);
            }
        }
    }
    debug_assert!(remainder.iter().all(|(_, c)| !c.is_zero()));
    Polynomial::from_sorted_terms(&ring, remainder)
}

/// Normal form of `f` with respect to `basis` (division algorithm).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let reducers: Vec<Reducer<'_>> = basis.iter().filter_map(Reducer::new).collect();
    reduce_full(f, &reducers)
}
