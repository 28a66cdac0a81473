//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! coprime and chain criteria.

use std::collections::BTreeMap;

use num_traits::One;

use super::reduce::{reduce_full, DivMask, Reducer};
use crate::polyring::{Coeff, Monomial, Polynomial, Ring};

/// How the next critical pair is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Lowest total degree of the lcm first.
    Normal,
    /// Lowest sugar degree first; coincides with `Normal` on homogeneous input.
    Sugar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime.
    pub coprime_criterion: bool,
    /// Skip pairs made redundant by a third element (Gebauer–Möller).
    pub chain_criterion: bool,
    pub selection: Selection,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { coprime_criterion: true, chain_criterion: true, selection: Selection::Sugar }
    }
}

impl BuchbergerOptions {
    pub fn plain() -> Self {
        BuchbergerOptions { coprime_criterion: false, chain_criterion: false, selection: Selection::Normal }
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Element {
    poly: Polynomial,
    lm: Monomial,
    sugar: u32,
}

struct State {
    ring: Ring,
    opts: BuchbergerOptions,
    elems: Vec<Element>,
    /// indices into `elems` forming the current (minimal) basis
    basis: Vec<usize>,
    pairs: BTreeMap<(u32, u64), Pair>,
    seq: u64,
}

impl State {
    fn pair_key(&mut self, i: usize, j: usize, lcm: &Monomial) -> (u32, u64) {
        let deg = match self.opts.selection {
            Selection::Normal => lcm.degree(),
            Selection::Sugar => {
                let a = &self.elems[i];
                let b = &self.elems[j];
                let sa = a.sugar + lcm.degree() - a.lm.degree();
                let sb = b.sugar + lcm.degree() - b.lm.degree();
                sa.max(sb)
            }
        };
        self.seq += 1;
        (deg, self.seq)
    }

    fn reducers(&self) -> Vec<Reducer<'_>> {
        self.basis.iter().filter_map(|&k| Reducer::new(&self.elems[k].poly)).collect()
    }

    /// Adds a nonzero, monic polynomial to the basis and updates the pair set.
    fn insert(&mut self, poly: Polynomial, sugar: u32) {
        let lm = poly.leading_monomial().expect("nonzero").clone();
        let h = self.elems.len();
        self.elems.push(Element { poly, lm: lm.clone(), sugar });

        let mut candidates: Vec<Pair> =
            self.basis.iter().map(|&g| Pair { i: g, j: h, lcm: self.elems[g].lm.lcm(&lm) }).collect();

        let new_pairs: Vec<Pair> = if self.opts.chain_criterion {
            // drop a new pair if another new pair has an lcm dividing its lcm,
            // unless it is coprime (kept so the coprime test can discard it)
            let mut kept: Vec<Pair> = Vec::new();
            while let Some(p) = candidates.pop() {
                let coprime = self.elems[p.i].lm.is_coprime(&lm);
                let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
                if coprime || !dominated {
                    kept.push(p);
                }
            }
            kept.reverse();
            kept
        } else {
            candidates
        };

        let new_pairs: Vec<Pair> = if self.opts.coprime_criterion {
            new_pairs.into_iter().filter(|p| !self.elems[p.i].lm.is_coprime(&lm)).collect()
        } else {
            new_pairs
        };

        if self.opts.chain_criterion {
            let elems = &self.elems;
            self.pairs.retain(|_, p| {
                let li = elems[p.i].lm.lcm(&lm);
                let lj = elems[p.j].lm.lcm(&lm);
                !(lm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
            });
            let mask = DivMask::of(&lm);
            self.basis.retain(|&g| {
                let m = &elems[g].lm;
                !(mask.may_divide(DivMask::of(m)) && lm.divides(m))
            });
        }

        for p in new_pairs {
            let key = self.pair_key(p.i, p.j, &p.lcm);
            self.pairs.insert(key, p);
        }
        self.basis.push(h);
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let a = &self.elems[p.i];
        let b = &self.elems[p.j];
        let qa = a.lm.quotient_of(&p.lcm);
        let qb = b.lm.quotient_of(&p.lcm);
        // elements are monic
        a.poly.shift(&qa).sub_scaled(&Coeff::one(), &qb, &b.poly)
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// in the order of their (common) ring. The result is monic, inter-reduced
/// and sorted by leading monomial ascending.
pub fn groebner_basis(ring: &Ring, gens: &[Polynomial], opts: BuchbergerOptions) -> Vec<Polynomial> {
    let mut state =
        State { ring: ring.clone(), opts, elems: Vec::new(), basis: Vec::new(), pairs: BTreeMap::new(), seq: 0 };

    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let order = ring.order().clone();
    input.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap().exponents(), b.leading_monomial().unwrap().exponents())
    });
    for g in input {
        let r = reduce_full(&g, &state.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        let sugar = g.total_degree().unwrap_or(0);
        state.insert(r.monic(), sugar);
    }

    while let Some((&key, _)) = state.pairs.iter().next() {
        let pair = state.pairs.remove(&key).unwrap();
        let s = state.s_polynomial(&pair);
        let r = reduce_full(&s, &state.reducers());
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        state.insert(r.monic(), key.0);
    }

    let basis: Vec<Polynomial> = state.basis.iter().map(|&k| state.elems[k].poly.clone()).collect();
    reduce_basis(&state.ring, basis)
}

/// Turns a Gröbner basis into the reduced one.
pub(crate) fn reduce_basis(ring: &Ring, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap().exponents(), b.leading_monomial().unwrap().exponents())
    });
    // minimal: drop elements whose leading monomial is divisible by an earlier one
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.retain(|h| !lm.divides(h.leading_monomial().unwrap()));
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Reducer<'_>> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).filter_map(|(_, g)| Reducer::new(g)).collect();
        let g = &minimal[k];
        let lt = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_terms(ring, g.terms()[1..].iter().cloned());
        let tail = reduce_full(&tail, &others);
        let mut terms = vec![lt];
        terms.extend(tail.into_terms());
        reduced.push(Polynomial::from_terms(ring, terms).monic());
    }
    reduced
}
