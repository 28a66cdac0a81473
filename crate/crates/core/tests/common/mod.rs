//! Shared generators and test-side oracles. The oracles work on plain
//! `BTreeMap` term lists and never call the engine's reduction code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use mfv_core::polyring::{rational, Coeff, Monomial, MonomialOrder, Polynomial, Ring};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub type Terms = BTreeMap<Vec<u32>, Coeff>;

pub fn terms_of(f: &Polynomial) -> Terms {
    f.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

pub fn from_terms(ring: &Ring, t: &Terms) -> Polynomial {
    Polynomial::from_terms(ring, t.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), c.clone())))
}

pub fn coeff() -> impl Strategy<Value = Coeff> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rational(n, d))
}

pub fn nonzero_coeff() -> impl Strategy<Value = Coeff> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
}

/// Random polynomials in `ring` with at most `max_terms` terms of degree at most `max_deg`.
pub fn poly(ring: Ring, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), coeff()), 0..=max_terms).prop_map(move |ts| {
        let ts = ts.into_iter().map(|(mut e, c)| {
            while e.iter().sum::<u32>() > max_deg {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            (Monomial::from_exponents(e), c)
        });
        Polynomial::from_terms(&ring, ts)
    })
}

/// Homogeneous polynomials of the given degree.
pub fn homogeneous(ring: Ring, max_terms: usize, degree: u32) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..n, degree as usize), nonzero_coeff()), 1..=max_terms).prop_map(
        move |ts| {
            let ts = ts.into_iter().map(|(vars, c)| {
                let mut e = vec![0; n];
                for v in vars {
                    e[v] += 1;
                }
                (Monomial::from_exponents(e), c)
            });
            Polynomial::from_terms(&ring, ts)
        },
    )
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Coeff>> {
    prop::collection::vec(coeff(), n)
}

/// Evaluation written directly on the term list.
pub fn eval(f: &Polynomial, p: &[Coeff]) -> Coeff {
    let mut acc = Coeff::zero();
    for (m, c) in f.terms() {
        let mut v = c.clone();
        for (x, &e) in p.iter().zip(m.exponents()) {
            for _ in 0..e {
                v *= x;
            }
        }
        acc += v;
    }
    acc
}

fn leading(order: &MonomialOrder, t: &Terms) -> Option<(Vec<u32>, Coeff)> {
    t.iter().max_by(|a, b| order.compare(a.0, b.0)).map(|(e, c)| (e.clone(), c.clone()))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Full multivariate division of `f` by `gs`, remainder only.
pub fn naive_remainder(order: &MonomialOrder, f: &Terms, gs: &[Terms]) -> Terms {
    let mut p = f.clone();
    let mut r = Terms::new();
    let leads: Vec<_> = gs.iter().map(|g| leading(order, g).expect("nonzero divisor")).collect();
    while let Some((lm, lc)) = leading(order, &p) {
        match gs.iter().zip(&leads).find(|(_, (gm, _))| divides(gm, &lm)) {
            Some((g, (gm, gc))) => {
                let shift: Vec<u32> = lm.iter().zip(gm).map(|(a, b)| a - b).collect();
                let q = &lc / gc;
                for (e, c) in g {
                    let e: Vec<u32> = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    let entry = p.entry(e.clone()).or_insert_with(Coeff::zero);
                    *entry -= &q * c;
                    if entry.is_zero() {
                        p.remove(&e);
                    }
                }
            }
            None => {
                p.remove(&lm);
                r.insert(lm, lc);
            }
        }
    }
    r
}

/// S-polynomial of two term lists.
pub fn s_poly(order: &MonomialOrder, f: &Terms, g: &Terms) -> Terms {
    let (fm, fc) = leading(order, f).unwrap();
    let (gm, gc) = leading(order, g).unwrap();
    let lcm: Vec<u32> = fm.iter().zip(&gm).map(|(a, b)| *a.max(b)).collect();
    let mut out = Terms::new();
    for (src, m, c, sign) in [(f, &fm, &fc, Coeff::one()), (g, &gm, &gc, -Coeff::one())] {
        let shift: Vec<u32> = lcm.iter().zip(m).map(|(a, b)| a - b).collect();
        for (e, x) in src {
            let e: Vec<u32> = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
            *out.entry(e).or_insert_with(Coeff::zero) += &sign * x / c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Buchberger's criterion checked with the test-side division.
pub fn is_groebner(order: &MonomialOrder, basis: &[Polynomial]) -> bool {
    let gs: Vec<Terms> = basis.iter().map(terms_of).collect();
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            if !naive_remainder(order, &s_poly(order, &gs[i], &gs[j]), &gs).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Reduced: monic, and no term of any element is divisible by another element's leading monomial.
pub fn is_reduced(order: &MonomialOrder, basis: &[Polynomial]) -> bool {
    let gs: Vec<Terms> = basis.iter().map(terms_of).collect();
    let leads: Vec<_> = gs.iter().map(|g| leading(order, g).unwrap()).collect();
    leads.iter().all(|(_, c)| c.is_one())
        && gs
            .iter()
            .enumerate()
            .all(|(i, g)| g.keys().all(|e| leads.iter().enumerate().all(|(j, (lm, _))| i == j || !divides(lm, e))))
}

/// Number of monomials of degree `d` in `n` variables that no leading monomial divides.
pub fn standard_monomials(n: usize, d: u32, leads: &[Vec<u32>]) -> usize {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, leads: &[Vec<u32>], count: &mut usize) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            if !leads.iter().any(|l| divides(l, prefix)) {
                *count += 1;
            }
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, leads, count);
            prefix.pop();
        }
    }
    let mut count = 0;
    if n == 0 {
        return usize::from(d == 0);
    }
    rec(n, d, &mut Vec::new(), leads, &mut count);
    count
}
