use std::collections::HashMap;

use num_traits::Zero;

use super::classical::NamedGenerator;
use crate::error::{Error, Result};
use crate::groebner::matrix_rank;
use crate::polyring::{Coeff, Monomial, Polynomial, Ring};

/// Integer weights of a diagonal torus `(ℂ*)^rank` acting on the variables
/// of a ring, together with the linearization character.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusWeightSystem {
    ring: Ring,
    rank: usize,
    weights: Vec<Vec<i64>>,
    chi: Vec<i64>,
}

impl TorusWeightSystem {
    pub fn new(ring: &Ring, weights: Vec<Vec<i64>>, chi: Vec<i64>) -> Result<TorusWeightSystem> {
        let rank = chi.len();
        if weights.len() != ring.nvars() {
            return Err(Error::InvalidRing(format!("{} weight vectors for {} variables", weights.len(), ring.nvars())));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(Error::InvalidRing(format!("weight {w:?} does not have length {rank}")));
        }
        Ok(TorusWeightSystem { ring: ring.clone(), rank, weights, chi })
    }

    /// Builds the system from `(variable, weight)` pairs; unlisted variables get weight zero.
    pub fn from_named(ring: &Ring, named: &[(&str, Vec<i64>)], chi: Vec<i64>) -> Result<TorusWeightSystem> {
        let mut weights = vec![vec![0; chi.len()]; ring.nvars()];
        for (v, w) in named {
            weights[ring.require_index(v)?] = w.clone();
        }
        TorusWeightSystem::new(ring, weights, chi)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn chi(&self) -> &[i64] {
        &self.chi
    }

    pub fn weight(&self, var: usize) -> &[i64] {
        &self.weights[var]
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Vec<i64> {
        let mut w = vec![0; self.rank];
        for (i, &e) in m.exponents().iter().enumerate() {
            for (k, x) in w.iter_mut().enumerate() {
                *x += self.weights[i][k] * i64::from(e);
            }
        }
        w
    }

    /// The common weight of all terms, or an error if the terms disagree.
    pub fn polynomial_weight(&self, f: &Polynomial) -> Result<Vec<i64>> {
        let mut weights = f.terms().iter().map(|(m, _)| self.monomial_weight(m));
        let first = weights.next().ok_or_else(|| Error::NotSemiInvariant("0".into()))?;
        if weights.any(|w| w != first) {
            return Err(Error::NotSemiInvariant(f.to_string()));
        }
        Ok(first)
    }

    fn chi_power(&self, n: u32) -> Vec<i64> {
        self.chi.iter().map(|c| c * i64::from(n)).collect()
    }

    /// All monomials of total degree at most `degree_cap` with weight `n·chi`,
    /// sorted by degree and then by the ring order.
    pub fn semi_invariant_basis(&self, n: u32, degree_cap: u32) -> Vec<Monomial> {
        let target = self.chi_power(n);
        let mut out: Vec<Monomial> = monomials_up_to(self.ring.nvars(), degree_cap)
            .into_iter()
            .filter(|m| self.monomial_weight(m) == target)
            .collect();
        let order = self.ring.order().clone();
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.compare(a.exponents(), b.exponents())));
        out
    }
}

/// Every exponent vector in `nvars` variables with total degree at most `cap`.
pub fn monomials_up_to(nvars: usize, cap: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, cap, &mut vec![0; nvars], &mut out);
    out
}

/// Checks that products of `gens` span, for each `n ≤ up_to_chi_power`, the
/// space of weight-`n·chi` polynomials of degree at most `degree_cap`.
pub fn check_generation(
    gens: &[NamedGenerator],
    ws: &TorusWeightSystem,
    up_to_chi_power: u32,
    degree_cap: u32,
) -> Result<bool> {
    let mut info = Vec::with_capacity(gens.len());
    for g in gens {
        ws.ring().check_same(g.expression().ring())?;
        let deg = g.expression().total_degree().unwrap_or(0);
        if deg == 0 {
            return Err(Error::NotSemiInvariant(format!("{} is constant", g.name())));
        }
        info.push((ws.polynomial_weight(g.expression())?, deg));
    }
    for n in 0..=up_to_chi_power {
        let target = ws.chi_power(n);
        let basis = ws.semi_invariant_basis(n, degree_cap);
        if basis.is_empty() {
            continue;
        }
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for exps in products_up_to(&info, degree_cap) {
            let mut w = vec![0; ws.rank()];
            for (k, &e) in exps.iter().enumerate() {
                for (j, x) in w.iter_mut().enumerate() {
                    *x += info[k].0[j] * i64::from(e);
                }
            }
            if w != target {
                continue;
            }
            let mut p = Polynomial::one(ws.ring());
            for (k, &e) in exps.iter().enumerate() {
                if e > 0 {
                    p = &p * &gens[k].expression().pow(e);
                }
            }
            let mut row = vec![Coeff::zero(); basis.len()];
            for (m, c) in p.terms() {
                // every term has the right weight; a missing index means degree above the cap
                let Some(&i) = index.get(m) else { continue };
                row[i] = c.clone();
            }
            rows.push(row);
        }
        if matrix_rank(rows) < basis.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exponent vectors over the generators whose degree sum is at most `cap`.
fn products_up_to(info: &[(Vec<i64>, u32)], cap: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, info: &[(Vec<i64>, u32)], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == info.len() {
            out.push(cur.clone());
            return;
        }
        let d = info[i].1;
        let mut e = 0;
        while e * d <= left {
            cur[i] = e;
            go(i + 1, left - e * d, info, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, cap, info, &mut vec![0; info.len()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic() -> TorusWeightSystem {
        let r = Ring::grevlex(&["z11", "z12", "z21", "z22"]).unwrap();
        TorusWeightSystem::new(
            &r,
            vec![vec![-1, 0, 1, 0], vec![0, -1, 1, 0], vec![-1, 0, 0, 1], vec![0, -1, 0, 1]],
            vec![-1, -1, 1, 1],
        )
        .unwrap()
    }

    #[test]
    fn weight_of_one_is_zero() {
        let ws = generic();
        assert_eq!(ws.monomial_weight(&Monomial::one(4)), vec![0; 4]);
        assert_eq!(ws.monomial_weight(&Monomial::from_exponents(vec![2, 0, 0, 0])), vec![-2, 0, 2, 0]);
    }

    #[test]
    fn degree_zero_basis() {
        let ws = generic();
        assert_eq!(ws.semi_invariant_basis(0, 0), vec![Monomial::one(4)]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_up_to(4, 4).len(), 70);
        assert_eq!(monomials_up_to(3, 0).len(), 1);
    }

    #[test]
    fn empty_generators_fail() {
        assert!(!check_generation(&[], &generic(), 1, 2).unwrap());
    }

    #[test]
    fn length_mismatch_rejected() {
        let r = Ring::grevlex(&["x"]).unwrap();
        assert!(TorusWeightSystem::new(&r, vec![vec![1, 2]], vec![1]).is_err());
        assert!(TorusWeightSystem::new(&r, vec![], vec![1]).is_err());
    }
}
