use std::fmt;
use std::sync::OnceLock;

use super::buchberger::{groebner_basis, BuchbergerOptions};
use super::reduce::{normal_form, reduce_full, Reducer};
use crate::error::Result;
use crate::polyring::{MonomialOrder, Polynomial, Ring};

/// An ideal given by generators, with its reduced Gröbner basis computed
/// lazily, at most once.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring.to_string())
            .field("generators", &self.generators_text())
            .finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators_text().join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    /// Ideal generated by the named variables.
    pub fn of_variables(ring: &Ring, names: &[&str]) -> Result<Ideal> {
        let gens = names.iter().map(|n| Polynomial::var(ring, n)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn generators_text(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    /// Reduced Gröbner basis in the ring's order: monic, inter-reduced,
    /// sorted by leading monomial ascending.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| groebner_basis(&self.ring, &self.generators, BuchbergerOptions::default()))
    }

    pub fn groebner_basis_with(&self, opts: BuchbergerOptions) -> Vec<Polynomial> {
        groebner_basis(&self.ring, &self.generators, opts)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        Ok(normal_form(f, self.groebner_basis()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        if fs.is_empty() {
            return Ok(true);
        }
        let reducers: Vec<Reducer<'_>> = self.groebner_basis().iter().filter_map(Reducer::new).collect();
        for f in fs {
            self.ring.check_same(f.ring())?;
            if !reduce_full(f, &reducers).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first element of `fs` that is not a member, if any.
    pub fn first_non_member<'a>(&self, fs: &'a [Polynomial]) -> Result<Option<&'a Polynomial>> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        other.contains_all(&self.generators)
    }

    /// Equality as ideals, by mutual containment.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Checks that the cached basis generates the same ideal as the generators.
    pub fn check_cached_basis(&self) -> Result<bool> {
        let gb = Ideal::new(&self.ring, self.groebner_basis().to_vec())?;
        Ok(gb.contains_all(&self.generators)? && self.contains_all(gb.generators())?)
    }

    /// The same ideal viewed in a ring with identical variables and another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order)?;
        let gens = self.generators.iter().map(|g| g.reorder(&ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }

    /// The ideal generated by the same polynomials in `target`, with
    /// variables matched by name.
    pub fn embed(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, dedup(gens))
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self ∩ other` via `τ·I + (1 − τ)·J` with `τ` eliminated.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let tau = self.ring.fresh_name("tau");
        let mut names = vec![tau.clone()];
        names.extend(self.ring.variables().iter().cloned());
        let joint = Ring::new(&names, MonomialOrder::block(1, MonomialOrder::GrevLex, MonomialOrder::GrevLex))?;
        let shift: Vec<Option<usize>> = (1..=self.ring.nvars()).map(Some).collect();
        let t = Polynomial::var_index(&joint, 0);
        let one_minus_t = &Polynomial::one(&joint) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.transfer(&joint, &shift)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.transfer(&joint, &shift)?);
        }
        let gb = groebner_basis(&joint, &gens, BuchbergerOptions::default());
        let back: Vec<Option<usize>> = std::iter::once(None).chain((0..self.ring.nvars()).map(Some)).collect();
        let kept =
            gb.iter().filter(|g| !g.involves(0)).map(|g| g.transfer(&self.ring, &back)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 − τ f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        // cheap exit: a member is in the radical
        if self.contains(f)? {
            return Ok(true);
        }
        let tau = self.ring.fresh_name("tau");
        let mut names: Vec<String> = self.ring.variables().to_vec();
        names.push(tau);
        let ext = Ring::new(&names, MonomialOrder::GrevLex)?;
        let embed: Vec<Option<usize>> = (0..self.ring.nvars()).map(Some).collect();
        let mut gens = self.generators.iter().map(|g| g.transfer(&ext, &embed)).collect::<Result<Vec<_>>>()?;
        let t = Polynomial::var_index(&ext, self.ring.nvars());
        gens.push(&Polynomial::one(&ext) - &(&t * &f.transfer(&ext, &embed)?));
        let gb = groebner_basis(&ext, &gens, BuchbergerOptions::default());
        Ok(gb.len() == 1 && gb[0].is_constant())
    }

    /// Smallest `k <= max_power` with `f^k ∈ I`, found by iterated membership.
    pub fn nilpotency_witness(&self, f: &Polynomial, max_power: u32) -> Result<Option<u32>> {
        let mut p = Polynomial::one(&self.ring);
        for k in 1..=max_power {
            p = &p * f;
            if self.contains(&p)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// `√I = √J`, decided generator-wise by radical membership.
    pub fn same_variety(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &self.generators {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal generated by the reduced Gröbner basis (same ideal, canonical generators).
    pub fn canonical(&self) -> Ideal {
        let gb = self.groebner_basis().to_vec();
        let ideal = Ideal { ring: self.ring.clone(), generators: gb.clone(), gb: OnceLock::new() };
        let _ = ideal.gb.set(gb);
        ideal
    }
}

fn dedup(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        let g = if g.is_zero() { continue } else { g };
        let m = g.monic();
        if !out.iter().any(|h| h.monic() == m) {
            out.push(g);
        }
    }
    out
}
