use std::collections::HashMap;

use super::buchberger::{groebner_basis, BuchbergerOptions};
use super::elimination::elimination_order;
use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, Polynomial, Ring};

/// Substitution homomorphism `source → target / target_relations`.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
    target_relations: Option<Ideal>,
}

impl RingMap {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidMap(format!("{} images for {} source variables", images.len(), source.nvars())));
        }
        for f in &images {
            target.check_same(f.ring())?;
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images, target_relations: None })
    }

    /// Builds a map from `(source variable, image text)` pairs; every source
    /// variable must be assigned exactly once.
    pub fn from_assignments(source: &Ring, target: &Ring, assignments: &[(&str, &str)]) -> Result<RingMap> {
        let mut images: Vec<Option<Polynomial>> = vec![None; source.nvars()];
        for (var, text) in assignments {
            let i = source.require_index(var)?;
            if images[i].is_some() {
                return Err(Error::InvalidMap(format!("`{var}` assigned twice")));
            }
            images[i] = Some(parse_polynomial(text, target)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, f)| f.ok_or_else(|| Error::InvalidMap(format!("`{}` has no image", source.variables()[i]))))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(source, target, images)
    }

    pub fn identity(ring: &Ring) -> RingMap {
        let images = (0..ring.nvars()).map(|i| Polynomial::var_index(ring, i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images, target_relations: None }
    }

    pub fn with_relations(mut self, relations: Ideal) -> Result<RingMap> {
        self.target.check_same(relations.ring())?;
        self.target_relations = Some(relations);
        Ok(self)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn target_relations(&self) -> Option<&Ideal> {
        self.target_relations.as_ref()
    }

    /// Substitutes the images into `f`. Relations are not applied.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.source.check_same(f.ring())?;
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.target);
        for (m, c) in f.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| self.images[i].pow(e));
                t = &t * p;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Applies the map and reduces modulo the target relations.
    pub fn apply_reduced(&self, f: &Polynomial) -> Result<Polynomial> {
        let g = self.apply(f)?;
        match &self.target_relations {
            Some(rel) => rel.normal_form(&g),
            None => Ok(g),
        }
    }

    /// Is `f` sent into `ideal` (an ideal of the target ring)?
    pub fn maps_into(&self, f: &Polynomial, ideal: &Ideal) -> Result<bool> {
        let g = self.apply(f)?;
        match &self.target_relations {
            Some(rel) => rel.sum(ideal)?.contains(&g),
            None => ideal.contains(&g),
        }
    }

    /// `{ f : apply(f) ∈ target_relations }`.
    pub fn kernel(&self) -> Result<Ideal> {
        let rel = self.target_relations.clone().unwrap_or_else(|| Ideal::zero(&self.target));
        self.graph_elimination(&rel)
    }

    /// `{ f : apply(f) ∈ ideal + target_relations }`.
    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        self.target.check_same(ideal.ring())?;
        let rel = match &self.target_relations {
            Some(r) => r.sum(ideal)?,
            None => ideal.clone(),
        };
        self.graph_elimination(&rel)
    }

    /// Graph ideal `rel + (s_i − image_i)` in the joint ring (target
    /// variables first), eliminated down to the source variables.
    fn graph_elimination(&self, rel: &Ideal) -> Result<Ideal> {
        let nt = self.target.nvars();
        let ns = self.source.nvars();
        let mut names: Vec<String> = self.target.variables().to_vec();
        for v in self.source.variables() {
            let mut name = v.clone();
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        let joint = Ring::new(&names, elimination_order(nt))?;
        let from_target: Vec<Option<usize>> = (0..nt).map(Some).collect();
        let mut gens = rel.generators().iter().map(|g| g.transfer(&joint, &from_target)).collect::<Result<Vec<_>>>()?;
        for (i, img) in self.images.iter().enumerate() {
            let s = Polynomial::var_index(&joint, nt + i);
            gens.push(&s - &img.transfer(&joint, &from_target)?);
        }
        let gb = groebner_basis(&joint, &gens, BuchbergerOptions::default());
        let to_source: Vec<Option<usize>> = (0..nt).map(|_| None).chain((0..ns).map(Some)).collect();
        let kept = gb
            .iter()
            .filter(|g| (0..nt).all(|v| !g.involves(v)))
            .map(|g| g.transfer(&self.source, &to_source))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.source, kept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::integer;

    #[test]
    fn substitution_is_a_homomorphism() {
        let t = Ring::grevlex(&["t3", "t7"]).unwrap();
        let z = Ring::grevlex(&["z3", "z5", "z7"]).unwrap();
        let rho = RingMap::from_assignments(&t, &z, &[("t3", "z3*z5"), ("t7", "z7")]).unwrap();
        let f = parse_polynomial("t3 + t7^2", &t).unwrap();
        assert_eq!(rho.apply(&f).unwrap(), parse_polynomial("z3*z5 + z7^2", &z).unwrap());
    }

    #[test]
    fn identity_and_evaluation_at_origin() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let f = parse_polynomial("3*x^2*y - y + 7", &r).unwrap();
        assert_eq!(RingMap::identity(&r).apply(&f).unwrap(), f);
        let to_zero = RingMap::new(&r, &r, vec![Polynomial::zero(&r), Polynomial::zero(&r)]).unwrap();
        assert_eq!(to_zero.apply(&f).unwrap(), Polynomial::constant(&r, integer(7)));
    }

    #[test]
    fn kernel_of_cuspidal_parametrization() {
        let s = Ring::grevlex(&["u", "v"]).unwrap();
        let x = Ring::grevlex(&["x"]).unwrap();
        let m = RingMap::from_assignments(&s, &x, &[("u", "x^2"), ("v", "x^3")]).unwrap();
        let k = m.kernel().unwrap();
        let expected = Ideal::new(&s, vec![parse_polynomial("u^3 - v^2", &s).unwrap()]).unwrap();
        assert!(k.same_ideal(&expected).unwrap());
    }

    #[test]
    fn identity_has_zero_kernel() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert!(RingMap::identity(&r).kernel().unwrap().is_zero());
    }

    #[test]
    fn preimage_of_unit_and_zero() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let m = RingMap::identity(&r);
        assert!(m.preimage(&Ideal::unit(&r)).unwrap().is_unit());
        assert!(m.preimage(&Ideal::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert!(RingMap::new(&r, &r, vec![]).is_err());
        assert!(RingMap::from_assignments(&r, &r, &[("x", "y")]).is_err());
        assert!(RingMap::from_assignments(&r, &r, &[("x", "y"), ("x", "x")]).is_err());
    }
}
