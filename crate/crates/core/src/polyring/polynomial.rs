use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn rational(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse polynomial with rational coefficients.
///
/// Terms are kept sorted in strictly descending order under the ring's monomial
/// order and never carry a zero coefficient, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(Monomial::one(ring.nvars()), c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Coeff::one())
    }

    pub fn var_index(ring: &Ring, index: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), index), Coeff::one())] }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        Ok(Polynomial::var_index(ring, ring.require_index(name)?))
    }

    pub fn monomial(ring: &Ring, mono: Monomial, c: Coeff) -> Self {
        assert_eq!(mono.nvars(), ring.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: duplicates are combined,
    /// zero coefficients dropped and the result sorted.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length does not match ring");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Polynomial::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exponents(), a.0.exponents()));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(w[0].0.exponents(), w[1].0.exponents()).is_gt()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn involves(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.involves(index))
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.involves(i)).collect()
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Multiplies every monomial by `m`; the order is preserved.
    pub fn shift(&self, m: &Monomial) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    fn merge(&self, other_terms: impl Iterator<Item = (Monomial, Coeff)>) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other_terms.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.compare(x.0.exponents(), y.0.exponents()) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, c1) = a.next().unwrap();
                        let (_, c2) = b.next().unwrap();
                        let c = c1 + c2;
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same(&g.ring));
        let neg = -c;
        self.merge(g.terms.iter().map(|(t, a)| (t.mul(m), a * &neg)))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other.terms.iter().map(|(m, c)| (m.clone(), -c))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.shift(m).scale(c));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.shift(m).scale(c));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.try_mul(m2)?;
                *acc.entry(m).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        Ok(Polynomial::from_map(&self.ring, acc))
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`. Fails if a variable in use has no image.
    pub fn transfer(&self, target: &Ring, var_map: &[Option<usize>]) -> Result<Polynomial> {
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => e[j] += x,
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "variable `{}` has no image in {}",
                            self.ring.variables()[i],
                            target
                        )))
                    }
                }
            }
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves the polynomial into `target`, matching variables by name. Only
    /// the variables that actually occur need to exist in `target`.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self.ring.variables().iter().map(|v| target.index_of(v)).collect();
        self.transfer(target, &map)
    }

    /// Same polynomial read in a ring with identical variables but another order.
    pub fn reorder(&self, target: &Ring) -> Result<Polynomial> {
        if target.variables() != self.ring.variables() {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, target)));
        }
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.compare(b.0.exponents(), a.0.exponents()));
        Ok(Polynomial { ring: target.clone(), terms })
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Writes a monomial in the ring's variable names, e.g. `x^2*y`.
    pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in ring.variables().iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&Polynomial::format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{a}*{}", Polynomial::format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial operands from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
