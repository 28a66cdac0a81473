use std::fmt;

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// `numerator(t) / (1 − t)^denominator_power`, kept with every common
/// factor `(1 − t)` cancelled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    denominator_power: u32,
}

impl HilbertSeries {
    /// Builds the series and cancels common `(1 − t)` factors.
    pub fn new(numerator: Vec<i64>, denominator_power: u32) -> HilbertSeries {
        let mut num = numerator;
        let mut d = denominator_power;
        trim(&mut num);
        while d > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t): q_k = sum_{j <= k} n_j
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = 0;
            for &c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = q;
            trim(&mut num);
            d -= 1;
        }
        if num.is_empty() {
            d = 0;
        }
        HilbertSeries { numerator: num, denominator_power: d }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_power(&self) -> u32 {
        self.denominator_power
    }

    /// Krull dimension of the graded ring.
    pub fn dimension(&self) -> u32 {
        self.denominator_power
    }

    /// Multiplicity (numerator evaluated at 1).
    pub fn degree(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Dimensions of the graded pieces `0..=up_to`.
    pub fn coefficients(&self, up_to: usize) -> Vec<i64> {
        let mut series: Vec<i64> = (0..=up_to).map(|k| self.numerator.get(k).copied().unwrap_or(0)).collect();
        for _ in 0..self.denominator_power {
            // multiply by 1/(1 - t): prefix sums
            for k in 1..=up_to {
                series[k] += series[k - 1];
            }
        }
        series
    }
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let body = match (c.abs(), mono.is_empty()) {
                (a, true) => a.to_string(),
                (1, false) => mono,
                (a, false) => format!("{a}*{mono}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" ") };
        match self.denominator_power {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1 - t)"),
            d => write!(f, "({num})/(1 - t)^{d}"),
        }
    }
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of `Q[x]/(gens)` over `(1 − t)^n`.
fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let d = m.degree() as usize;
            let mut next = acc.clone();
            poly_sub_shifted(&mut next, &acc, d);
            acc = next;
        }
        return acc;
    }
    // N(I) = N(I') − t^deg(m) · N(I' : m)
    let mut rest = gens;
    let m = rest.pop().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|g| m.quotient_of(&g.lcm(&m))).collect();
    let mut n = monomial_numerator(rest);
    let nc = monomial_numerator(colon);
    poly_sub_shifted(&mut n, &nc, m.degree() as usize);
    n
}

/// Hilbert series of `R/I` for a homogeneous ideal.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let lms: Vec<Monomial> = ideal.groebner_basis().iter().filter_map(|g| g.leading_monomial().cloned()).collect();
    Ok(HilbertSeries::new(monomial_numerator(lms), ideal.ring().nvars() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    #[test]
    fn cancellation() {
        // (1 - t^2)/(1 - t)^5 = (1 + t)/(1 - t)^4
        let h = HilbertSeries::new(vec![1, 0, -1], 5);
        assert_eq!(h, HilbertSeries::new(vec![1, 1], 4));
        assert_eq!(h.to_string(), "(1 + t)/(1 - t)^4");
        assert_eq!(h.degree(), 2);
    }

    #[test]
    fn free_ring() {
        let r = Ring::grevlex(&["a", "b", "c"]).unwrap();
        let h = hilbert_series(&Ideal::zero(&r)).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1], 3));
        assert_eq!(h.coefficients(3), vec![1, 3, 6, 10]);
    }

    #[test]
    fn single_quadric() {
        let r = Ring::grevlex(&["zeta0", "zeta1", "zeta2", "zeta3", "zeta4"]).unwrap();
        let q = parse_polynomial("zeta1*zeta4 - zeta2*zeta3", &r).unwrap();
        let h = hilbert_series(&Ideal::new(&r, vec![q]).unwrap()).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1, 0, -1], 5));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let i = Ideal::new(&r, vec![parse_polynomial("x - y^2", &r).unwrap()]).unwrap();
        assert!(matches!(hilbert_series(&i), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn zero_quotient() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let h = hilbert_series(&Ideal::unit(&r)).unwrap();
        assert_eq!(h.numerator(), &[] as &[i64]);
        assert_eq!(h.to_string(), "0");
    }
}
