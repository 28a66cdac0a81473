use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};
use crate::polyring::{Coeff, Polynomial, Ring};

/// A 2×2 matrix of rationals, used for group elements.
pub type Mat2 = [[Coeff; 2]; 2];

/// A column (or row) vector with polynomial entries.
pub type Vector2 = [Polynomial; 2];

/// Structural constraint carried by a [`MatrixSymbol`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixConstraint {
    Free,
    /// Parametrized by three coordinates; entry (2,2) is minus entry (1,1).
    Traceless,
    /// `[[0, 0], [a, 0]]`
    LowerNilpotentSlice,
    /// `[[0, b], [0, 0]]`
    UpperNilpotentSlice,
}

/// A named 2×2 matrix whose entries are polynomials in a common ring.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSymbol {
    name: String,
    entries: [[Polynomial; 2]; 2],
    constraint: MatrixConstraint,
}

/// Coordinate names `{name}_11`, `{name}_12`, `{name}_21` of a traceless matrix.
pub fn traceless_coordinates(name: &str) -> [String; 3] {
    [format!("{name}_11"), format!("{name}_12"), format!("{name}_21")]
}

impl MatrixSymbol {
    pub fn from_entries(
        name: &str,
        entries: [[Polynomial; 2]; 2],
        constraint: MatrixConstraint,
    ) -> Result<MatrixSymbol> {
        let ring = entries[0][0].ring().clone();
        for row in &entries {
            for e in row {
                ring.check_same(e.ring())?;
            }
        }
        let zero = |p: &Polynomial| p.is_zero();
        let ok = match constraint {
            MatrixConstraint::Free => true,
            MatrixConstraint::Traceless => (&entries[0][0] + &entries[1][1]).is_zero(),
            MatrixConstraint::LowerNilpotentSlice => {
                zero(&entries[0][0]) && zero(&entries[0][1]) && zero(&entries[1][1])
            }
            MatrixConstraint::UpperNilpotentSlice => {
                zero(&entries[0][0]) && zero(&entries[1][0]) && zero(&entries[1][1])
            }
        };
        if !ok {
            return Err(Error::InvalidMap(format!("matrix {name} violates {constraint:?}")));
        }
        Ok(MatrixSymbol { name: name.to_string(), entries, constraint })
    }

    /// Matrix whose entries are the named ring variables (row-major).
    pub fn free(name: &str, ring: &Ring, vars: [[&str; 2]; 2]) -> Result<MatrixSymbol> {
        let v = |s: &str| Polynomial::var(ring, s);
        let entries = [[v(vars[0][0])?, v(vars[0][1])?], [v(vars[1][0])?, v(vars[1][1])?]];
        MatrixSymbol::from_entries(name, entries, MatrixConstraint::Free)
    }

    /// `[[d, u], [l, -d]]` in the coordinates returned by [`traceless_coordinates`].
    pub fn traceless(name: &str, ring: &Ring) -> Result<MatrixSymbol> {
        let [d, u, l] = traceless_coordinates(name);
        let d = Polynomial::var(ring, &d)?;
        let entries = [[d.clone(), Polynomial::var(ring, &u)?], [Polynomial::var(ring, &l)?, -d]];
        MatrixSymbol::from_entries(name, entries, MatrixConstraint::Traceless)
    }

    pub fn lower_slice(name: &str, ring: &Ring, a: &str) -> Result<MatrixSymbol> {
        let z = Polynomial::zero(ring);
        let entries = [[z.clone(), z.clone()], [Polynomial::var(ring, a)?, z]];
        MatrixSymbol::from_entries(name, entries, MatrixConstraint::LowerNilpotentSlice)
    }

    pub fn upper_slice(name: &str, ring: &Ring, b: &str) -> Result<MatrixSymbol> {
        let z = Polynomial::zero(ring);
        let entries = [[z.clone(), Polynomial::var(ring, b)?], [z.clone(), z]];
        MatrixSymbol::from_entries(name, entries, MatrixConstraint::UpperNilpotentSlice)
    }

    /// A constant matrix, typically a group element.
    pub fn constant(name: &str, ring: &Ring, m: &Mat2) -> MatrixSymbol {
        let c = |x: &Coeff| Polynomial::constant(ring, x.clone());
        let entries = [[c(&m[0][0]), c(&m[0][1])], [c(&m[1][0]), c(&m[1][1])]];
        MatrixSymbol { name: name.to_string(), entries, constraint: MatrixConstraint::Free }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0][0].ring()
    }

    pub fn constraint(&self) -> MatrixConstraint {
        self.constraint
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> Vec<Polynomial> {
        self.entries.iter().flatten().cloned().collect()
    }

    fn derived(name: String, entries: [[Polynomial; 2]; 2]) -> MatrixSymbol {
        MatrixSymbol { name, entries, constraint: MatrixConstraint::Free }
    }

    pub fn mul(&self, other: &MatrixSymbol) -> MatrixSymbol {
        let a = &self.entries;
        let b = &other.entries;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        MatrixSymbol::derived(format!("{}{}", self.name, other.name), [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, other: &MatrixSymbol) -> MatrixSymbol {
        let e = |i: usize, j: usize| &self.entries[i][j] + &other.entries[i][j];
        MatrixSymbol::derived(format!("{}+{}", self.name, other.name), [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, other: &MatrixSymbol) -> MatrixSymbol {
        let e = |i: usize, j: usize| &self.entries[i][j] - &other.entries[i][j];
        MatrixSymbol::derived(format!("{}-{}", self.name, other.name), [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &MatrixSymbol) -> MatrixSymbol {
        let c = self.mul(other).sub(&other.mul(self));
        MatrixSymbol { name: format!("[{},{}]", self.name, other.name), ..c }
    }

    pub fn transpose(&self) -> MatrixSymbol {
        let e = &self.entries;
        let constraint = match self.constraint {
            MatrixConstraint::LowerNilpotentSlice => MatrixConstraint::UpperNilpotentSlice,
            MatrixConstraint::UpperNilpotentSlice => MatrixConstraint::LowerNilpotentSlice,
            c => c,
        };
        MatrixSymbol {
            name: format!("{}^T", self.name),
            entries: [[e[0][0].clone(), e[1][0].clone()], [e[0][1].clone(), e[1][1].clone()]],
            constraint,
        }
    }

    pub fn trace(&self) -> Polynomial {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> Polynomial {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &Vector2) -> Vector2 {
        let e = &self.entries;
        [&(&e[0][0] * &v[0]) + &(&e[0][1] * &v[1]), &(&e[1][0] * &v[0]) + &(&e[1][1] * &v[1])]
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &Vector2) -> Vector2 {
        let e = &self.entries;
        [&(&v[0] * &e[0][0]) + &(&v[1] * &e[1][0]), &(&v[0] * &e[0][1]) + &(&v[1] * &e[1][1])]
    }

    pub fn column(&self, j: usize) -> Vector2 {
        [self.entries[0][j].clone(), self.entries[1][j].clone()]
    }

    pub fn row(&self, i: usize) -> Vector2 {
        self.entries[i].clone()
    }

    /// Applies a ring map entrywise; the result lives in the map's target.
    pub fn map_entries(&self, map: &RingMap) -> Result<MatrixSymbol> {
        let e = |i: usize, j: usize| map.apply(&self.entries[i][j]);
        Ok(MatrixSymbol {
            name: self.name.clone(),
            entries: [[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]],
            constraint: self.constraint,
        })
    }
}

impl fmt::Display for MatrixSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "{} = [[{}, {}], [{}, {}]]", self.name, e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// `det(u | v)` for column vectors.
pub fn det_columns(u: &Vector2, v: &Vector2) -> Polynomial {
    &(&u[0] * &v[1]) - &(&v[0] * &u[1])
}

/// Ideal cutting out pairs of commuting matrices with all products zero:
/// the entries of `M1²`, `M1·M2`, `M2·M1`, `M2²` and `[M1, M2]`.
pub fn nilpotency_ideal(m1: &MatrixSymbol, m2: &MatrixSymbol) -> Result<Ideal> {
    let ring = m1.ring().clone();
    ring.check_same(m2.ring())?;
    let mut gens = Vec::new();
    for m in [m1.mul(m1), m1.mul(m2), m2.mul(m1), m2.mul(m2), m1.commutator(m2)] {
        gens.extend(m.entries().into_iter().filter(|p| !p.is_zero()));
    }
    Ideal::new(&ring, gens)
}

pub fn mat2(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    [
        [Coeff::from_integer(a.into()), Coeff::from_integer(b.into())],
        [Coeff::from_integer(c.into()), Coeff::from_integer(d.into())],
    ]
}

pub fn mat2_det(m: &Mat2) -> Coeff {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// Inverse of an invertible rational 2×2 matrix.
pub fn mat2_inverse(m: &Mat2) -> Option<Mat2> {
    let d = mat2_det(m);
    if d.is_zero() {
        return None;
    }
    let inv = Coeff::one() / d;
    Some([[&m[1][1] * &inv, -(&m[0][1] * &inv)], [-(&m[1][0] * &inv), &m[0][0] * &inv]])
}

pub fn mat2_scalar(t: Coeff) -> Mat2 {
    [[t.clone(), Coeff::zero()], [Coeff::zero(), t]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ring() -> Ring {
        let mut names: Vec<String> = traceless_coordinates("A1").to_vec();
        names.extend(traceless_coordinates("A2"));
        names.extend(["a", "b", "c", "d"].map(String::from));
        Ring::grevlex(&names).unwrap()
    }

    #[test]
    fn traceless_has_zero_trace() {
        let r = ring();
        let a = MatrixSymbol::traceless("A1", &r).unwrap();
        assert!(a.trace().is_zero());
        assert_eq!(a.entry(1, 1), &-Polynomial::var(&r, "A1_11").unwrap());
        // A² = -det(A)·Id for traceless A
        let sq = a.mul(&a);
        assert_eq!(sq.entry(0, 0), &-a.det());
        assert!(sq.entry(0, 1).is_zero());
    }

    #[test]
    fn constraint_is_enforced() {
        let r = ring();
        let x = Polynomial::var(&r, "a").unwrap();
        let z = Polynomial::zero(&r);
        let bad = MatrixSymbol::from_entries("M", [[x.clone(), z.clone()], [z, x]], MatrixConstraint::Traceless);
        assert!(bad.is_err());
    }

    #[test]
    fn slice_matrices_square_to_zero() {
        let r = ring();
        let a = MatrixSymbol::lower_slice("A", &r, "a").unwrap();
        let b = MatrixSymbol::upper_slice("B", &r, "b").unwrap();
        assert!(a.mul(&a).entries().iter().all(Polynomial::is_zero));
        assert_eq!(a.transpose().constraint(), MatrixConstraint::UpperNilpotentSlice);
        assert_eq!(b.mul(&a).trace(), parse_polynomial("a*b", &r).unwrap());
    }

    #[test]
    fn nilpotency_ideal_contains_determinants() {
        let r = ring();
        let a1 = MatrixSymbol::traceless("A1", &r).unwrap();
        let a2 = MatrixSymbol::traceless("A2", &r).unwrap();
        let n = nilpotency_ideal(&a1, &a2).unwrap();
        assert!(n.contains(&a1.det()).unwrap());
        assert!(n.contains(&a2.det()).unwrap());
        assert!(!n.contains(&Polynomial::var(&r, "A1_12").unwrap()).unwrap());
    }

    #[test]
    fn inverse_and_det() {
        let g = mat2(2, 1, 3, 2);
        let h = mat2_inverse(&g).unwrap();
        assert_eq!(h, mat2(2, -1, -3, 2));
        assert!(mat2_inverse(&mat2(1, 2, 2, 4)).is_none());
    }
}
