use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::matrix::{
    det_columns, mat2_inverse, mat2_scalar, nilpotency_ideal, traceless_coordinates, Mat2, MatrixSymbol,
};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};
use crate::polyring::{integer, Coeff, Polynomial, Ring};

/// A named invariant together with its expansion in ambient coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedGenerator {
    name: String,
    expression: Polynomial,
}

impl NamedGenerator {
    pub fn new(name: &str, expression: Polynomial) -> Result<NamedGenerator> {
        if expression.is_zero() {
            return Err(Error::NotSemiInvariant(format!("generator {name} is zero")));
        }
        Ok(NamedGenerator { name: name.to_string(), expression })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn expression(&self) -> &Polynomial {
        &self.expression
    }
}

impl fmt::Display for NamedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.expression)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// A copy of ℂ*, acting diagonally.
    Torus,
    /// `GL_dim`, acting linearly on the ambient coordinates.
    General { dim: u32 },
}

/// An element of a group factor: a scalar for ℂ*, a matrix for `GL_2`.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupElement {
    Scalar(Coeff),
    Matrix(Mat2),
}

type Action = dyn Fn(&GroupElement) -> Result<RingMap> + Send + Sync;

/// One factor of a product group acting on an ambient ring by linear
/// substitutions.
#[derive(Clone)]
pub struct GroupFactor {
    name: String,
    kind: FactorKind,
    action: Arc<Action>,
}

impl fmt::Debug for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupFactor").field("name", &self.name).field("kind", &self.kind).finish()
    }
}

impl GroupFactor {
    pub fn new(
        name: &str,
        kind: FactorKind,
        action: impl Fn(&GroupElement) -> Result<RingMap> + Send + Sync + 'static,
    ) -> GroupFactor {
        GroupFactor { name: name.to_string(), kind, action: Arc::new(action) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    /// The substitution by which `g` acts on the ambient ring.
    pub fn act(&self, g: &GroupElement) -> Result<RingMap> {
        (self.action)(g)
    }

    /// The scalar element `2` (for ℂ*) or `2·Id` (for `GL`).
    fn probe(&self) -> GroupElement {
        match self.kind {
            FactorKind::Torus => GroupElement::Scalar(integer(2)),
            FactorKind::General { .. } => GroupElement::Matrix(mat2_scalar(integer(2))),
        }
    }

    /// Exponents `e_i` with `x_i ↦ t^{e_i}·x_i` under the scalar `t`.
    pub fn scalar_exponents(&self) -> Result<Vec<i64>> {
        let map = self.act(&self.probe())?;
        let ring = map.source().clone();
        let mut out = Vec::with_capacity(ring.nvars());
        for (i, img) in map.images().iter().enumerate() {
            let x = Polynomial::var_index(&ring, i);
            let bad = || Error::NotSemiInvariant(format!("{} does not act diagonally on {}", self.name, x));
            if img.len() != 1 || img.leading_monomial() != x.leading_monomial() {
                return Err(bad());
            }
            out.push(power_of_two(img.leading_coeff().unwrap()).ok_or_else(bad)?);
        }
        Ok(out)
    }
}

/// `k` with `c = 2^k`, if any.
fn power_of_two(c: &Coeff) -> Option<i64> {
    if !c.is_positive() {
        return None;
    }
    let (mut n, mut d) = (c.numer().clone(), c.denom().clone());
    let two = num_bigint::BigInt::from(2);
    let mut k = 0i64;
    while (&n % &two).is_zero() {
        n /= &two;
        k += 1;
    }
    while (&d % &two).is_zero() {
        d /= &two;
        k -= 1;
    }
    (n.is_one() && d.is_one()).then_some(k)
}

/// The exponent `d` with `gen ↦ t^d·gen` under the scalars of `factor`;
/// for a `GL_n` factor the exponent is divided by `n`, giving the power of
/// the determinant character.
pub fn scalar_equivariance(gen: &NamedGenerator, factor: &GroupFactor) -> Result<i64> {
    let e = factor.scalar_exponents()?;
    let f = gen.expression();
    let mut degrees =
        f.terms().iter().map(|(m, _)| m.exponents().iter().zip(&e).map(|(&a, &w)| i64::from(a) * w).sum::<i64>());
    let d = degrees.next().ok_or_else(|| Error::NotSemiInvariant(gen.name().to_string()))?;
    if degrees.any(|x| x != d) {
        return Err(Error::NotSemiInvariant(format!("{} is not homogeneous for {}", gen.name(), factor.name())));
    }
    match factor.kind() {
        FactorKind::Torus => Ok(d),
        FactorKind::General { dim } => {
            let dim = i64::from(dim);
            if d % dim != 0 {
                return Err(Error::NotSemiInvariant(format!(
                    "{} has scalar weight {d}, not a multiple of {dim}",
                    gen.name()
                )));
            }
            Ok(d / dim)
        }
    }
}

/// Is `gen` fixed by the matrix `g` of `factor`, modulo `relations`?
pub fn is_invariant_under(
    gen: &NamedGenerator,
    factor: &GroupFactor,
    g: &Mat2,
    relations: Option<&Ideal>,
) -> Result<bool> {
    let moved = factor.act(&GroupElement::Matrix(g.clone()))?.apply(gen.expression())?;
    let diff = &moved - gen.expression();
    match relations {
        Some(rel) => Ok(rel.normal_form(&diff)?.is_zero()),
        None => Ok(diff.is_zero()),
    }
}

/// Kernel of `name ↦ expression` modulo the ambient relations, in a
/// grevlex ring on the generator names.
pub fn relation_ideal(gens: &[NamedGenerator], ambient_relations: &Ideal) -> Result<Ideal> {
    let names: Vec<&str> = gens.iter().map(NamedGenerator::name).collect();
    let source = Ring::grevlex(&names)?;
    let images = gens.iter().map(|g| g.expression().clone()).collect();
    let map = RingMap::new(&source, ambient_relations.ring(), images)?.with_relations(ambient_relations.clone())?;
    map.kernel()
}

/// The invariant systems addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalCase {
    /// `SL(Q)`-invariants of two vectors and a commuting nilpotent pair.
    XiHalf,
    /// `SL(V) × SL(Q)`-invariants when both sides carry a nilpotent pair.
    ZetaFull,
    /// Adjoint `SL_2`-invariants of four matrices.
    TraceSl2,
}

impl ClassicalCase {
    pub const ALL: [ClassicalCase; 3] = [ClassicalCase::XiHalf, ClassicalCase::ZetaFull, ClassicalCase::TraceSl2];

    pub fn id(self) -> &'static str {
        match self {
            ClassicalCase::XiHalf => "xi-half",
            ClassicalCase::ZetaFull => "zeta-full",
            ClassicalCase::TraceSl2 => "trace-sl2",
        }
    }
}

impl FromStr for ClassicalCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassicalCase::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

impl fmt::Display for ClassicalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Ambient coordinates, matrices, relations, group factors and generators of
/// one invariant-theoretic setup.
#[derive(Debug, Clone)]
pub struct ClassicalSystem {
    pub ambient: Ring,
    pub matrices: Vec<MatrixSymbol>,
    pub ambient_relations: Ideal,
    pub factors: Vec<GroupFactor>,
    pub generators: Vec<NamedGenerator>,
}

impl ClassicalSystem {
    pub fn build(case: ClassicalCase) -> Result<ClassicalSystem> {
        match case {
            ClassicalCase::XiHalf => xi_system(false),
            ClassicalCase::ZetaFull => zeta_system(),
            ClassicalCase::TraceSl2 => trace_system(),
        }
    }

    /// The mirror of [`ClassicalCase::XiHalf`]: nilpotent pair on the source
    /// side, row vectors, every matrix transposed.
    pub fn xi_half_transposed() -> Result<ClassicalSystem> {
        xi_system(true)
    }

    pub fn matrix(&self, name: &str) -> Option<&MatrixSymbol> {
        self.matrices.iter().find(|m| m.name() == name)
    }

    pub fn factor(&self, name: &str) -> Option<&GroupFactor> {
        self.factors.iter().find(|f| f.name() == name)
    }

    pub fn generator(&self, name: &str) -> Option<&NamedGenerator> {
        self.generators.iter().find(|g| g.name() == name)
    }
}

pub fn classical_generators(case_id: &str) -> Result<Vec<NamedGenerator>> {
    Ok(ClassicalSystem::build(case_id.parse()?)?.generators)
}

const Z: [[&str; 2]; 2] = [["z11", "z12"], ["z21", "z22"]];

fn ring_with(mats: &[&str], extra_first: &[&str]) -> Result<Ring> {
    let mut names: Vec<String> = extra_first.iter().map(|s| s.to_string()).collect();
    for m in mats {
        names.extend(traceless_coordinates(m));
    }
    Ring::grevlex(&names)
}

/// Builds the ring map sending each listed matrix's coordinates to the
/// corresponding entries of its image; other variables are fixed.
fn substitution(ring: &Ring, moved: &[(&MatrixSymbol, MatrixSymbol)]) -> Result<RingMap> {
    let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var_index(ring, i)).collect();
    for (orig, img) in moved {
        for r in 0..2 {
            for c in 0..2 {
                let e = orig.entry(r, c);
                // only pure coordinate entries name a variable; (2,2) of a traceless matrix is derived
                if e.len() == 1 && e.total_degree() == Some(1) && e.leading_coeff().is_some_and(One::is_one) {
                    let v = e.support()[0];
                    images[v] = img.entry(r, c).clone();
                }
            }
        }
    }
    RingMap::new(ring, ring, images)
}

fn scale_vars(ring: &Ring, vars: &[&str], t: &Coeff) -> Result<RingMap> {
    let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var_index(ring, i)).collect();
    for v in vars {
        let i = ring.require_index(v)?;
        images[i] = images[i].scale(t);
    }
    RingMap::new(ring, ring, images)
}

fn expect_matrix(g: &GroupElement) -> Result<(Mat2, Mat2)> {
    match g {
        GroupElement::Matrix(m) => {
            let inv = mat2_inverse(m).ok_or_else(|| Error::InvalidMap("singular group element".into()))?;
            Ok((m.clone(), inv))
        }
        GroupElement::Scalar(_) => Err(Error::InvalidMap("expected a matrix group element".into())),
    }
}

fn expect_scalar(g: &GroupElement) -> Result<Coeff> {
    match g {
        GroupElement::Scalar(t) if !t.is_zero() => Ok(t.clone()),
        _ => Err(Error::InvalidMap("expected a nonzero scalar group element".into())),
    }
}

/// `ψ ↦ g·ψ` on the `Z` block and `A ↦ g·A·g⁻¹` on the given matrices.
fn left_action(ring: &Ring, zmat: &MatrixSymbol, conj: &[MatrixSymbol]) -> GroupFactor {
    let (ring, zmat, conj) = (ring.clone(), zmat.clone(), conj.to_vec());
    GroupFactor::new("GL(Q)", FactorKind::General { dim: 2 }, move |g| {
        let (g, gi) = expect_matrix(g)?;
        let gm = MatrixSymbol::constant("g", &ring, &g);
        let gim = MatrixSymbol::constant("g^-1", &ring, &gi);
        let mut moved = vec![(&zmat, gm.mul(&zmat))];
        for a in &conj {
            moved.push((a, gm.mul(a).mul(&gim)));
        }
        substitution(&ring, &moved)
    })
}

/// `ψ ↦ ψ·h⁻¹` on the `Z` block and `B ↦ h·B·h⁻¹` on the given matrices.
fn right_action(ring: &Ring, zmat: &MatrixSymbol, conj: &[MatrixSymbol]) -> GroupFactor {
    let (ring, zmat, conj) = (ring.clone(), zmat.clone(), conj.to_vec());
    GroupFactor::new("GL(V)", FactorKind::General { dim: 2 }, move |h| {
        let (h, hi) = expect_matrix(h)?;
        let hm = MatrixSymbol::constant("h", &ring, &h);
        let him = MatrixSymbol::constant("h^-1", &ring, &hi);
        let mut moved = vec![(&zmat, zmat.mul(&him))];
        for b in &conj {
            moved.push((b, hm.mul(b).mul(&him)));
        }
        substitution(&ring, &moved)
    })
}

fn torus(ring: &Ring, name: &str, vars: [&'static str; 2], exponent: i32) -> GroupFactor {
    let ring = ring.clone();
    GroupFactor::new(name, FactorKind::Torus, move |t| {
        let t = expect_scalar(t)?;
        let s = if exponent >= 0 { t.pow(exponent) } else { Coeff::one() / t.pow(-exponent) };
        scale_vars(&ring, &vars, &s)
    })
}

fn gen(name: &str, f: Polynomial) -> Result<NamedGenerator> {
    NamedGenerator::new(name, f)
}

/// ξ₀..ξ₆ built from two vectors and two matrices, in either orientation.
fn xi_generators(
    w1: &[Polynomial; 2],
    w2: &[Polynomial; 2],
    m1: &MatrixSymbol,
    m2: &MatrixSymbol,
    rows: bool,
) -> Result<Vec<NamedGenerator>> {
    let act = |m: &MatrixSymbol, w: &[Polynomial; 2]| if rows { m.apply_row(w) } else { m.apply(w) };
    Ok(vec![
        gen("xi0", det_columns(w1, w2))?,
        gen("xi1", det_columns(&act(m1, w1), w1))?,
        gen("xi2", det_columns(&act(m2, w1), w1))?,
        gen("xi3", det_columns(&act(m1, w1), w2))?,
        gen("xi4", det_columns(&act(m2, w1), w2))?,
        gen("xi5", det_columns(&act(m1, w2), w2))?,
        gen("xi6", det_columns(&act(m2, w2), w2))?,
    ])
}

fn xi_system(transposed: bool) -> Result<ClassicalSystem> {
    let (m1n, m2n) = if transposed { ("B1", "B2") } else { ("A1", "A2") };
    let ring = ring_with(&[m1n, m2n], &["z11", "z12", "z21", "z22"])?;
    let zmat = MatrixSymbol::free("Z", &ring, Z)?;
    let m1 = MatrixSymbol::traceless(m1n, &ring)?;
    let m2 = MatrixSymbol::traceless(m2n, &ring)?;
    let relations = nilpotency_ideal(&m1, &m2)?;
    let (generators, factors) = if transposed {
        let (u1, u2) = (zmat.row(0), zmat.row(1));
        (
            xi_generators(&u1, &u2, &m1, &m2, true)?,
            vec![
                torus(&ring, "C*(u1)", ["z11", "z12"], 1),
                torus(&ring, "C*(u2)", ["z21", "z22"], 1),
                right_action(&ring, &zmat, &[m1.clone(), m2.clone()]),
            ],
        )
    } else {
        let (v1, v2) = (zmat.column(0), zmat.column(1));
        (
            xi_generators(&v1, &v2, &m1, &m2, false)?,
            vec![
                torus(&ring, "C*(v1)", ["z11", "z21"], -1),
                torus(&ring, "C*(v2)", ["z12", "z22"], -1),
                left_action(&ring, &zmat, &[m1.clone(), m2.clone()]),
            ],
        )
    };
    Ok(ClassicalSystem {
        ambient: ring,
        matrices: vec![zmat, m1, m2],
        ambient_relations: relations,
        factors,
        generators,
    })
}

/// `X = [[ξ_c, ξ_e], [−ξ_a, −ξ_c]]`, the matrix through which `GL(V)` acts
/// on a triple of ξ's.
pub fn x_matrix(name: &str, a: &Polynomial, c: &Polynomial, e: &Polynomial) -> Result<MatrixSymbol> {
    MatrixSymbol::from_entries(
        name,
        [[c.clone(), e.clone()], [-a.clone(), -c.clone()]],
        super::matrix::MatrixConstraint::Traceless,
    )
}

fn zeta_system() -> Result<ClassicalSystem> {
    let ring = ring_with(&["A1", "A2", "B1", "B2"], &["z11", "z12", "z21", "z22"])?;
    let zmat = MatrixSymbol::free("Z", &ring, Z)?;
    let a1 = MatrixSymbol::traceless("A1", &ring)?;
    let a2 = MatrixSymbol::traceless("A2", &ring)?;
    let b1 = MatrixSymbol::traceless("B1", &ring)?;
    let b2 = MatrixSymbol::traceless("B2", &ring)?;
    let relations = nilpotency_ideal(&a1, &a2)?.sum(&nilpotency_ideal(&b1, &b2)?)?;
    let xi = xi_generators(&zmat.column(0), &zmat.column(1), &a1, &a2, false)?;
    let x = |i: usize| xi[i].expression();
    let x1 = x_matrix("X1", x(1), x(3), x(5))?;
    let x2 = x_matrix("X2", x(2), x(4), x(6))?;
    let generators = vec![
        gen("zeta0", x(0).clone())?,
        gen("zeta1", b1.mul(&x1).trace())?,
        gen("zeta2", b2.mul(&x1).trace())?,
        gen("zeta3", b1.mul(&x2).trace())?,
        gen("zeta4", b2.mul(&x2).trace())?,
    ];
    let factors = vec![
        right_action(&ring, &zmat, &[b1.clone(), b2.clone()]),
        left_action(&ring, &zmat, &[a1.clone(), a2.clone()]),
    ];
    Ok(ClassicalSystem {
        ambient: ring,
        matrices: vec![zmat, a1, a2, b1, b2],
        ambient_relations: relations,
        factors,
        generators,
    })
}

/// Entries of `Z1..Z4` in the deformation coordinates `z1..z8`, `w1..w8`.
pub const TRACE_MATRICES: [(&str, [[&str; 2]; 2]); 4] = [
    ("Z1", [["z1", "z3"], ["z5", "z7"]]),
    ("Z2", [["z2", "z4"], ["z6", "z8"]]),
    ("Z3", [["w1", "w3"], ["w5", "w7"]]),
    ("Z4", [["w2", "w4"], ["w6", "w8"]]),
];

fn trace_system() -> Result<ClassicalSystem> {
    let names: Vec<String> = (1..=8).map(|i| format!("z{i}")).chain((1..=8).map(|i| format!("w{i}"))).collect();
    let ring = Ring::grevlex(&names)?;
    let mats = TRACE_MATRICES.iter().map(|(n, e)| MatrixSymbol::free(n, &ring, *e)).collect::<Result<Vec<_>>>()?;
    let tr = |i: usize, j: usize| mats[i].mul(&mats[j]).trace();
    let generators = vec![gen("t1", tr(0, 2))?, gen("t2", tr(0, 3))?, gen("t3", tr(1, 2))?, gen("t4", tr(1, 3))?];
    let factor = {
        let (ring, mats) = (ring.clone(), mats.clone());
        GroupFactor::new("SL(2)", FactorKind::General { dim: 2 }, move |t| {
            let (g, gi) = expect_matrix(t)?;
            let gm = MatrixSymbol::constant("T", &ring, &g);
            let gim = MatrixSymbol::constant("T^-1", &ring, &gi);
            let moved: Vec<(&MatrixSymbol, MatrixSymbol)> = mats.iter().map(|m| (m, gm.mul(m).mul(&gim))).collect();
            substitution(&ring, &moved)
        })
    };
    Ok(ClassicalSystem {
        ambient_relations: Ideal::zero(&ring),
        ambient: ring,
        matrices: mats,
        factors: vec![factor],
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::matrix::mat2;
    use crate::polyring::parse_polynomial;

    #[test]
    fn xi0_is_the_determinant() {
        let s = ClassicalSystem::build(ClassicalCase::XiHalf).unwrap();
        let expected = parse_polynomial("z11*z22 - z21*z12", &s.ambient).unwrap();
        assert_eq!(s.generator("xi0").unwrap().expression(), &expected);
    }

    #[test]
    fn traceless_trace_vanishes() {
        let s = ClassicalSystem::build(ClassicalCase::ZetaFull).unwrap();
        assert!(s.matrix("B1").unwrap().trace().is_zero());
    }

    #[test]
    fn case_ids_round_trip() {
        for c in ClassicalCase::ALL {
            assert_eq!(c.id().parse::<ClassicalCase>().unwrap(), c);
        }
        assert!(matches!("xi-full".parse::<ClassicalCase>(), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn power_of_two_detection() {
        assert_eq!(power_of_two(&integer(8)), Some(3));
        assert_eq!(power_of_two(&(Coeff::one() / integer(4))), Some(-2));
        assert_eq!(power_of_two(&integer(6)), None);
        assert_eq!(power_of_two(&integer(-2)), None);
    }

    #[test]
    fn scalar_weights_of_xi0() {
        let s = ClassicalSystem::build(ClassicalCase::XiHalf).unwrap();
        let xi0 = s.generator("xi0").unwrap();
        let w: Vec<i64> = s.factors.iter().map(|f| scalar_equivariance(xi0, f).unwrap()).collect();
        assert_eq!(w, vec![-1, -1, 1]);
    }

    #[test]
    fn non_semi_invariant_rejected() {
        let s = ClassicalSystem::build(ClassicalCase::XiHalf).unwrap();
        let f = parse_polynomial("z11 + z12^2", &s.ambient).unwrap();
        let g = NamedGenerator::new("f", f).unwrap();
        assert!(matches!(scalar_equivariance(&g, &s.factors[2]), Err(Error::NotSemiInvariant(_))));
    }

    #[test]
    fn trace_generators_are_adjoint_invariant() {
        let s = ClassicalSystem::build(ClassicalCase::TraceSl2).unwrap();
        let g = mat2(2, 1, 1, 1);
        for t in &s.generators {
            assert!(is_invariant_under(t, &s.factors[0], &g, None).unwrap());
        }
        // a non-invariant coordinate moves
        let z3 = NamedGenerator::new("z3", Polynomial::var(&s.ambient, "z3").unwrap()).unwrap();
        assert!(!is_invariant_under(&z3, &s.factors[0], &g, None).unwrap());
    }
}
