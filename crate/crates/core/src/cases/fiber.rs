//! The four fiber cases: coordinates, group data, semi-invariant rings and
//! the classification of the resulting projective schemes.

use std::fmt;
use std::str::FromStr;

use super::certificate::{Certificate, CheckRunner};
use super::fixtures;
use crate::error::{Error, Result};
use crate::groebner::{elimination_ideal, hilbert_series, quadratic_rank, HilbertSeries, Ideal, RingMap};
use crate::invariants::{
    is_invariant_under, mat2, relation_ideal, scalar_equivariance, ClassicalCase, ClassicalSystem, Mat2, MatrixSymbol,
    NamedGenerator, TorusWeightSystem,
};
use crate::polyring::{parse_polynomial, rational, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorsionType {
    Generic,
    PTorsion,
    LTorsion,
    BothTorsion,
}

impl TorsionType {
    pub const ALL: [TorsionType; 4] =
        [TorsionType::BothTorsion, TorsionType::Generic, TorsionType::LTorsion, TorsionType::PTorsion];

    pub fn id(self) -> &'static str {
        match self {
            TorsionType::Generic => "generic",
            TorsionType::PTorsion => "p-torsion",
            TorsionType::LTorsion => "l-torsion",
            TorsionType::BothTorsion => "both-torsion",
        }
    }

    pub fn case_id(self) -> String {
        format!("fiber:{}", self.id())
    }
}

impl FromStr for TorsionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TorsionType::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

impl fmt::Display for TorsionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// How the group acts: a torus with explicit weights, or a list of
/// factors acting by substitution.
#[derive(Debug, Clone)]
pub enum Symmetry {
    Torus(TorusWeightSystem),
    Factors(ClassicalSystem),
}

/// Coordinates, relations, group and character of one fiber.
#[derive(Debug, Clone)]
pub struct GitCase {
    pub torsion: TorsionType,
    pub ambient: Ring,
    pub nilpotency: Ideal,
    pub symmetry: Symmetry,
    /// Names of the group factors, in the order of `chi`.
    pub factor_names: Vec<String>,
    pub chi: Vec<i64>,
}

pub fn build_git_case(torsion: TorsionType) -> Result<GitCase> {
    let (system, chi) = match torsion {
        TorsionType::Generic => {
            let ring = Ring::grevlex(&["z11", "z12", "z21", "z22"])?;
            // g = (t1, t2, s1, s2) scales z_ij by t_j^-1 s_i
            let ws = TorusWeightSystem::new(
                &ring,
                vec![vec![-1, 0, 1, 0], vec![0, -1, 1, 0], vec![-1, 0, 0, 1], vec![0, -1, 0, 1]],
                vec![-1, -1, 1, 1],
            )?;
            return Ok(GitCase {
                torsion,
                nilpotency: Ideal::zero(&ring),
                ambient: ring,
                chi: ws.chi().to_vec(),
                symmetry: Symmetry::Torus(ws),
                factor_names: ["C*(t1)", "C*(t2)", "C*(s1)", "C*(s2)"].map(String::from).to_vec(),
            });
        }
        TorsionType::PTorsion => (ClassicalSystem::build(ClassicalCase::XiHalf)?, vec![-1, -1, 1]),
        TorsionType::LTorsion => (ClassicalSystem::xi_half_transposed()?, vec![1, 1, -1]),
        TorsionType::BothTorsion => (ClassicalSystem::build(ClassicalCase::ZetaFull)?, vec![-1, 1]),
    };
    Ok(GitCase {
        torsion,
        ambient: system.ambient.clone(),
        nilpotency: system.ambient_relations.clone(),
        factor_names: system.factors.iter().map(|f| f.name().to_string()).collect(),
        chi,
        symmetry: Symmetry::Factors(system),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    P1,
    P2,
    QuadricConeP4,
}

impl Classification {
    pub fn label(self) -> &'static str {
        match self {
            Classification::P1 => "P1",
            Classification::P2 => "P2",
            Classification::QuadricConeP4 => "quadric-cone-P4",
        }
    }
}

/// Decides the classification from the Hilbert series of the semi-invariant
/// ring and, for a hypersurface, the rank of its quadric.
pub fn classify(relations: &Ideal, hilbert: &HilbertSeries) -> Result<Option<Classification>> {
    let n = relations.ring().nvars();
    if hilbert.numerator() == [1] {
        return Ok(match (hilbert.dimension(), n) {
            (2, 2) => Some(Classification::P1),
            (3, 3) => Some(Classification::P2),
            _ => None,
        });
    }
    if hilbert.numerator() == [1, 1] && hilbert.dimension() == 4 && n == 5 {
        let gb = relations.groebner_basis();
        if gb.len() == 1 && quadratic_rank(&gb[0])? == 4 {
            return Ok(Some(Classification::QuadricConeP4));
        }
    }
    Ok(None)
}

/// The semi-invariant ring as generators and relations, with its evidence.
#[derive(Debug, Clone)]
pub struct FiberPresentation {
    pub generators: Vec<NamedGenerator>,
    pub relations: Ideal,
    pub hilbert: HilbertSeries,
    pub classification: Classification,
    pub ss_locus_ideal: Ideal,
}

#[derive(Debug, Clone)]
pub struct FiberOutcome {
    pub presentation: Option<FiberPresentation>,
    pub certificate: Certificate,
}

/// Sample elements of `SL_2(Q)` used in the certificates.
pub fn sl2_samples() -> Vec<Mat2> {
    let mut third = mat2(3, 0, 0, 0);
    third[1][1] = rational(1, 3);
    vec![mat2(1, 1, 0, 1), mat2(1, 0, -2, 1), mat2(2, 3, 1, 2), third]
}

pub(crate) fn same_ideal_detail(a: &Ideal, b: &Ideal) -> Result<(bool, String)> {
    if let Some(f) = b.first_non_member(a.generators())? {
        return Ok((false, format!("{f} is not in the reference ideal")));
    }
    if let Some(f) = a.first_non_member(b.generators())? {
        return Ok((false, format!("reference generator {f} is not in the computed ideal")));
    }
    Ok((true, format!("{a}")))
}

/// Ring of named generators, in the given order.
fn generator_ring(names: &[&str], order: MonomialOrder) -> Result<Ring> {
    Ring::new(names, order)
}

pub fn verify_fiber(torsion: TorsionType) -> Result<FiberOutcome> {
    let case = build_git_case(torsion)?;
    match torsion {
        TorsionType::Generic => verify_generic(&case),
        TorsionType::PTorsion | TorsionType::LTorsion => verify_xi(&case),
        TorsionType::BothTorsion => verify_zeta(&case),
    }
}

fn verify_generic(case: &GitCase) -> Result<FiberOutcome> {
    let Symmetry::Torus(ws) = &case.symmetry else { unreachable!() };
    let ring = &case.ambient;
    let xi1 = NamedGenerator::new("xi1", parse_polynomial("z11*z22", ring)?)?;
    let xi2 = NamedGenerator::new("xi2", parse_polynomial("z12*z21", ring)?)?;
    let gens = vec![xi1.clone(), xi2.clone()];
    let mut run = CheckRunner::new();

    run.run("semi-invariants", "degree-one semi-invariants are z11*z22 and z12*z21", || {
        let basis = ws.semi_invariant_basis(1, 4);
        let expected = [xi2.expression().leading_monomial().unwrap(), xi1.expression().leading_monomial().unwrap()];
        let ok = basis.len() == 2 && expected.iter().all(|m| basis.contains(m));
        let shown: Vec<String> = basis.iter().map(|m| Polynomial::format_monomial(ring, m)).collect();
        Ok((ok, shown.join(", ")))
    });
    run.run("generation", "the semi-invariant ring is generated by xi1 and xi2", || {
        Ok((crate::invariants::check_generation(&gens, ws, 3, 6)?, "checked through chi^3".into()))
    });
    run.run("graded-dimensions", "the n-th graded piece has dimension n+1", || {
        let dims: Vec<usize> = (0..=5).map(|n| ws.semi_invariant_basis(n, 2 * n).len()).collect();
        Ok((dims.iter().enumerate().all(|(n, &d)| d == n + 1), format!("{dims:?}")))
    });
    let xring = generator_ring(&["xi1", "xi2"], MonomialOrder::GrevLex)?;
    let rel = relation_ideal(&gens, &case.nilpotency);
    run.run("relations", "xi1 and xi2 are algebraically independent", || {
        let rel = match &rel {
            Ok(r) => r,
            Err(e) => return Ok((false, format!("error: {e}"))),
        };
        Ok((rel.is_zero(), format!("kernel {rel}")))
    });
    let relations = rel.unwrap_or_else(|_| Ideal::zero(&xring));
    let hilbert = hilbert_series(&relations)?;
    let class = classify(&relations, &hilbert)?;
    run.run("classification", "the fiber is a projective line", || {
        Ok((class == Some(Classification::P1), format!("Hilbert series {hilbert}")))
    });
    // strictly semistable: some entry of the matrix vanishes
    let entries = parse_polynomial("z11*z12*z21*z22", ring)?;
    let map = RingMap::new(&xring, ring, gens.iter().map(|g| g.expression().clone()).collect())?;
    let ss = map.preimage(&Ideal::new(ring, vec![entries])?)?;
    run.run("ss-locus", "the strictly semistable locus xi1*xi2 = 0 is two points", || {
        let expected = Ideal::new(&xring, vec![parse_polynomial("xi1*xi2", &xring)?])?;
        let (same, detail) = same_ideal_detail(&ss, &expected)?;
        let split = Ideal::of_variables(&xring, &["xi1"])?.intersection(&Ideal::of_variables(&xring, &["xi2"])?)?;
        let h = hilbert_series(&ss)?;
        let two_points = h.dimension() == 1 && h.degree() == 2 && split.same_ideal(&ss)?;
        Ok((same && two_points, format!("{detail}; Hilbert series {h}")))
    });

    let presentation = class.map(|classification| FiberPresentation {
        generators: gens,
        relations,
        hilbert,
        classification,
        ss_locus_ideal: ss,
    });
    Ok(FiberOutcome { presentation, certificate: run.finish(&case.torsion.case_id()) })
}

/// Expected weight table `(generator, weights)` for the nilpotent-pair
/// fiber, in the order of the group factors; the mirrored case negates it.
pub const XI_WEIGHT_TABLE: [(&str, [i64; 3]); 7] = [
    ("xi0", [-1, -1, 1]),
    ("xi1", [-2, 0, 1]),
    ("xi2", [-2, 0, 1]),
    ("xi3", [-1, -1, 1]),
    ("xi4", [-1, -1, 1]),
    ("xi5", [0, -2, 1]),
    ("xi6", [0, -2, 1]),
];

/// Computed weights of every generator against every factor.
pub fn weight_table(system: &ClassicalSystem) -> Result<Vec<(String, Vec<i64>)>> {
    system
        .generators
        .iter()
        .map(|g| {
            let w = system.factors.iter().map(|f| scalar_equivariance(g, f)).collect::<Result<Vec<_>>>()?;
            Ok((g.name().to_string(), w))
        })
        .collect()
}

/// Ring `[xi1, xi2, xi5, xi6 | xi0, xi3, xi4]` with the first block eliminated
/// first, so that normal forms are expressed in `xi0, xi3, xi4` where possible.
pub fn xi_normal_form_ring() -> Result<Ring> {
    generator_ring(
        &["xi1", "xi2", "xi5", "xi6", "xi0", "xi3", "xi4"],
        MonomialOrder::block(4, MonomialOrder::GrevLex, MonomialOrder::GrevLex),
    )
}

/// The four products of weight `chi²` and their expected normal forms.
pub const XI_NORMAL_FORMS: [(&str, &str); 4] =
    [("xi1*xi5", "xi3^2"), ("xi1*xi6", "xi3*xi4"), ("xi2*xi5", "xi3*xi4"), ("xi2*xi6", "xi4^2")];

fn invariance_check(system: &ClassicalSystem, factor: usize, gens: &[NamedGenerator]) -> Result<(bool, String)> {
    let f = &system.factors[factor];
    for g in sl2_samples() {
        for x in gens {
            if !is_invariant_under(x, f, &g, Some(&system.ambient_relations))? {
                return Ok((false, format!("{} moves under {}", x.name(), f.name())));
            }
        }
    }
    Ok((true, format!("{} samples of SL under {}", sl2_samples().len(), f.name())))
}

/// Substitutes the slice matrices into a system's generators.
fn slice_values(system: &ClassicalSystem, slice: &Ring, mats: &[MatrixSymbol]) -> Result<Vec<(String, Polynomial)>> {
    let mut images = Vec::with_capacity(system.ambient.nvars());
    for v in system.ambient.variables() {
        let mut img = slice.index_of(v).map(|i| Polynomial::var_index(slice, i));
        if img.is_none() {
            for m in mats {
                let orig = system.matrix(m.name()).expect("matrix in system");
                for (r, c) in [(0, 0), (0, 1), (1, 0)] {
                    if orig.entry(r, c) == &Polynomial::var(&system.ambient, v)? {
                        img = Some(m.entry(r, c).clone());
                    }
                }
            }
        }
        images.push(img.ok_or_else(|| Error::InvalidMap(format!("no slice value for {v}")))?);
    }
    let map = RingMap::new(&system.ambient, slice, images)?;
    system.generators.iter().map(|g| Ok((g.name().to_string(), map.apply(g.expression())?))).collect()
}

fn verify_xi(case: &GitCase) -> Result<FiberOutcome> {
    let Symmetry::Factors(system) = &case.symmetry else { unreachable!() };
    let mirrored = case.torsion == TorsionType::LTorsion;
    let sign = if mirrored { -1 } else { 1 };
    let mut run = CheckRunner::new();

    run.run("sl-invariance", "the xi are invariants of the special linear factor", || {
        invariance_check(system, 2, &system.generators)
    });
    let table = weight_table(system);
    run.run("weight-table", "weights of the xi with respect to the characters", || {
        let table = match &table {
            Ok(t) => t,
            Err(e) => return Ok((false, format!("error: {e}"))),
        };
        for ((name, w), (ename, ew)) in table.iter().zip(XI_WEIGHT_TABLE) {
            let ew: Vec<i64> = ew.iter().map(|x| sign * x).collect();
            if name != ename || *w != ew {
                return Ok((false, format!("{name}: computed {w:?}, expected {ew:?}")));
            }
        }
        let chi: Vec<i64> = XI_WEIGHT_TABLE[0].1.iter().map(|x| sign * x).collect();
        let shown: Vec<String> = table.iter().map(|(n, w)| format!("{n} {w:?}")).collect();
        Ok((chi == case.chi, format!("{}; chi {:?}", shown.join(", "), case.chi)))
    });

    let rel = relation_ideal(&system.generators, &system.ambient_relations)?;
    let reference = fixtures::load("xi_relations")?;
    let reference = Ideal::new(&reference.ring, reference.generators)?;
    run.run("relations", "the relations among the xi are the six listed quadrics", || {
        same_ideal_detail(&rel, &reference.embed(rel.ring())?)
    });

    // degree-one and degree-two semi-invariants, from the computed weights
    let weights = table.unwrap_or_default();
    let names_with = |w: &dyn Fn(&[i64]) -> bool| -> Vec<String> {
        weights.iter().filter(|(_, x)| w(x)).map(|(n, _)| n.clone()).collect()
    };
    let degree_one = names_with(&|x| x == case.chi.as_slice());
    let nf_ring = xi_normal_form_ring()?;
    let rel_nf = rel.embed(&nf_ring)?;
    run.run("degree-two-normal-forms", "the degree-two invariants are polynomials in xi3 and xi4", || {
        let mut shown = Vec::new();
        for (lhs, rhs) in XI_NORMAL_FORMS {
            let nf = rel_nf.normal_form(&parse_polynomial(lhs, &nf_ring)?)?;
            if nf != parse_polynomial(rhs, &nf_ring)? {
                return Ok((false, format!("{lhs} reduces to {nf}, expected {rhs}")));
            }
            shown.push(format!("{lhs} -> {nf}"));
        }
        // every weight-chi^2 product of two non-degree-one generators is covered
        let mut pairs = Vec::new();
        for (i, (a, wa)) in weights.iter().enumerate() {
            for (b, wb) in &weights[i..] {
                let sum: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                let doubled: Vec<i64> = case.chi.iter().map(|c| 2 * c).collect();
                if sum == doubled && !degree_one.contains(a) && !degree_one.contains(b) {
                    pairs.push(format!("{a}*{b}"));
                }
            }
        }
        let listed: Vec<String> = XI_NORMAL_FORMS.iter().map(|(l, _)| l.to_string()).collect();
        Ok((pairs == listed, format!("degree one: {}; {}", degree_one.join(", "), shown.join(", "))))
    });

    let sub = generator_ring(&["xi0", "xi3", "xi4"], MonomialOrder::GrevLex)?;
    let sub_rel = elimination_ideal(&rel, &["xi0", "xi3", "xi4"])?;
    let relations = sub_rel.embed(&sub)?;
    let hilbert = hilbert_series(&relations)?;
    let class = classify(&relations, &hilbert)?;
    run.run("classification", "the semi-invariant ring is Q[xi0, xi3, xi4], a projective plane", || {
        Ok((
            degree_one == ["xi0", "xi3", "xi4"] && class == Some(Classification::P2),
            format!("Hilbert series {hilbert}"),
        ))
    });

    // normal-form slice A_i = [[0, 0], [a_i, 0]]; the mirrored case uses the transpose
    let slice = Ring::grevlex(&["z11", "z12", "z21", "z22", "a1", "a2"])?;
    let (m1, m2) = if mirrored { ("B1", "B2") } else { ("A1", "A2") };
    let mats = if mirrored {
        vec![MatrixSymbol::upper_slice(m1, &slice, "a1")?, MatrixSymbol::upper_slice(m2, &slice, "a2")?]
    } else {
        vec![MatrixSymbol::lower_slice(m1, &slice, "a1")?, MatrixSymbol::lower_slice(m2, &slice, "a2")?]
    };
    let values = slice_values(system, &slice, &mats)?;
    let value = |n: &str| values.iter().find(|(m, _)| m == n).map(|(_, p)| p.clone()).unwrap();
    let other = if mirrored { "z21" } else { "z12" };
    let slice_ref = format!("on the slice xi3 = -a1*z11*{other} and xi4 = -a2*z11*{other}");
    run.run("ss-slice", &slice_ref, || {
        let expected = [
            ("xi0", "z11*z22 - z21*z12".to_string()),
            ("xi3", format!("-a1*z11*{other}")),
            ("xi4", format!("-a2*z11*{other}")),
        ];
        for (n, e) in &expected {
            if value(n) != parse_polynomial(e, &slice)? {
                return Ok((false, format!("{n} = {} on the slice, expected {e}", value(n))));
            }
        }
        Ok((true, expected.iter().map(|(n, e)| format!("{n} = {e}")).collect::<Vec<_>>().join(", ")))
    });
    let ss = Ideal::new(&sub, vec![Polynomial::var(&sub, "xi3")?, Polynomial::var(&sub, "xi4")?])?;
    run.run("ss-locus", "the strictly semistable locus xi3 = xi4 = 0 is one point", || {
        // on the slice: a1 = a2 = 0 or z11*z_other = 0
        let on_slice = Ideal::new(&slice, vec![value("xi3"), value("xi4")])?;
        let geometric = Ideal::new(&slice, vec![parse_polynomial("a1", &slice)?, parse_polynomial("a2", &slice)?])?
            .intersection(&Ideal::new(&slice, vec![parse_polynomial(&format!("z11*{other}"), &slice)?])?)?;
        let h = hilbert_series(&ss.sum(&relations)?)?;
        let one_point = h.dimension() == 1 && h.degree() == 1;
        Ok((on_slice.same_variety(&geometric)? && one_point, format!("Hilbert series of the locus {h}")))
    });

    let presentation = class.map(|classification| FiberPresentation {
        generators: ["xi0", "xi3", "xi4"].iter().map(|n| system.generator(n).unwrap().clone()).collect(),
        relations,
        hilbert,
        classification,
        ss_locus_ideal: ss,
    });
    Ok(FiberOutcome { presentation, certificate: run.finish(&case.torsion.case_id()) })
}

/// Slice values of the zeta invariants as printed, and as they come out of
/// the definitions (one more power of z11).
pub const ZETA_SLICE_PRINTED: [(&str, &str); 4] =
    [("zeta1", "a1*b1*z11"), ("zeta2", "a1*b2*z11"), ("zeta3", "a2*b1*z11"), ("zeta4", "a2*b2*z11")];
pub const ZETA_SLICE_COMPUTED: [(&str, &str); 4] =
    [("zeta1", "a1*b1*z11^2"), ("zeta2", "a1*b2*z11^2"), ("zeta3", "a2*b1*z11^2"), ("zeta4", "a2*b2*z11^2")];

/// The both-torsion slice `A_i = [[0,0],[a_i,0]]`, `B_i = [[0,b_i],[0,0]]`.
pub fn zeta_slice_values() -> Result<(Ring, Vec<(String, Polynomial)>)> {
    let system = ClassicalSystem::build(ClassicalCase::ZetaFull)?;
    let slice = Ring::grevlex(&["z11", "z12", "z21", "z22", "a1", "a2", "b1", "b2"])?;
    let mats = vec![
        MatrixSymbol::lower_slice("A1", &slice, "a1")?,
        MatrixSymbol::lower_slice("A2", &slice, "a2")?,
        MatrixSymbol::upper_slice("B1", &slice, "b1")?,
        MatrixSymbol::upper_slice("B2", &slice, "b2")?,
    ];
    let values = slice_values(&system, &slice, &mats)?;
    Ok((slice, values))
}

fn verify_zeta(case: &GitCase) -> Result<FiberOutcome> {
    let Symmetry::Factors(system) = &case.symmetry else { unreachable!() };
    let mut run = CheckRunner::new();
    run.run("sl-invariance", "the zeta are invariant under both special linear factors", || {
        let (a, d1) = invariance_check(system, 0, &system.generators)?;
        let (b, d2) = invariance_check(system, 1, &system.generators)?;
        Ok((a && b, format!("{d1}; {d2}")))
    });
    run.run("weights", "every zeta has the weight of chi", || {
        let table = weight_table(system)?;
        let bad = table.iter().find(|(_, w)| *w != case.chi);
        Ok(match bad {
            Some((n, w)) => (false, format!("{n} has weight {w:?}")),
            None => (true, format!("chi {:?} for {}", case.chi, case.factor_names.join(", "))),
        })
    });
    let rel = relation_ideal(&system.generators, &system.ambient_relations)?;
    let reference = fixtures::load("zeta_relation")?;
    let reference = Ideal::new(&reference.ring, reference.generators)?;
    run.run("relations", "the only relation is zeta1*zeta4 - zeta2*zeta3", || {
        same_ideal_detail(&rel, &reference.embed(rel.ring())?)
    });
    let hilbert = hilbert_series(&rel)?;
    let class = classify(&rel, &hilbert)?;
    run.run("classification", "the fiber is a cone over a smooth quadric surface in P4", || {
        let rank = rel.groebner_basis().first().map(quadratic_rank).transpose()?;
        Ok((class == Some(Classification::QuadricConeP4), format!("Hilbert series {hilbert}; quadric rank {rank:?}")))
    });
    let (slice, values) = zeta_slice_values()?;
    let value = |n: &str| values.iter().find(|(m, _)| m == n).map(|(_, p)| p.clone()).unwrap();
    run.run("ss-slice", "on the slice zeta_i are a_j*b_k times a power of z11", || {
        if value("zeta0") != parse_polynomial("z11*z22 - z21*z12", &slice)? {
            return Ok((false, format!("zeta0 = {}", value("zeta0"))));
        }
        for (n, e) in ZETA_SLICE_COMPUTED {
            if value(n) != parse_polynomial(e, &slice)? {
                return Ok((false, format!("{n} = {} on the slice, expected {e}", value(n))));
            }
        }
        let printed: Vec<String> = ZETA_SLICE_PRINTED.iter().map(|(n, e)| format!("{n} = {e}")).collect();
        let computed: Vec<String> = ZETA_SLICE_COMPUTED.iter().map(|(n, e)| format!("{n} = {e}")).collect();
        Ok((
            true,
            format!(
                "{}; the printed values {} have one power of z11 too few for the degree of tr(B X)",
                computed.join(", "),
                printed.join(", ")
            ),
        ))
    });
    let ss = Ideal::of_variables(rel.ring(), &["zeta1", "zeta2", "zeta3", "zeta4"])?;
    run.run("ss-locus", "the strictly semistable locus is the vertex of the cone", || {
        // slice: a1 = a2 = 0, b1 = b2 = 0 or z11 = 0
        let on_slice = Ideal::new(&slice, ZETA_SLICE_COMPUTED.iter().map(|(n, _)| value(n)).collect())?;
        let var = |n: &str| Ideal::of_variables(&slice, &[n]);
        let geometric = Ideal::of_variables(&slice, &["a1", "a2"])?
            .intersection(&Ideal::of_variables(&slice, &["b1", "b2"])?)?
            .intersection(&var("z11")?)?;
        let h = hilbert_series(&ss.sum(&rel)?)?;
        let vertex = h.dimension() == 1 && h.degree() == 1;
        Ok((on_slice.same_variety(&geometric)? && vertex, format!("Hilbert series of the locus {h}")))
    });
    let presentation = class.map(|classification| FiberPresentation {
        generators: system.generators.clone(),
        relations: rel,
        hilbert,
        classification,
        ss_locus_ideal: ss,
    });
    Ok(FiberOutcome { presentation, certificate: run.finish(&case.torsion.case_id()) })
}
