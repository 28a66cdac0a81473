//! Local equations of the fibers near strictly semistable points, from the
//! universal deformation of the quotient map.

use std::fmt;
use std::str::FromStr;

use super::certificate::{Certificate, CheckRunner};
use super::fiber::same_ideal_detail;
use super::fixtures;
use super::presentation::{commutator_syzygies, parse_matrix, support_ideal, ModulePresentation, PresentationBlock};
use crate::error::{Error, Result};
use crate::groebner::{elimination_ideal, Ideal, RingMap};
use crate::invariants::{
    check_generation, is_invariant_under, ClassicalCase, ClassicalSystem, MatrixSymbol, NamedGenerator,
    TorusWeightSystem, TRACE_MATRICES,
};
use crate::polyring::{parse_polynomial, Polynomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeformationCase {
    Full,
    Half,
    Mixed,
}

impl DeformationCase {
    pub const ALL: [DeformationCase; 3] = [DeformationCase::Full, DeformationCase::Half, DeformationCase::Mixed];

    pub fn id(self) -> &'static str {
        match self {
            DeformationCase::Half => "half",
            DeformationCase::Mixed => "mixed",
            DeformationCase::Full => "full",
        }
    }

    pub fn case_id(self) -> String {
        format!("deformation:{}", self.id())
    }
}

impl FromStr for DeformationCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DeformationCase::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

impl fmt::Display for DeformationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn coords(stem: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{stem}{i}")).collect()
}

/// `P̃` for a single point of length two, in deformation coordinates `{stem}1..{stem}8`.
fn length_two_rows(stem: &str) -> [[String; 4]; 2] {
    let v = |i: usize| format!("{stem}{i}");
    [
        [format!("x + {}", v(1)), format!("y + {}", v(2)), v(3), v(4)],
        [v(5), v(6), format!("x + {}", v(7)), format!("y + {}", v(8))],
    ]
}

fn block_from_text(
    name: &str,
    rows: &[Vec<String>],
    pring: &Ring,
    dring: &Ring,
    length: u32,
) -> Result<PresentationBlock> {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
    PresentationBlock::from_matrix(name, parse_matrix(&rows, pring)?, ["x", "y"], dring, length)
}

pub fn universal_presentation(case: DeformationCase) -> Result<ModulePresentation> {
    let with_local = |names: &[String]| -> Result<Ring> {
        let mut all = vec!["x".to_string(), "y".to_string()];
        all.extend(names.iter().cloned());
        Ring::grevlex(&all)
    };
    match case {
        DeformationCase::Half => {
            let names = coords("z", 8);
            let (pring, dring) = (with_local(&names)?, Ring::grevlex(&names)?);
            let rows: Vec<Vec<String>> = length_two_rows("z").iter().map(|r| r.to_vec()).collect();
            let block = block_from_text("p", &rows, &pring, &dring, 2)?;
            Ok(ModulePresentation { ring: dring, blocks: vec![block] })
        }
        DeformationCase::Mixed => {
            let names = coords("z", 6);
            let (pring, dring) = (with_local(&names)?, Ring::grevlex(&names)?);
            let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            let at_p = vec![s(&["x + z1", "y + z2", "z3"]), s(&["0", "0", "1"])];
            let at_minus_p = vec![s(&["1", "0", "0"]), s(&["z4", "x + z5", "y + z6"])];
            let blocks = vec![
                block_from_text("p", &at_p, &pring, &dring, 1)?,
                block_from_text("-p", &at_minus_p, &pring, &dring, 1)?,
            ];
            Ok(ModulePresentation { ring: dring, blocks })
        }
        DeformationCase::Full => {
            let mut names = coords("z", 8);
            names.extend(coords("w", 8));
            let (pring, dring) = (with_local(&names)?, Ring::grevlex(&names)?);
            let blocks = ["z", "w"]
                .iter()
                .map(|stem| {
                    let rows: Vec<Vec<String>> = length_two_rows(stem).iter().map(|r| r.to_vec()).collect();
                    block_from_text(stem, &rows, &pring, &dring, 2)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ModulePresentation { ring: dring, blocks })
        }
    }
}

fn fixture_ideal(name: &str) -> Result<Ideal> {
    let f = fixtures::load(name)?;
    Ideal::new(&f.ring, f.generators)
}

/// Options for the deformation drivers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DeformationOptions {
    /// Skip the full eliminations of the largest case.
    pub fast: bool,
}

pub fn verify_deformation(case: DeformationCase, opts: DeformationOptions) -> Result<Certificate> {
    match case {
        DeformationCase::Half => verify_half(),
        DeformationCase::Mixed => verify_mixed(),
        DeformationCase::Full => verify_full(opts),
    }
}

/// The half case's torus invariants `t1..t8`.
pub const HALF_INVARIANTS: [(&str, &str); 8] = [
    ("t1", "z1"),
    ("t2", "z2"),
    ("t3", "z3*z5"),
    ("t4", "z3*z6"),
    ("t5", "z4*z5"),
    ("t6", "z4*z6"),
    ("t7", "z7"),
    ("t8", "z8"),
];

pub fn half_rho() -> Result<RingMap> {
    let t = Ring::grevlex(&coords("t", 8))?;
    let z = Ring::grevlex(&coords("z", 8))?;
    RingMap::from_assignments(&t, &z, &HALF_INVARIANTS)
}

/// `(I1, a, b) ∩ (I1, c, d)`: the deformations that stay split.
pub fn split_locus(i1: &Ideal, first: &[&str], second: &[&str]) -> Result<Ideal> {
    let extend = |vars: &[&str]| i1.sum(&Ideal::of_variables(i1.ring(), vars)?);
    extend(first)?.intersection(&extend(second)?)
}

fn verify_half() -> Result<Certificate> {
    let case = DeformationCase::Half;
    let mut run = CheckRunner::new();
    let mp = universal_presentation(case)?;
    let ring = mp.ring.clone();
    let (_, i1) = commutator_syzygies(&mp)?;
    run.run("rewrite-confluence", "eliminating x and y is independent of the rewriting order", || {
        let b = &mp.blocks[0];
        for word in [vec![0, 1], vec![1, 0], vec![0, 0, 1], vec![1, 0, 1], vec![1, 1, 0]] {
            for i in 0..b.rank() {
                let step = b.apply_word(&word, &b.basis_vector(i));
                if step != b.word_operator(&word)[i] {
                    return Ok((false, format!("word {word:?} on q{}", i + 1)));
                }
            }
        }
        Ok((true, "stepwise and multiplied-out rewriting agree".into()))
    });
    run.run("p-prime", "the entries of P' generate the flattening ideal I1", || {
        same_ideal_detail(&i1, &fixture_ideal("half_p_prime")?.embed(&ring)?)
    });
    let i2 = support_ideal(&mp)?;
    let i = fixture_ideal("half_i")?.embed(&ring)?;
    let sum = i1.sum(&i2)?;
    run.run("support-containment", "I1 + I2 is contained in I", || {
        Ok(match i.first_non_member(sum.generators())? {
            Some(f) => (false, format!("{f} is not in I")),
            None => (true, format!("{} generators of I1 + I2", sum.generators().len())),
        })
    });
    run.run("support-radical", "I is the radical of I1 + I2", || {
        Ok((sum.same_variety(&i)?, "generator-wise radical membership in both directions".into()))
    });

    let block = &mp.blocks[0];
    let rho = half_rho()?;
    run.run("torus-invariants", "the torus invariants are generated by t1, ..., t8", || {
        let weights = block.torus_weights(&[1, -1])?;
        let named: Vec<(&str, Vec<i64>)> = weights.iter().map(|(n, w)| (n.as_str(), vec![*w])).collect();
        let ws = TorusWeightSystem::from_named(&ring, &named, vec![0])?;
        let gens = HALF_INVARIANTS
            .iter()
            .map(|(n, e)| NamedGenerator::new(n, parse_polynomial(e, &ring)?))
            .collect::<Result<Vec<_>>>()?;
        let shown: Vec<String> = weights.iter().map(|(n, w)| format!("{n}:{w}")).collect();
        Ok((check_generation(&gens, &ws, 0, 4)?, format!("weights {}; checked through degree 4", shown.join(" "))))
    });
    let pre = rho.preimage(&i)?;
    let reference = fixture_ideal("half_preimage")?.embed(rho.source())?;
    run.run("preimage", "the pull-back of I is (t1+t7, t2+t8, t3+t7^2, t4-t5, t5+t7*t8, t6+t8^2)", || {
        let (same, detail) = same_ideal_detail(&pre, &reference)?;
        let pushed =
            reference.generators().iter().try_fold(true, |ok, g| Ok::<_, Error>(ok && rho.maps_into(g, &i)?))?;
        Ok((same && pushed, detail))
    });
    run.run("residual-free", "the local ring is free on t7 and t8", || {
        let e = elimination_ideal(&pre, &["t7", "t8"])?;
        Ok((e.is_zero(), format!("elimination ideal {e}")))
    });
    let i_prime = split_locus(&i1, &["z3", "z4"], &["z5", "z6"])?;
    run.run("ss-ideal", "J = (t7^2, t7*t8, t8^2), the square of the maximal ideal", || {
        let full = rho.preimage(&i.sum(&i_prime)?)?;
        let j = elimination_ideal(&full, &["t7", "t8"])?;
        let j_ref = fixture_ideal("half_j")?;
        let j_local = j.embed(j_ref.ring())?;
        let exact = j_local.same_ideal(&j_ref)?;
        let split = full.same_ideal(&pre.sum(&j_ref.embed(rho.source())?)?)?;
        Ok((exact && split, format!("J = {j_local}")))
    });
    Ok(run.finish(&case.case_id()))
}

fn verify_mixed() -> Result<Certificate> {
    let case = DeformationCase::Mixed;
    let mut run = CheckRunner::new();
    let mp = universal_presentation(case)?;
    let ring = mp.ring.clone();
    run.run("cyclic-blocks", "each point block is cyclic after eliminating the unit column", || {
        let shown: Vec<String> = mp
            .blocks
            .iter()
            .flat_map(|b| {
                b.eliminated.iter().map(move |(q, c)| format!("{}: {q} = {}*{}", b.name, c[0], b.generators[0]))
            })
            .collect();
        Ok((mp.blocks.iter().all(|b| b.rank() == 1), shown.join(", ")))
    });
    let (_, i1) = commutator_syzygies(&mp)?;
    run.run("unobstructed", "the deformation space is unobstructed: I1 = (0)", || {
        Ok((i1.is_zero(), format!("I1 = {i1}")))
    });
    let i2 = support_ideal(&mp)?;
    run.run("support", "support at the two points: z1 = z2 = z5 = z6 = 0, leaving Q[z3, z4]", || {
        let (same, detail) = same_ideal_detail(&i2, &fixture_ideal("mixed_support")?.embed(&ring)?)?;
        let residual = elimination_ideal(&i2, &["z3", "z4"])?;
        Ok((same && residual.is_zero(), detail))
    });
    let weights: Vec<(String, i64)> = mp
        .blocks
        .iter()
        .map(|b| b.torus_weights(&[1, -1]))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let weight = |n: &str| weights.iter().find(|(m, _)| m == n).map(|(_, w)| *w);
    run.run("torus-weights", "the torus acts on z3 and z4 with weights 2 and -2", || {
        Ok((weight("z3") == Some(2) && weight("z4") == Some(-2), format!("{weights:?}")))
    });
    let coords = Ring::grevlex(&["z3", "z4"])?;
    let s_ring = Ring::grevlex(&["s"])?;
    let rho = RingMap::from_assignments(&s_ring, &coords, &[("s", "z3*z4")])?;
    run.run("invariant-ring", "the invariant ring is Q[s] with s = z3*z4", || {
        let named = [("z3", vec![weight("z3").unwrap_or(0)]), ("z4", vec![weight("z4").unwrap_or(0)])];
        let ws = TorusWeightSystem::from_named(&coords, &named, vec![0])?;
        let s = NamedGenerator::new("s", rho.images()[0].clone())?;
        let basis = ws.semi_invariant_basis(0, 6);
        Ok((
            check_generation(&[s], &ws, 0, 6)? && basis.len() == 4,
            format!("{} invariant monomials up to degree 6", basis.len()),
        ))
    });
    run.run("ss-ideal", "the strictly semistable ideal is the maximal ideal (s)", || {
        let split = Ideal::of_variables(&coords, &["z3"])?.intersection(&Ideal::of_variables(&coords, &["z4"])?)?;
        let pre = rho.preimage(&split)?;
        same_ideal_detail(&pre, &fixture_ideal("mixed_ss")?)
    });
    Ok(run.finish(&case.case_id()))
}

/// Copies an ideal in `z1..z8` into `ring`, renaming `z` to `stem`.
fn renamed(ideal: &Ideal, ring: &Ring, stem: &str) -> Result<Ideal> {
    let map: Vec<Option<usize>> =
        ideal.ring().variables().iter().map(|v| ring.index_of(&v.replacen('z', stem, 1))).collect();
    let gens = ideal.generators().iter().map(|g| g.transfer(ring, &map)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// The support ideal of the full case: the half-case ideal in `z` plus its copy in `w`.
pub fn full_support_ideal(ring: &Ring) -> Result<Ideal> {
    let half = fixture_ideal("half_i")?;
    renamed(&half, ring, "z")?.sum(&renamed(&half, ring, "w")?)
}

fn verify_full(opts: DeformationOptions) -> Result<Certificate> {
    let case = DeformationCase::Full;
    let mut run = CheckRunner::new();
    let system = ClassicalSystem::build(ClassicalCase::TraceSl2)?;
    let ring = system.ambient.clone();
    let mp = universal_presentation(case)?;
    let i = full_support_ideal(&ring)?;
    run.run("trace-membership", "I contains tr(Zi) and the entries of Z1^2, Z1Z2, Z2^2, Z3^2, Z3Z4, Z4^2", || {
        let z: Vec<MatrixSymbol> =
            TRACE_MATRICES.iter().map(|(n, e)| MatrixSymbol::free(n, &ring, *e)).collect::<Result<_>>()?;
        let mut required: Vec<Polynomial> = z.iter().map(MatrixSymbol::trace).collect();
        for (a, b) in [(0, 0), (0, 1), (1, 1), (2, 2), (2, 3), (3, 3)] {
            required.extend(z[a].mul(&z[b]).entries());
        }
        Ok(match i.first_non_member(&required)? {
            Some(f) => (false, format!("{f} is not in I")),
            None => (true, format!("{} polynomials", required.len())),
        })
    });
    run.run("trace-invariance", "t1, ..., t4 are invariant under the adjoint action", || {
        let f = &system.factors[0];
        for g in super::fiber::sl2_samples() {
            for t in &system.generators {
                if !is_invariant_under(t, f, &g, None)? {
                    return Ok((false, format!("{} moves", t.name())));
                }
            }
        }
        Ok((true, system.generators.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
    });
    let t_ring = Ring::grevlex(&coords("t", 4))?;
    let rho = RingMap::new(&t_ring, &ring, system.generators.iter().map(|g| g.expression().clone()).collect())?;
    let pre_ref = fixture_ideal("full_preimage")?.embed(&t_ring)?;
    let j_ref = fixture_ideal("full_j")?.embed(&t_ring)?;
    run.run("preimage-members", "t2*t3 - t1*t4 pulls back into I", || {
        let g = &pre_ref.generators()[0];
        Ok((rho.maps_into(g, &i)?, format!("rho({g}) = {}", rho.apply(g)?)))
    });
    let (_, i1) = commutator_syzygies(&mp)?;
    let i1 = i1.embed(&ring)?;
    let i_prime = split_locus(&i1, &["z3", "z4", "w3", "w4"], &["z5", "z6", "w5", "w6"])?;
    let i_total = i.sum(&i_prime)?;
    run.run("ss-members", "(t1, t2, t3, t4)^2 pulls back into I + I'", || {
        Ok(match j_ref.generators().iter().find(|g| !rho.maps_into(g, &i_total).unwrap_or(false)) {
            Some(g) => (false, format!("rho({g}) is not in I + I'")),
            None => (true, "split locus uses (I1, z3, z4, w3, w4) and (I1, z5, z6, w5, w6)".into()),
        })
    });
    if opts.fast {
        run.skip("preimage", "the pull-back of I is (t2*t3 - t1*t4)", "fast mode");
        run.skip("ss-preimage", "the pull-back of I + I' is (t1, t2, t3, t4)^2", "fast mode");
    } else {
        run.run("preimage", "the pull-back of I is (t2*t3 - t1*t4)", || {
            same_ideal_detail(&rho.preimage(&i)?, &pre_ref)
        });
        run.run("ss-preimage", "the pull-back of I + I' is (t1, t2, t3, t4)^2", || {
            same_ideal_detail(&rho.preimage(&i_total)?, &j_ref)
        });
    }
    Ok(run.finish(&case.case_id()))
}
