use mfv_core::cases::{
    commutator_syzygies, support_ideal, universal_presentation, verify_case, verify_fiber, CaseId, Certificate,
    CheckRunner, Classification, DeformationCase, DeformationOptions, Status, TorsionType,
};
use mfv_core::polyring::{parse_polynomial, Polynomial};
use mfv_core::Error;
use proptest::prelude::*;

fn polys(ring: &mfv_core::polyring::Ring, xs: &[&str]) -> Vec<Polynomial> {
    xs.iter().map(|x| parse_polynomial(x, ring).unwrap()).collect()
}

#[test]
fn every_case_certificate_passes() {
    for case in CaseId::all() {
        let cert = verify_case(case, DeformationOptions::default()).unwrap();
        assert_eq!(cert.case.as_deref(), Some(case.id().as_str()));
        for c in &cert.checks {
            assert_eq!(c.status, Status::Pass, "{} / {}: {}", case.id(), c.id, c.detail);
        }
        assert!(cert.passed());
    }
}

#[test]
fn fast_mode_skips_only_the_full_eliminations() {
    let cert = verify_case(CaseId::Deformation(DeformationCase::Full), DeformationOptions { fast: true }).unwrap();
    let skipped: Vec<&str> =
        cert.checks.iter().filter(|c| c.status == Status::Skipped).map(|c| c.id.as_str()).collect();
    assert_eq!(skipped, ["preimage", "ss-preimage"]);
    assert!(cert.passed(), "skipped checks never fail a certificate");
    let half = verify_case(CaseId::Deformation(DeformationCase::Half), DeformationOptions { fast: true }).unwrap();
    assert!(half.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn fiber_classifications() {
    let expect = [
        (TorsionType::Generic, Classification::P1, "(1)/(1 - t)^2"),
        (TorsionType::PTorsion, Classification::P2, "(1)/(1 - t)^3"),
        (TorsionType::LTorsion, Classification::P2, "(1)/(1 - t)^3"),
        (TorsionType::BothTorsion, Classification::QuadricConeP4, "(1 + t)/(1 - t)^4"),
    ];
    for (t, class, series) in expect {
        let p = verify_fiber(t).unwrap().presentation.expect("classified");
        assert_eq!(p.classification, class, "{t}");
        assert_eq!(p.hilbert.to_string(), series, "{t}");
    }
}

#[test]
fn half_case_rewrite_rules() {
    let mp = universal_presentation(DeformationCase::Half).unwrap();
    let b = &mp.blocks[0];
    assert_eq!(b.rank(), 2);
    let r = &mp.ring;
    // x*q1 = -z1 q1 - z5 q2, y*q1 = -z2 q1 - z6 q2, x*q2 = -z3 q1 - z7 q2, y*q2 = -z4 q1 - z8 q2
    assert_eq!(b.operators[0][0], polys(r, &["-z1", "-z5"]));
    assert_eq!(b.operators[1][0], polys(r, &["-z2", "-z6"]));
    assert_eq!(b.operators[0][1], polys(r, &["-z3", "-z7"]));
    assert_eq!(b.operators[1][1], polys(r, &["-z4", "-z8"]));
}

#[test]
fn undeformed_limit_is_trivial() {
    for case in DeformationCase::ALL {
        let mp = universal_presentation(case).unwrap().at_origin();
        for b in &mp.blocks {
            assert!(b.operators.iter().flatten().flatten().all(Polynomial::is_zero), "{case}");
        }
        assert!(commutator_syzygies(&mp).unwrap().1.is_zero(), "{case}");
        assert!(support_ideal(&mp).unwrap().is_zero(), "{case}");
    }
}

#[test]
fn mixed_case_blocks_are_cyclic() {
    let mp = universal_presentation(DeformationCase::Mixed).unwrap();
    let p = &mp.blocks[0];
    assert_eq!(p.generators, ["q1"]);
    assert_eq!(p.eliminated[0].0, "q2");
    assert_eq!(p.eliminated[0].1, polys(&mp.ring, &["-z3"]));
    assert_eq!(mp.blocks[1].generators, ["q2"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_is_confluent(word in prop::collection::vec(0usize..2, 0..5), case in 0usize..3) {
        let mp = universal_presentation(DeformationCase::ALL[case]).unwrap();
        for b in &mp.blocks {
            let op = b.word_operator(&word);
            for (i, row) in op.iter().enumerate() {
                prop_assert_eq!(&b.apply_word(&word, &b.basis_vector(i)), row);
            }
            // y(xq) - x(yq) computed in both rule orders gives the same element
            for i in 0..b.rank() {
                let v = b.basis_vector(i);
                let xy = b.apply_word(&[0, 1], &v);
                let yx = b.apply_word(&[1, 0], &v);
                let stepwise: Vec<Polynomial> = xy.iter().zip(&yx).map(|(a, c)| a - c).collect();
                let (xo, yo) = (b.word_operator(&[0, 1]), b.word_operator(&[1, 0]));
                let multiplied: Vec<Polynomial> = xo[i].iter().zip(&yo[i]).map(|(a, c)| a - c).collect();
                prop_assert_eq!(stepwise, multiplied);
            }
        }
    }
}

#[test]
fn case_ids_are_sorted_and_parse_back() {
    let ids: Vec<String> = CaseId::all().iter().map(|c| c.id()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 7);
    for id in &ids {
        assert_eq!(CaseId::parse(id).unwrap().id(), *id);
    }
    assert!(matches!(CaseId::parse("fiber:nope"), Err(Error::UnknownCase(_))));
    assert!("p-torsion".parse::<TorsionType>().is_ok());
    assert!("quarter".parse::<DeformationCase>().is_err());
}

#[test]
fn certificate_json_schema() {
    assert_eq!(serde_json::to_string(&Certificate::new(None, vec![])).unwrap(), r#"{"checks":[],"overall":"pass"}"#);
    let mut run = CheckRunner::new();
    run.run("good", "a reference", || Ok((true, "fine".into())));
    run.run("bad", "another reference", || Ok((false, "broken".into())));
    run.run("boom", "third", || Err(Error::UnknownVariable("q".into())));
    run.skip("later", "fourth", "not run");
    let cert = run.finish("demo");
    assert_eq!(cert.overall, Status::Fail);
    let json = cert.to_json();
    let at = |key: &str| json.find(&format!("\"{key}\"")).unwrap_or_else(|| panic!("{key} missing"));
    let order = ["case", "checks", "id", "paper_ref", "status", "detail", "elapsed_ms"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]), "key order {order:?}");
    assert!(json.rfind("\"overall\"").unwrap() > json.rfind("\"elapsed_ms\"").unwrap());
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["checks"][2]["status"], "fail");
    assert!(v["checks"][2]["detail"].as_str().unwrap().starts_with("error:"));
    assert_eq!(v["checks"][3]["status"], "skipped");
    let text = cert.to_string();
    assert!(text.contains("[PASS] good — a reference"));
    assert!(text.contains("[FAIL] bad — another reference"));
    assert!(text.contains("[SKIP] later — fourth"));
}
