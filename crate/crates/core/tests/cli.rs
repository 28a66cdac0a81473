use std::path::Path;
use std::process::{Command, Output};

use mfv_core::cli::{run_with, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

fn mfv(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mfv"));
    cmd.args(args).env_remove("MFV_THREADS").env_remove("MFV_FIXTURE_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("mfv").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn mask_elapsed(json: &str) -> String {
    json.lines()
        .map(|l| if l.trim_start().starts_with("\"elapsed_ms\"") { "\"elapsed_ms\": _" } else { l })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn verify_fiber_prints_the_quadric_cone_certificate() {
    let o = mfv(&["verify-fiber", "--case", "both-torsion"], &[]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.contains("[PASS] classification — the fiber is a cone over a smooth quadric surface in P4"));
    assert!(text.lines().all(|l| l.starts_with("[PASS] ")));
}

#[test]
fn gb_of_a_header_only_file_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "empty.id", "# nothing but a ring\nring: x, y order: lex\n");
    let (code, out, _) = in_process(&["gb", "--ideal", &p]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "ring: x, y order: lex\n");
}

#[test]
fn gb_respects_the_order_flag() {
    let cubic = format!("{FIXTURES}/twisted_cubic.id");
    let (code, lex, _) = in_process(&["gb", "--ideal", &cubic]);
    assert_eq!(code, EXIT_OK);
    let (_, grevlex, _) = in_process(&["gb", "--ideal", &cubic, "--order", "grevlex"]);
    assert!(lex.starts_with("ring: x, y, z order: lex\n"));
    assert!(grevlex.starts_with("ring: x, y, z order: grevlex\n"));
    assert_ne!(lex, grevlex);
    let (code, _, err) = in_process(&["gb", "--ideal", &cubic, "--order", "deglex"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("deglex"));
}

#[test]
fn membership_in_the_support_ideal() {
    let i = format!("{FIXTURES}/half_i.id");
    assert_eq!(
        in_process(&["membership", "--ideal", &i, "--poly", "z1+z7"]),
        (EXIT_OK, "true\n".into(), String::new())
    );
    assert_eq!(in_process(&["membership", "--ideal", &i, "--poly", "z3"]).1, "false\n");
    let p_prime = format!("{FIXTURES}/half_p_prime.id");
    assert_eq!(in_process(&["membership", "--ideal", &p_prime, "--poly", "z1", "--radical"]).1, "false\n");
    assert_eq!(in_process(&["membership", "--ideal", &i, "--poly", "z9"]).0, EXIT_USAGE);
}

#[test]
fn hilbert_of_the_cone_relation() {
    let (code, out, _) = in_process(&["hilbert", "--ideal", &format!("{FIXTURES}/zeta_relation.id")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "(1 + t)/(1 - t)^4\ndimension 4 degree 2\n");
    let (code, _, err) = in_process(&["hilbert", "--ideal", &format!("{FIXTURES}/half_preimage.id")]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not homogeneous"));
}

#[test]
fn preimage_along_a_map_file() {
    let dir = tempfile::tempdir().unwrap();
    let map = write(
        dir.path(),
        "rho.map",
        "# torus invariants\nring: t1, t2, t3, t4, t5, t6, t7, t8\nt1 = z1\nt2 = z2\nt3 = z3*z5\nt4 = z3*z6\nt5 = z4*z5\nt6 = z4*z6\nt7 = z7\nt8 = z8\n",
    );
    let (code, out, err) = in_process(&["preimage", "--map", &map, "--ideal", &format!("{FIXTURES}/half_i.id")]);
    assert_eq!(code, EXIT_OK, "{err}");
    let computed = mfv_core::polyring::parse_ideal_file(&out).unwrap();
    let expected = mfv_core::cases::fixtures::load("half_preimage").unwrap();
    let a = mfv_core::groebner::Ideal::new(&computed.ring, computed.generators).unwrap();
    let b = mfv_core::groebner::Ideal::new(&expected.ring, expected.generators).unwrap();
    assert!(a.same_ideal(&b.embed(a.ring()).unwrap()).unwrap());

    let incomplete = write(dir.path(), "bad.map", "ring: s, u\ns = z1\n");
    assert_eq!(
        in_process(&["preimage", "--map", &incomplete, "--ideal", &format!("{FIXTURES}/half_i.id")]).0,
        EXIT_USAGE
    );
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(mfv(&["frobnicate"], &[]).status.code(), Some(EXIT_USAGE));
    assert_eq!(mfv(&[], &[]).status.code(), Some(EXIT_USAGE));
    let o = mfv(&["verify-fiber", "--case", "quarter-torsion"], &[]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fiber cases: both-torsion, generic, l-torsion, p-torsion"));
    assert_eq!(mfv(&["verify-deformation", "--case", "generic"], &[]).status.code(), Some(EXIT_USAGE));
    assert_eq!(mfv(&["gb", "--ideal", "/nonexistent/file.id"], &[]).status.code(), Some(EXIT_USAGE));
    assert_eq!(mfv(&["verify-all", "--fast"], &[("MFV_THREADS", "0")]).status.code(), Some(EXIT_USAGE));
    assert_eq!(mfv(&["--help"], &[]).status.code(), Some(EXIT_OK));
}

#[test]
fn corrupt_ideal_file_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "corrupt.id", "ring: x, y\nx^2 + * y\n");
    let o = mfv(&["gb", "--ideal", &p], &[]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    // a corrupt reference fixture aborts the verification the same way
    let fixtures = tempfile::tempdir().unwrap();
    write(fixtures.path(), "half_i.id", "ring: z1, z2\nz1 +\n");
    let dir_env = fixtures.path().display().to_string();
    let o = mfv(&["verify-deformation", "--case", "half"], &[("MFV_FIXTURE_DIR", &dir_env)]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn perturbed_reference_ideal_exits_with_one() {
    let fixtures = tempfile::tempdir().unwrap();
    let original = std::fs::read_to_string(format!("{FIXTURES}/half_preimage.id")).unwrap();
    let perturbed = original.replace("t4 - t5", "t4 + t5");
    assert_ne!(original, perturbed);
    write(fixtures.path(), "half_preimage.id", &perturbed);
    let dir_env = fixtures.path().display().to_string();
    let o = mfv(&["verify-deformation", "--case", "half"], &[("MFV_FIXTURE_DIR", &dir_env)]);
    assert_eq!(o.status.code(), Some(EXIT_CHECK_FAILED));
    assert!(stdout(&o).contains("[FAIL] preimage"));

    let xi = std::fs::read_to_string(format!("{FIXTURES}/xi_relations.id"))
        .unwrap()
        .replace("xi3^2 - xi1*xi5", "xi3^2 + xi1*xi5");
    write(fixtures.path(), "xi_relations.id", &xi);
    let o = mfv(&["verify-fiber", "--case", "p-torsion"], &[("MFV_FIXTURE_DIR", &dir_env)]);
    assert_eq!(o.status.code(), Some(EXIT_CHECK_FAILED));
    assert!(stdout(&o).contains("[FAIL] relations"));
}

#[test]
fn verify_all_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json").display().to_string();
    let b = dir.path().join("b.json").display().to_string();
    let first = mfv(&["verify-all", "--fast", "--json", &a], &[("MFV_THREADS", "4")]);
    let second = mfv(&["verify-all", "--fast", "--json", &b], &[("MFV_THREADS", "1")]);
    assert_eq!(first.status.code(), Some(EXIT_OK));
    assert_eq!(second.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&first), stdout(&second));
    let (ja, jb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(mask_elapsed(&ja), mask_elapsed(&jb));

    let v: serde_json::Value = serde_json::from_str(&ja).unwrap();
    let cases: Vec<&str> = v.as_array().unwrap().iter().map(|c| c["case"].as_str().unwrap()).collect();
    assert_eq!(
        cases,
        [
            "deformation:full",
            "deformation:half",
            "deformation:mixed",
            "fiber:both-torsion",
            "fiber:generic",
            "fiber:l-torsion",
            "fiber:p-torsion"
        ]
    );
    assert!(stdout(&first).ends_with("7 of 7 cases passed\n"));
}

#[test]
fn single_case_json_matches_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("mixed.json").display().to_string();
    let o = mfv(&["verify-deformation", "--case", "mixed", "--json", &p], &[]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["case"], "deformation:mixed");
    assert_eq!(v["overall"], "pass");
    for c in v["checks"].as_array().unwrap() {
        assert!(c["elapsed_ms"].is_u64());
        assert!(["pass", "fail", "skipped"].contains(&c["status"].as_str().unwrap()));
    }
}
