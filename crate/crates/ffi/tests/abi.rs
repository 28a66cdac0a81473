use std::ffi::{c_char, CStr, CString};
use std::ptr;

use mfv_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mfv_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(mfv_last_error()).to_str().unwrap().to_owned()
}

unsafe fn parse(text: &str) -> *mut MfvIdeal {
    let mut ideal = ptr::null_mut();
    assert_eq!(mfv_ideal_parse(c(text).as_ptr(), &mut ideal), MfvStatus::Ok, "{}", last_error());
    ideal
}

#[test]
fn groebner_basis_round_trip() {
    unsafe {
        let ideal = parse("ring: x, y, z order: lex\ny - x^2\nz - x^3\n");
        let mut out = ptr::null_mut();
        assert_eq!(mfv_ideal_groebner_basis(ideal, &mut out), MfvStatus::Ok);
        let text = take(out);
        assert!(text.starts_with("ring: x, y, z order: lex\n"));
        assert!(text.contains("y^3 - z^2") || text.contains("-y^3 + z^2") || text.contains("z^2 - y^3"), "{text}");
        mfv_ideal_free(ideal);
    }
}

#[test]
fn membership_and_radical_membership() {
    unsafe {
        let ideal = parse("ring: x, y\nx^2\n");
        let mut member = true;
        assert_eq!(mfv_ideal_contains(ideal, c("x").as_ptr(), false, &mut member), MfvStatus::Ok);
        assert!(!member);
        assert_eq!(mfv_ideal_contains(ideal, c("x").as_ptr(), true, &mut member), MfvStatus::Ok);
        assert!(member);
        assert_eq!(mfv_ideal_contains(ideal, c("w").as_ptr(), false, &mut member), MfvStatus::Parse);
        assert!(last_error().contains("w"));
        mfv_ideal_free(ideal);
    }
}

#[test]
fn hilbert_series_and_algebra_errors() {
    unsafe {
        let cone = parse("ring: a, b, c, d, e\nb*e - c*d\n");
        let mut out = ptr::null_mut();
        assert_eq!(mfv_ideal_hilbert_series(cone, &mut out), MfvStatus::Ok);
        assert_eq!(take(out), "(1 + t)/(1 - t)^4");
        mfv_ideal_free(cone);

        let affine = parse("ring: x\nx - 1\n");
        let mut out = ptr::null_mut();
        assert_eq!(mfv_ideal_hilbert_series(affine, &mut out), MfvStatus::Algebra);
        assert!(out.is_null());
        assert!(last_error().contains("homogeneous"));
        mfv_ideal_free(affine);
    }
}

#[test]
fn verification_certificates() {
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(mfv_verify_case(c("deformation:mixed").as_ptr(), false, &mut cert), MfvStatus::Ok);
        assert!(mfv_certificate_passed(cert));
        assert_eq!(mfv_certificate_check_count(cert), 6);
        let mut json = ptr::null_mut();
        assert_eq!(mfv_certificate_json(cert, &mut json), MfvStatus::Ok);
        assert!(take(json).contains("\"case\": \"deformation:mixed\""));
        mfv_certificate_free(cert);

        let mut cert = ptr::null_mut();
        assert_eq!(mfv_verify_case(c("fiber:octagonal").as_ptr(), false, &mut cert), MfvStatus::UnknownCase);
        assert!(cert.is_null());
    }
}

#[test]
fn null_and_malformed_arguments() {
    unsafe {
        let mut ideal = ptr::null_mut();
        assert_eq!(mfv_ideal_parse(ptr::null(), &mut ideal), MfvStatus::NullArgument);
        assert_eq!(mfv_ideal_parse(c("ring: x\n").as_ptr(), ptr::null_mut()), MfvStatus::NullArgument);
        assert_eq!(mfv_ideal_parse(c("x + 1\n").as_ptr(), &mut ideal), MfvStatus::Parse);
        let bad = [0xffu8, 0];
        assert_eq!(mfv_ideal_parse(bad.as_ptr().cast(), &mut ideal), MfvStatus::InvalidUtf8);
        assert!(ideal.is_null());
        let mut out = ptr::null_mut();
        assert_eq!(mfv_ideal_groebner_basis(ptr::null(), &mut out), MfvStatus::NullArgument);
        assert!(!mfv_certificate_passed(ptr::null()));
        assert_eq!(mfv_certificate_check_count(ptr::null()), 0);
        mfv_ideal_free(ptr::null_mut());
        mfv_certificate_free(ptr::null_mut());
        mfv_string_free(ptr::null_mut());
        // a successful call clears the previous message
        let ok = parse("ring: x\n");
        assert_eq!(last_error(), "");
        mfv_ideal_free(ok);
    }
}

#[test]
fn version_matches_the_package() {
    let v = unsafe { CStr::from_ptr(mfv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
