//! C interface to `mfv-core`.
//!
//! Objects cross the boundary as opaque handles that the caller releases with
//! the matching `*_free` function. Every fallible call returns an
//! [`MfvStatus`]; on failure [`mfv_last_error`] describes the problem until
//! the next call on the same thread. Strings returned through `out`
//! parameters are owned by the caller and released with [`mfv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mfv_core::cases::{verify_case, CaseId, Certificate, DeformationOptions};
use mfv_core::groebner::{hilbert_series, Ideal};
use mfv_core::polyring::{format_ideal_file, parse_ideal_file, parse_polynomial};
use mfv_core::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MfvStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Ideal text or a polynomial failed to parse.
    Parse = 3,
    /// The case id is not known.
    UnknownCase = 4,
    /// The computation rejected its input, for example a non-homogeneous ideal.
    Algebra = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// An ideal together with its ring.
pub struct MfvIdeal {
    inner: Ideal,
}

/// A verification certificate.
pub struct MfvCertificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(MfvStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::InvalidRing(_) => MfvStatus::Parse,
            Error::UnknownCase(_) => MfvStatus::UnknownCase,
            _ => MfvStatus::Algebra,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MfvStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MfvStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside mfv");
            MfvStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(MfvStatus::NullArgument, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(MfvStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next `mfv_*` call on the same thread.
#[no_mangle]
pub extern "C" fn mfv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mfv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mfv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses ideal-file text (`ring:` header followed by one generator per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mfv_ideal_parse(text: *const c_char, out: *mut *mut MfvIdeal) -> MfvStatus {
    guard(|| {
        let file = parse_ideal_file(str_arg(text, "text")?)?;
        let ideal = Ideal::new(&file.ring, file.generators)?;
        put(out, Box::into_raw(Box::new(MfvIdeal { inner: ideal })), "out")
    })
}

/// Releases an ideal. Null is ignored.
///
/// # Safety
/// `ideal` must come from [`mfv_ideal_parse`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mfv_ideal_free(ideal: *mut MfvIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Writes the reduced Gröbner basis as ideal-file text.
///
/// # Safety
/// `ideal` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mfv_ideal_groebner_basis(ideal: *const MfvIdeal, out: *mut *mut c_char) -> MfvStatus {
    guard(|| {
        let i = &handle(ideal, "ideal")?.inner;
        put(out, c_string(format_ideal_file(i.ring(), i.groebner_basis())), "out")
    })
}

/// Decides `poly ∈ ideal`, or `poly ∈ √ideal` when `radical` is true.
///
/// # Safety
/// `ideal` must be a live handle, `poly` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfv_ideal_contains(
    ideal: *const MfvIdeal,
    poly: *const c_char,
    radical: bool,
    out: *mut bool,
) -> MfvStatus {
    guard(|| {
        let i = &handle(ideal, "ideal")?.inner;
        let f = parse_polynomial(str_arg(poly, "poly")?, i.ring())?;
        let member = if radical { i.radical_contains(&f)? } else { i.contains(&f)? };
        put(out, member, "out")
    })
}

/// Writes the Hilbert series of the quotient, for example `(1 + t)/(1 - t)^4`.
///
/// # Safety
/// `ideal` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mfv_ideal_hilbert_series(ideal: *const MfvIdeal, out: *mut *mut c_char) -> MfvStatus {
    guard(|| {
        let h = hilbert_series(&handle(ideal, "ideal")?.inner)?;
        put(out, c_string(h.to_string()), "out")
    })
}

/// Runs one case, addressed as `fiber:<type>` or `deformation:<case>`.
///
/// # Safety
/// `case_id` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mfv_verify_case(
    case_id: *const c_char,
    fast: bool,
    out: *mut *mut MfvCertificate,
) -> MfvStatus {
    guard(|| {
        let case = CaseId::parse(str_arg(case_id, "case_id")?)?;
        let cert = verify_case(case, DeformationOptions { fast })?;
        put(out, Box::into_raw(Box::new(MfvCertificate { inner: cert })), "out")
    })
}

/// True when no check failed. A null handle counts as not passed.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mfv_certificate_passed(cert: *const MfvCertificate) -> bool {
    cert.as_ref().is_some_and(|c| c.inner.passed())
}

/// Number of checks in the certificate; zero for a null handle.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mfv_certificate_check_count(cert: *const MfvCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.inner.checks.len())
}

/// Writes the certificate as JSON.
///
/// # Safety
/// `cert` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mfv_certificate_json(cert: *const MfvCertificate, out: *mut *mut c_char) -> MfvStatus {
    guard(|| put(out, c_string(handle(cert, "certificate")?.inner.to_json()), "out"))
}

/// Releases a certificate. Null is ignored.
///
/// # Safety
/// `cert` must come from [`mfv_verify_case`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mfv_certificate_free(cert: *mut MfvCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}
