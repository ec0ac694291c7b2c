//! C ABI over the arrangement library. Objects cross the boundary as
//! opaque handles; structured results cross as JSON strings allocated here
//! and released with `arrlab_string_free`; failures come back as status
//! codes with a per-thread error message.
//!
//! Every pointer-taking entry point null-checks its arguments before any
//! dereference; the C caller's contract is documented in the generated
//! header, so the functions are not marked `unsafe` on the Rust side.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use arrangement_lab::error::Error;
use arrangement_lab::homology::{self, Space};
use arrangement_lab::local_system::{self, LocalSystem};
use arrangement_lab::report::{self, BettiMethod};
use arrangement_lab::{oracle, os_algebra, Arrangement};

/// Opaque arrangement handle.
pub struct ArrlabArrangement(Arrangement);

/// Opaque local-system handle.
pub struct ArrlabLocalSystem(LocalSystem);

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ArrlabStatus {
    Ok = 0,
    /// I/O-level failure: malformed JSON, bad rationals, duplicate rows.
    ParseError = 1,
    /// Domain failure: not essential, resonant, not generic, bounds.
    DomainError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> ArrlabStatus {
    set_error(&err.to_string());
    match err.exit_code() {
        1 => ArrlabStatus::ParseError,
        _ => ArrlabStatus::DomainError,
    }
}

/// Message for the most recent failure on this thread. Valid until the
/// next failing call; never null.
#[no_mangle]
pub extern "C" fn arrlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Result<&'a str, ArrlabStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(ArrlabStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        ArrlabStatus::InvalidUtf8
    })
}

fn out_string(s: String, out: *mut *mut c_char) -> ArrlabStatus {
    if out.is_null() {
        set_error("null output pointer");
        return ArrlabStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ArrlabStatus::Ok
        }
        Err(_) => {
            set_error("report contained an interior NUL byte");
            ArrlabStatus::ParseError
        }
    }
}

macro_rules! deref_or {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(r) => r,
            None => {
                set_error("null handle");
                return ArrlabStatus::NullPointer;
            }
        }
    };
}

/// Frees a string returned by any `_json` function.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn arrlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an arrangement from its JSON interchange format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn arrlab_arrangement_parse(
    json: *const c_char,
    out: *mut *mut ArrlabArrangement,
) -> ArrlabStatus {
    let text = match cstr_arg(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer");
        return ArrlabStatus::NullPointer;
    }
    match Arrangement::parse(text) {
        Ok(a) => {
            *out = Box::into_raw(Box::new(ArrlabArrangement(a)));
            ArrlabStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// # Safety
/// `a` must come from `arrlab_arrangement_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn arrlab_arrangement_free(a: *mut ArrlabArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

#[no_mangle]
pub extern "C" fn arrlab_arrangement_dim(a: *const ArrlabArrangement) -> usize {
    unsafe { a.as_ref() }.map_or(0, |a| a.0.dim)
}

#[no_mangle]
pub extern "C" fn arrlab_arrangement_size(a: *const ArrlabArrangement) -> usize {
    unsafe { a.as_ref() }.map_or(0, |a| a.0.len())
}

#[no_mangle]
pub extern "C" fn arrlab_arrangement_is_essential(
    a: *const ArrlabArrangement,
    out: *mut bool,
) -> ArrlabStatus {
    let a = deref_or!(a);
    if out.is_null() {
        set_error("null output pointer");
        return ArrlabStatus::NullPointer;
    }
    unsafe { *out = a.0.is_essential() };
    ArrlabStatus::Ok
}

#[no_mangle]
pub extern "C" fn arrlab_arrangement_to_json(
    a: *const ArrlabArrangement,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    out_string(a.0.to_json(), out)
}

/// Parses a local system against an arrangement (row count must match).
///
/// # Safety
/// As for `arrlab_arrangement_parse`.
#[no_mangle]
pub unsafe extern "C" fn arrlab_local_system_parse(
    json: *const c_char,
    a: *const ArrlabArrangement,
    out: *mut *mut ArrlabLocalSystem,
) -> ArrlabStatus {
    let text = match cstr_arg(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let a = deref_or!(a);
    if out.is_null() {
        set_error("null output pointer");
        return ArrlabStatus::NullPointer;
    }
    match LocalSystem::parse(text, &a.0) {
        Ok(l) => {
            *out = Box::into_raw(Box::new(ArrlabLocalSystem(l)));
            ArrlabStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// # Safety
/// `l` must come from `arrlab_local_system_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn arrlab_local_system_free(l: *mut ArrlabLocalSystem) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Characteristic polynomial as `{"coefficients": [...], "pretty": "..."}`.
#[no_mangle]
pub extern "C" fn arrlab_char_poly_json(
    a: *const ArrlabArrangement,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let r = report::charpoly(&a.0);
    out_string(serde_json::to_string(&r).expect("report serializes"), out)
}

/// Flat-by-flat poset report.
#[no_mangle]
pub extern "C" fn arrlab_poset_json(
    a: *const ArrlabArrangement,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let r = report::poset_report(&a.0);
    out_string(serde_json::to_string(&r).expect("report serializes"), out)
}

/// Betti numbers by both routes with a match verdict.
#[no_mangle]
pub extern "C" fn arrlab_betti_json(
    a: *const ArrlabArrangement,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    match report::betti(&a.0, BettiMethod::Both, os_algebra::DEFAULT_ENUM_BOUND) {
        Ok(r) => out_string(serde_json::to_string(&r).expect("report serializes"), out),
        Err(e) => status_of(&e),
    }
}

/// Generic section (seeded) as an arrangement JSON file.
#[no_mangle]
pub extern "C" fn arrlab_section_json(
    a: *const ArrlabArrangement,
    seed: u64,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let section = a
        .0
        .random_generic_hyperplane(seed)
        .and_then(|u| a.0.section(&u));
    match section {
        Ok(s) => out_string(s.to_json(), out),
        Err(e) => status_of(&e),
    }
}

/// Dense edges at infinity.
#[no_mangle]
pub extern "C" fn arrlab_dense_edges_json(
    a: *const ArrlabArrangement,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    match report::dense_edges(&a.0) {
        Ok(r) => out_string(serde_json::to_string(&r).expect("report serializes"), out),
        Err(e) => status_of(&e),
    }
}

/// Nonresonance verdict. A resonant system is a successful check: the
/// verdict lands in `out_nonresonant` and the report lists violations.
#[no_mangle]
pub extern "C" fn arrlab_check_nonresonant_json(
    a: *const ArrlabArrangement,
    l: *const ArrlabLocalSystem,
    out_nonresonant: *mut bool,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let l = deref_or!(l);
    match local_system::nonresonance_check(&a.0, &l.0) {
        Ok(verdict) => {
            if !out_nonresonant.is_null() {
                unsafe { *out_nonresonant = verdict.nonresonant };
            }
            let r = report::nonresonance(&a.0, &verdict);
            out_string(serde_json::to_string(&r).expect("report serializes"), out)
        }
        Err(e) => status_of(&e),
    }
}

/// Twisted homology dimensions; `section` selects the generic section.
#[no_mangle]
pub extern "C" fn arrlab_homology_json(
    a: *const ArrlabArrangement,
    l: *const ArrlabLocalSystem,
    section: bool,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let l = deref_or!(l);
    let space = if section {
        Space::GenericSection
    } else {
        Space::FullComplement
    };
    match report::homology(&a.0, &l.0, space) {
        Ok(r) => out_string(serde_json::to_string(&r).expect("report serializes"), out),
        Err(e) => status_of(&e),
    }
}

/// Hurewicz surjectivity certificate.
#[no_mangle]
pub extern "C" fn arrlab_certify_hurewicz_json(
    a: *const ArrlabArrangement,
    l: *const ArrlabLocalSystem,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    let l = deref_or!(l);
    match homology::hurewicz_certificate(&a.0, &l.0) {
        Ok(cert) => {
            let r = report::hurewicz(&a.0, &cert);
            out_string(serde_json::to_string(&r).expect("report serializes"), out)
        }
        Err(e) => status_of(&e),
    }
}

/// Signed Euler characteristic of the generic section.
#[no_mangle]
pub extern "C" fn arrlab_euler_positivity(
    a: *const ArrlabArrangement,
    out_value: *mut i64,
    out_positive: *mut bool,
) -> ArrlabStatus {
    let a = deref_or!(a);
    match homology::euler_positivity(&a.0) {
        Ok((value, positive)) => {
            if !out_value.is_null() {
                unsafe { *out_value = value };
            }
            if !out_positive.is_null() {
                unsafe { *out_positive = positive };
            }
            ArrlabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Euler characteristic of the generic k-section and its positivity witness.
#[no_mangle]
pub extern "C" fn arrlab_homotopy_nonvanishing(
    a: *const ArrlabArrangement,
    k: usize,
    out_euler: *mut i64,
    out_nonvanishing: *mut bool,
) -> ArrlabStatus {
    let a = deref_or!(a);
    match homology::homotopy_nonvanishing(&a.0, k) {
        Ok((euler, nonvanishing)) => {
            if !out_euler.is_null() {
                unsafe { *out_euler = euler };
            }
            if !out_nonvanishing.is_null() {
                unsafe { *out_nonvanishing = nonvanishing };
            }
            ArrlabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Consolidated oracle run; `all_passed` false means a library bug.
#[no_mangle]
pub extern "C" fn arrlab_oracle_check_json(
    a: *const ArrlabArrangement,
    seed: u64,
    out: *mut *mut c_char,
) -> ArrlabStatus {
    let a = deref_or!(a);
    match report::oracle_check(&a.0, oracle::effective_bound(None), seed) {
        Ok(r) => out_string(serde_json::to_string(&r).expect("report serializes"), out),
        Err(e) => status_of(&e),
    }
}
