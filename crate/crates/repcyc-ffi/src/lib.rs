//! C ABI over the repeated-root cyclic code toolkit.
//!
//! Conventions: every fallible call returns a [`RepcycStatus`]; results come
//! back through out-pointers; codes are opaque handles freed with
//! [`repcyc_code_free`]; strings allocated by the library are freed with
//! [`repcyc_string_free`]. The most recent error message of the calling
//! thread is available via [`repcyc_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use repcyc::catalog::{all_rows_verified, emit_to_string, table1, EmitFormat};
use repcyc::code::{cyclic_from_generator, CyclicCode};
use repcyc::cyclo::delta_h;
use repcyc::dist::{min_weight_upto, Budget, DistanceResult};
use repcyc::error::Error;
use repcyc::families::{build_family, verify_family, FamilyId, VerifyOpts};
use repcyc::gf::field_create;
use repcyc::poly::Poly;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepcycStatus {
    Ok = 0,
    /// Bad arguments: null pointers, malformed tags, parameter ranges.
    InvalidArgument = 1,
    /// Field or length outside the supported range.
    Unsupported = 2,
    /// Enumeration cap or subset-visit budget exhausted.
    ResourceLimit = 3,
    /// A verified claim was contradicted.
    VerificationFailed = 4,
    /// Invariant violation inside the library.
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> RepcycStatus {
    match err {
        Error::UnsupportedField(_) => RepcycStatus::Unsupported,
        Error::Resource(_) | Error::Budget { .. } => RepcycStatus::ResourceLimit,
        Error::Internal(_) | Error::Io(_) => RepcycStatus::Internal,
        _ => RepcycStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> RepcycStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn invalid(msg: &str) -> RepcycStatus {
    set_error(msg.to_string());
    RepcycStatus::InvalidArgument
}

/// Opaque cyclic-code handle.
pub struct RepcycCode {
    inner: CyclicCode,
}

/// Copy the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `cap`). Returns the full message length in bytes, or 0 when
/// no error is recorded.
///
/// # Safety
/// `buf` must point to `cap` writable bytes, or be null (then only the length
/// is returned).
#[no_mangle]
pub unsafe extern "C" fn repcyc_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let borrow = slot.borrow();
        let Some(msg) = borrow.as_ref() else {
            return 0;
        };
        let bytes = msg.as_bytes_with_nul();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap);
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            // guarantee termination after truncation
            *buf.add(n - 1) = 0;
        }
        bytes.len() - 1
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn repcyc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Build a family instance (tag is one of "T31".."T72") over GF(q) with
/// parameter m. On success `*out` owns a new code handle.
///
/// # Safety
/// `tag` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repcyc_family_build(
    tag: *const c_char,
    q: u64,
    m: u32,
    out: *mut *mut RepcycCode,
) -> RepcycStatus {
    if tag.is_null() || out.is_null() {
        return invalid("null pointer argument");
    }
    let Ok(tag) = CStr::from_ptr(tag).to_str() else {
        return invalid("tag is not valid UTF-8");
    };
    let id = match FamilyId::from_str(tag) {
        Ok(id) => id,
        Err(e) => return fail(e),
    };
    match build_family(id, q, m) {
        Ok(fam) => {
            *out = Box::into_raw(Box::new(RepcycCode { inner: fam.code().clone() }));
            RepcycStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Build a cyclic code of length `length` over GF(q) from an ascending
/// coefficient list (canonical field-element indices) of its generator.
///
/// # Safety
/// `coeffs` must point to `ncoeffs` readable u32 values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_from_generator(
    q: u64,
    length: usize,
    coeffs: *const u32,
    ncoeffs: usize,
    out: *mut *mut RepcycCode,
) -> RepcycStatus {
    if out.is_null() || (coeffs.is_null() && ncoeffs > 0) {
        return invalid("null pointer argument");
    }
    if q < 2 || q.count_ones() != 1 || q.trailing_zeros() > 16 {
        return invalid("q must be a power of 2 up to 2^16");
    }
    let field = match field_create(q.trailing_zeros()) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let coeffs = std::slice::from_raw_parts(coeffs, ncoeffs);
    let g = Poly::from_coeffs(&field, coeffs.to_vec());
    match cyclic_from_generator(&field, length, g) {
        Ok(code) => {
            *out = Box::into_raw(Box::new(RepcycCode { inner: code }));
            RepcycStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Release a code handle. Null is a no-op.
///
/// # Safety
/// `code` must be a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_free(code: *mut RepcycCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Field size q of the code; 0 on null.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_q(code: *const RepcycCode) -> u64 {
    code.as_ref().map_or(0, |c| c.inner.q())
}

/// Code length N; 0 on null.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_length(code: *const RepcycCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.length())
}

/// Code dimension k; 0 on null.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_dimension(code: *const RepcycCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.dimension())
}

/// Copy the generator's ascending coefficient list into `buf`. `*written`
/// receives the coefficient count; fails with `ResourceLimit` when `cap` is
/// too small (the needed size is still stored in `*written`).
///
/// # Safety
/// `buf` must point to `cap` writable u32 slots (may be null when cap is 0);
/// `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn repcyc_code_generator(
    code: *const RepcycCode,
    buf: *mut u32,
    cap: usize,
    written: *mut usize,
) -> RepcycStatus {
    let (Some(code), false) = (code.as_ref(), written.is_null()) else {
        return invalid("null pointer argument");
    };
    let coeffs = code.inner.generator().coeffs();
    *written = coeffs.len();
    if coeffs.len() > cap {
        set_error(format!("buffer holds {cap} coefficients, need {}", coeffs.len()));
        return RepcycStatus::ResourceLimit;
    }
    if !buf.is_null() {
        std::ptr::copy_nonoverlapping(coeffs.as_ptr(), buf, coeffs.len());
    }
    RepcycStatus::Ok
}

/// Search the minimum distance up to `wmax` (budget 0 means the default
/// 10^10 subset visits). On return, `*d_low <= d`; when `*is_exact` is 1 the
/// distance is exactly `*d_low`.
///
/// # Safety
/// `code`, `d_low` and `is_exact` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn repcyc_min_distance(
    code: *const RepcycCode,
    wmax: u32,
    budget: u64,
    d_low: *mut u32,
    is_exact: *mut i32,
) -> RepcycStatus {
    let (Some(code), false, false) = (code.as_ref(), d_low.is_null(), is_exact.is_null()) else {
        return invalid("null pointer argument");
    };
    let mut b = Budget::default();
    if budget > 0 {
        b.max_visits = budget;
    }
    match min_weight_upto(&code.inner, wmax, &b) {
        Ok(DistanceResult::Exact { d, .. }) => {
            *d_low = d;
            *is_exact = 1;
            RepcycStatus::Ok
        }
        Ok(r) => {
            *d_low = r.low();
            *is_exact = 0;
            RepcycStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Distance-optimality classification of (n, k, d)_q by the implemented
/// bounds; `*optimal` is 1 when certified optimal, 0 otherwise.
///
/// # Safety
/// `optimal` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn repcyc_classify(
    n: u32,
    k: u32,
    d: u32,
    q: u64,
    optimal: *mut i32,
) -> RepcycStatus {
    if optimal.is_null() {
        return invalid("null pointer argument");
    }
    if k < 1 || k > n || d < 1 || d > n || q < 2 || q.count_ones() != 1 {
        return invalid("need 1 <= k <= n, 1 <= d <= n, q a power of 2");
    }
    let v = repcyc::bounds::classify(n, k, d, q);
    *optimal = i32::from(v.is_optimal());
    RepcycStatus::Ok
}

/// The coset-leader statistic for prime m: h = (2^(m-1)-1)/m and the h-th
/// smallest nonzero 2-cyclotomic coset leader modulo 2^m - 1.
///
/// # Safety
/// `h` and `delta` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn repcyc_delta_h(m: u32, h: *mut u64, delta: *mut u64) -> RepcycStatus {
    if h.is_null() || delta.is_null() {
        return invalid("null pointer argument");
    }
    match delta_h(m) {
        Ok(d) => {
            *h = d.h;
            *delta = d.delta;
            RepcycStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Run a family instance's verification checks. `Ok` when every check passes,
/// `VerificationFailed` when any claim is contradicted.
///
/// # Safety
/// `tag` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn repcyc_family_verify(
    tag: *const c_char,
    q: u64,
    m: u32,
    budget: u64,
) -> RepcycStatus {
    if tag.is_null() {
        return invalid("null pointer argument");
    }
    let Ok(tag) = CStr::from_ptr(tag).to_str() else {
        return invalid("tag is not valid UTF-8");
    };
    let id = match FamilyId::from_str(tag) {
        Ok(id) => id,
        Err(e) => return fail(e),
    };
    let fam = match build_family(id, q, m) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let mut opts = VerifyOpts::default();
    if budget > 0 {
        opts.budget.max_visits = budget;
    }
    match verify_family(&fam, &opts) {
        Ok(report) if report.passed() => RepcycStatus::Ok,
        Ok(report) => {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| c.status == repcyc::families::CheckStatus::Fail)
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect();
            set_error(failed.join("; "));
            RepcycStatus::VerificationFailed
        }
        Err(e) => fail(e),
    }
}

/// Emit the results table as CSV ("csv"), JSON ("json") or markdown
/// ("markdown") into a newly allocated string; free it with
/// [`repcyc_string_free`]. With `verify` nonzero, distances are computed and
/// contradicted rows yield `VerificationFailed` (the string is still
/// produced).
///
/// # Safety
/// `format` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn repcyc_table1(
    format: *const c_char,
    verify: i32,
    out: *mut *mut c_char,
) -> RepcycStatus {
    if format.is_null() || out.is_null() {
        return invalid("null pointer argument");
    }
    let Ok(format) = CStr::from_ptr(format).to_str() else {
        return invalid("format is not valid UTF-8");
    };
    let fmt = match EmitFormat::from_str(format) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let records = match table1(verify != 0, &Budget::default()) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let text = match emit_to_string(&records, fmt) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => return invalid("emitted text contains NUL"),
    };
    *out = c.into_raw();
    if verify != 0 && !all_rows_verified(&records) {
        set_error("at least one table row contradicts its claim".to_string());
        return RepcycStatus::VerificationFailed;
    }
    RepcycStatus::Ok
}

/// Free a string allocated by this library. Null is a no-op.
///
/// # Safety
/// `s` must have been returned by a repcyc allocation-returning function and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn repcyc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
