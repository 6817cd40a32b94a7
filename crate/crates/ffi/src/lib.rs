//! C ABI over the `selfdual` library.
//!
//! Codes and derivatives are opaque heap handles created by `sd_*` constructors
//! and released with the matching `*_free`. Every fallible call returns an
//! [`SdStatus`]; on failure `sd_last_error_message` describes the cause for the
//! calling thread. Strings handed out by the library are released with
//! [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use selfdual::balance::{balance_check, eliminate_length8};
use selfdual::codes::{builtin_code, LinearCode, WeightDistribution};
use selfdual::designs::{derivative_from_designs, DesignProfile};
use selfdual::enumerator::{check_halves, derivative, Derivative};
use selfdual::transform::is_eigenvector_one;
use selfdual::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownCode = 4,
    NotSelfDual = 5,
    OutOfRange = 6,
    ResourceLimit = 7,
    InvalidInput = 8,
    DesignViolation = 9,
    Panic = 10,
}

/// A binary linear code.
pub struct SdCode(LinearCode);

/// A derivative `W<t>` of an exact weight enumerator.
pub struct SdDerivative(Derivative);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Parse { .. } | Error::MalformedMatrix(_) | Error::DependentRows { .. } => {
            SdStatus::Parse
        }
        Error::UnknownCode(_) => SdStatus::UnknownCode,
        Error::NotSelfDual(_) => SdStatus::NotSelfDual,
        Error::CoordinateOutOfRange { .. } | Error::OrderOutOfRange { .. } => SdStatus::OutOfRange,
        Error::ResourceLimit(_) => SdStatus::ResourceLimit,
        Error::DesignViolation { .. } => SdStatus::DesignViolation,
        _ => SdStatus::InvalidInput,
    }
}

fn fail(e: Error) -> SdStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> Result<(), SdStatus>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SdStatus> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(SdStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SdStatus::InvalidUtf8
    })
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, SdStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer");
        SdStatus::NullPointer
    })
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, SdStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        SdStatus::NullPointer
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library strings contain no NUL")
        .into_raw()
}

/// Message for the last failure on the calling thread. Valid until the next
/// failing call on that thread; never NULL.
#[no_mangle]
pub extern "C" fn sd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a built-in code: `e8`, `c2x4`, `golay24` or `qr48`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_code_builtin(name: *const c_char, out: *mut *mut SdCode) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let code = builtin_code(read_str(name)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdCode(code)));
        Ok(())
    })
}

/// Parses a generator matrix, one row of `0`/`1` characters per line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_code_from_generator(
    text: *const c_char,
    out: *mut *mut SdCode,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let code = LinearCode::parse_generator(read_str(text)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdCode(code)));
        Ok(())
    })
}

/// Releases a code. NULL is ignored.
///
/// # Safety
/// `code` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sd_code_free(code: *mut SdCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length `n`, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_code_length(code: *const SdCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.length())
}

/// Dimension, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_code_dimension(code: *const SdCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.dimension())
}

/// Whether the code equals its dual; false for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_code_is_self_dual(code: *const SdCode) -> bool {
    code.as_ref().is_some_and(|c| c.0.is_self_dual())
}

/// Computes `W<t>` by enumerating the codewords.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_compute(
    code: *const SdCode,
    t: usize,
    out: *mut *mut SdDerivative,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let d = derivative(&handle(code)?.0, t).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdDerivative(d)));
        Ok(())
    })
}

/// Computes `W<n−5>` from a design profile (`n=<n>` then `<w> <b_w>` lines).
///
/// # Safety
/// `profile` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_from_profile(
    profile: *const c_char,
    out: *mut *mut SdDerivative,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let p = DesignProfile::parse(read_str(profile)?).map_err(fail)?;
        let d = derivative_from_designs(&p).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdDerivative(d)));
        Ok(())
    })
}

/// Parses a derivative in text or JSON form.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_parse(
    text: *const c_char,
    out: *mut *mut SdDerivative,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let d = Derivative::parse(read_str(text)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(SdDerivative(d)));
        Ok(())
    })
}

/// Releases a derivative. NULL is ignored.
///
/// # Safety
/// `d` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_free(d: *mut SdDerivative) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of entries, `2^(n−t)`, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_len(d: *const SdDerivative) -> usize {
    d.as_ref().map_or(0, |d| d.0.entries().len())
}

/// Order `t`, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_order(d: *const SdDerivative) -> usize {
    d.as_ref().map_or(0, |d| d.0.order())
}

/// Entry `index` as `<d>*p + <c>`; free with [`sd_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_entry(
    d: *const SdDerivative,
    index: usize,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let d = &handle(d)?.0;
        let Some(e) = d.entries().get(index) else {
            set_error(&format!("index {index} out of range"));
            return Err(SdStatus::OutOfRange);
        };
        *out = to_c_string(e.to_string());
        Ok(())
    })
}

/// The whole derivative in text form; free with [`sd_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_to_text(
    d: *const SdDerivative,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = to_c_string(handle(d)?.0.to_text());
        Ok(())
    })
}

/// Whether the derivative is fixed by the normalized Hadamard power, and
/// whether its two halves satisfy the conjugate-mirror relation.
///
/// # Safety
/// `d` must be a live handle; `eigen` and `halves` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_derivative_eigencheck(
    d: *const SdDerivative,
    eigen: *mut bool,
    halves: *mut bool,
) -> SdStatus {
    guard(|| {
        let (eigen, halves) = (out_ptr(eigen)?, out_ptr(halves)?);
        let d = &handle(d)?.0;
        *eigen = is_eigenvector_one(&d.to_spectral());
        *halves = check_halves(d);
        Ok(())
    })
}

/// Evaluates the balance identity at the 1-based `coordinate`.
///
/// # Safety
/// `code` must be a live handle; `passes` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_balance_check(
    code: *const SdCode,
    coordinate: usize,
    passes: *mut bool,
) -> SdStatus {
    guard(|| {
        let passes = out_ptr(passes)?;
        *passes = balance_check(&handle(code)?.0, coordinate)
            .map_err(fail)?
            .passes();
        Ok(())
    })
}

/// Balance test on a length-8 candidate `A_0..A_8` (`len` must be 9).
/// `y` receives the solved `A_{2,0}` as `num/den` or an integer, or NULL when
/// no unique value exists; free it with [`sd_string_free`].
///
/// # Safety
/// `counts` must point to `len` readable values; `survives` and `y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_eliminate_length8(
    counts: *const u64,
    len: usize,
    survives: *mut bool,
    y: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let (survives, y) = (out_ptr(survives)?, out_ptr(y)?);
        if counts.is_null() {
            set_error("null counts");
            return Err(SdStatus::NullPointer);
        }
        let counts = std::slice::from_raw_parts(counts, len).to_vec();
        let wd = WeightDistribution::from_counts(counts).map_err(fail)?;
        let v = eliminate_length8(&wd).map_err(fail)?;
        *survives = v.survives;
        *y = v
            .y()
            .map_or(ptr::null_mut(), |q| to_c_string(q.to_string()));
        Ok(())
    })
}
