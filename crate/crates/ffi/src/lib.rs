//! C ABI over `manin`.
//!
//! Every fallible call returns a [`ManinStatus`]; on failure the message is
//! available from [`manin_last_error_message`] on the same thread. Strings
//! handed out by the library must be released with [`manin_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use manin::lie::LieAlgebra;
use manin::scenario::{run_batch, to_json};

/// Result of a call across the C boundary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManinStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Panic = 4,
}

/// Opaque handle to a complex reductive Lie algebra.
pub struct ManinAlgebra {
    inner: LieAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Runs `f`, turning errors and panics into a status plus the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (ManinStatus, String)>) -> ManinStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ManinStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            ManinStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (ManinStatus, String)> {
    if s.is_null() {
        return Err((ManinStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (ManinStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

/// Builds `g = g_1 × … × g_k × C^center_rank` from comma-separated type names
/// such as `"A1,A2"`; an empty string gives an abelian algebra.
///
/// # Safety
/// `types` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn manin_algebra_new(
    types: *const c_char,
    center_rank: usize,
    out: *mut *mut ManinAlgebra,
) -> ManinStatus {
    guard(|| {
        if out.is_null() {
            return Err((ManinStatus::NullPointer, "out is null".into()));
        }
        *out = ptr::null_mut();
        let text = read_str(types, "types")?;
        let names: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let inner =
            LieAlgebra::from_names(&names, center_rank).map_err(|e| (ManinStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(ManinAlgebra { inner }));
        Ok(())
    })
}

/// Releases an algebra; null is ignored.
///
/// # Safety
/// `alg` must come from [`manin_algebra_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn manin_algebra_free(alg: *mut ManinAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Complex dimension, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn manin_algebra_dim(alg: *const ManinAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.dim())
}

/// Rank (dimension of a Cartan subalgebra), or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn manin_algebra_rank(alg: *const ManinAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.rank())
}

/// Human-readable description, e.g. `A1xA2 + C^1`.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer; free the result
/// with [`manin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn manin_algebra_describe(alg: *const ManinAlgebra, out: *mut *mut c_char) -> ManinStatus {
    guard(|| {
        let (Some(a), false) = (alg.as_ref(), out.is_null()) else {
            return Err((ManinStatus::NullPointer, "algebra or out is null".into()));
        };
        *out = into_c_string(a.inner.describe());
        Ok(())
    })
}

/// Runs one JSON scenario and returns the JSON report.
///
/// The call succeeds whenever a report is produced, even if the scenario
/// fails: `exit_code` then carries the runner's code (0 pass, 1 a command
/// failed, 2 parse error, 3 validation error).
///
/// # Safety
/// `scenario_json` must be a NUL-terminated string; `report` and `exit_code`
/// must be valid pointers. Free the report with [`manin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn manin_run_scenario(
    scenario_json: *const c_char,
    verbose: bool,
    report: *mut *mut c_char,
    exit_code: *mut i32,
) -> ManinStatus {
    guard(|| {
        if report.is_null() || exit_code.is_null() {
            return Err((ManinStatus::NullPointer, "report or exit_code is null".into()));
        }
        *report = ptr::null_mut();
        let text = read_str(scenario_json, "scenario_json")?;
        let r = run_batch(&[("<ffi>".to_string(), text.to_string())], verbose, 1);
        *exit_code = r.exit_code;
        *report = into_c_string(to_json(&r));
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn manin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn manin_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
