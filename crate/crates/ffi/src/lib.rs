//! C ABI over the `uudd` crate.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`UuddStatus`]; results come back
//!   through out-pointers.
//! * Big integers cross the boundary as NUL-terminated decimal strings owned
//!   by the caller and released with [`uudd_string_free`].
//! * Tables and series are opaque handles released with their `_free`
//!   function.
//! * After a non-OK status, [`uudd_last_error_message`] describes the failure
//!   on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use uudd::cli::{run_suite, RunOptions, Suite};
use uudd::genfun::{build_p, v_values, ScaledPSeries};
use uudd::permlab::{
    brute_alternating_ending_zero, brute_pnk_row, brute_uudd_count, count_whirlpool,
    FeasibilityLimits,
};
use uudd::{Error, PnkTable};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UuddStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    BoundExceeded = 3,
    InvalidArgument = 4,
    NonIntegral = 5,
    CheckFailed = 6,
    Panic = 7,
}

/// Identity checked by [`uudd_table_verify`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UuddIdentity {
    /// `p_n(-k) = p_n(k)`
    Symmetry = 0,
    /// `p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) = 2 p_n(k)`
    SecondDifference = 1,
    /// `(n-1) p_n(n) = n p_n(n-1)`
    EdgeRelation = 2,
}

/// Verification suite run by [`uudd_verify_suite`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UuddSuite {
    Lemmas = 0,
    Theorem = 1,
    Seidel = 2,
    Section3 = 3,
    All = 4,
}

/// Opaque `p_n(k)` triangle.
pub struct UuddTable(PnkTable);

/// Opaque scaled bivariate generating function of `2^n p_n(k)`.
pub struct UuddPSeries(ScaledPSeries);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> UuddStatus {
    match err {
        Error::BoundExceeded { .. } => UuddStatus::BoundExceeded,
        Error::IndexOutOfRange { .. } | Error::BeyondOrder { .. } => UuddStatus::OutOfRange,
        Error::NonIntegral { .. } => UuddStatus::NonIntegral,
        Error::IdentityFailure { .. } => UuddStatus::CheckFailed,
        _ => UuddStatus::InvalidArgument,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guarded(body: impl FnOnce() -> Result<(), (UuddStatus, String)>) -> UuddStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            UuddStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            UuddStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (UuddStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (UuddStatus, String) {
    (UuddStatus::NullPointer, format!("{what} is null"))
}

/// Stores `s` as a fresh C string in `*out`.
///
/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (UuddStatus, String)> {
    if out.is_null() {
        return Err(null_err("out"));
    }
    let c = CString::new(s).map_err(|e| (UuddStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Version of this library as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn uudd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failed call on this thread. Valid until the
/// next call into this library on the same thread; never null.
#[no_mangle]
pub extern "C" fn uudd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uudd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds rows `0..=max_n` of `p_n(k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_build(max_n: usize, out: *mut *mut UuddTable) -> UuddStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        *out = Box::into_raw(Box::new(UuddTable(PnkTable::build(max_n))));
        Ok(())
    })
}

/// # Safety
/// `table` must be null or a handle from [`uudd_table_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_free(table: *mut UuddTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Largest `n` stored in the table, or 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_max_n(table: *const UuddTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.max_n())
}

/// `p_n(k)` as a decimal string.
///
/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_get(
    table: *const UuddTable,
    n: usize,
    k: i64,
    out: *mut *mut c_char,
) -> UuddStatus {
    guarded(|| {
        let t = table.as_ref().ok_or_else(|| null_err("table"))?;
        let v = t.0.get(n, k).ok_or_else(|| {
            (
                UuddStatus::OutOfRange,
                format!("p_{n}({k}) is outside the table (max n = {})", t.0.max_n()),
            )
        })?;
        write_string(out, v.to_string())
    })
}

/// `sum_k p_n(k)` as a decimal string.
///
/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_row_sum(
    table: *const UuddTable,
    n: usize,
    out: *mut *mut c_char,
) -> UuddStatus {
    guarded(|| {
        let t = table.as_ref().ok_or_else(|| null_err("table"))?;
        let s = t.0.row_sum(n).map_err(lib_err)?;
        write_string(out, s.to_string())
    })
}

/// Checks one identity over the whole table and stores the verdict in `*holds`.
///
/// # Safety
/// `table` must be a live handle and `holds` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_table_verify(
    table: *const UuddTable,
    identity: UuddIdentity,
    holds: *mut bool,
) -> UuddStatus {
    guarded(|| {
        let t = table.as_ref().ok_or_else(|| null_err("table"))?;
        if holds.is_null() {
            return Err(null_err("holds"));
        }
        *holds = match identity {
            UuddIdentity::Symmetry => t.0.verify_symmetry(),
            UuddIdentity::SecondDifference => t.0.verify_second_difference(),
            UuddIdentity::EdgeRelation => t.0.verify_edge_relation(),
        };
        Ok(())
    })
}

/// Builds the scaled generating function to total degree `order`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_p_series_build(order: usize, out: *mut *mut UuddPSeries) -> UuddStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        *out = Box::into_raw(Box::new(UuddPSeries(build_p(order))));
        Ok(())
    })
}

/// # Safety
/// `series` must be null or a handle from [`uudd_p_series_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uudd_p_series_free(series: *mut UuddPSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// `p_n(k)` read from the generating function, as a decimal string.
///
/// # Safety
/// `series` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_p_series_extract(
    series: *const UuddPSeries,
    n: usize,
    k: i64,
    out: *mut *mut c_char,
) -> UuddStatus {
    guarded(|| {
        let s = series.as_ref().ok_or_else(|| null_err("series"))?;
        let v = s.0.extract_pnk(n, k).map_err(lib_err)?;
        write_string(out, v.to_string())
    })
}

/// `V_n`, the number of up-up-or-down-down permutations of length `2n + 1`,
/// from its generating function.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_v(n: usize, out: *mut *mut c_char) -> UuddStatus {
    guarded(|| {
        let v = v_values(n).map_err(lib_err)?;
        write_string(out, v[n].to_string())
    })
}

/// Brute-force row `p_n(-n..=n)` as comma-separated decimals.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_brute_pnk_row(n: usize, out: *mut *mut c_char) -> UuddStatus {
    guarded(|| {
        let row = brute_pnk_row(n, &FeasibilityLimits::from_env()).map_err(lib_err)?;
        let joined: Vec<String> = row.iter().map(ToString::to_string).collect();
        write_string(out, joined.join(","))
    })
}

/// Brute-force count of up-up-or-down-down permutations of odd `length`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_brute_uudd_count(length: usize, out: *mut *mut c_char) -> UuddStatus {
    guarded(|| {
        let c = brute_uudd_count(length, &FeasibilityLimits::from_env()).map_err(lib_err)?;
        write_string(out, c.to_string())
    })
}

/// Brute-force count of `rows x cols` whirlpool permutations.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_brute_whirlpool(
    rows: usize,
    cols: usize,
    out: *mut *mut c_char,
) -> UuddStatus {
    guarded(|| {
        let c = count_whirlpool(rows, cols, &FeasibilityLimits::from_env()).map_err(lib_err)?;
        write_string(out, c.to_string())
    })
}

/// Brute-force count of alternating permutations of `{-m..n}` ending with 0.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_brute_alternating(
    m: usize,
    n: usize,
    out: *mut *mut c_char,
) -> UuddStatus {
    guarded(|| {
        let c = brute_alternating_ending_zero(m, n, &FeasibilityLimits::from_env())
            .map_err(lib_err)?;
        write_string(out, c.to_string())
    })
}

/// Runs a verification suite. `passed` and `total` (each may be null) receive
/// the check counts; the status is `CheckFailed` when any check fails.
///
/// # Safety
/// `passed` and `total` must each be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uudd_verify_suite(
    suite: UuddSuite,
    n: usize,
    order: usize,
    passed: *mut usize,
    total: *mut usize,
) -> UuddStatus {
    guarded(|| {
        let suite = match suite {
            UuddSuite::Lemmas => Suite::Lemmas,
            UuddSuite::Theorem => Suite::Theorem,
            UuddSuite::Seidel => Suite::Seidel,
            UuddSuite::Section3 => Suite::Section3,
            UuddSuite::All => Suite::All,
        };
        let checks = run_suite(suite, n, order, &RunOptions::from_env());
        let ok = checks.iter().filter(|c| c.passed).count();
        if let Some(p) = passed.as_mut() {
            *p = ok;
        }
        if let Some(t) = total.as_mut() {
            *t = checks.len();
        }
        if ok != checks.len() {
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.anchor.as_str())
                .collect();
            return Err((UuddStatus::CheckFailed, failed.join("; ")));
        }
        Ok(())
    })
}

/// Reads a NUL-terminated string; used by tests and bindings that round-trip
/// returned values.
///
/// # Safety
/// `s` must be null or a valid NUL-terminated string.
pub unsafe fn read_c_str(s: *const c_char) -> Option<String> {
    if s.is_null() {
        return None;
    }
    Some(CStr::from_ptr(s).to_string_lossy().into_owned())
}
