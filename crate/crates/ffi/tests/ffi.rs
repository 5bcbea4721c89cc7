use std::ffi::c_char;
use std::ptr;

use uudd_ffi::*;

fn take(s: *mut c_char) -> String {
    let v = unsafe { read_c_str(s) }.expect("non-null string");
    unsafe { uudd_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { read_c_str(uudd_last_error_message()) }.unwrap()
}

struct Table(*mut UuddTable);

impl Table {
    fn build(max_n: usize) -> Self {
        let mut t = ptr::null_mut();
        assert_eq!(unsafe { uudd_table_build(max_n, &mut t) }, UuddStatus::Ok);
        Table(t)
    }

    fn get(&self, n: usize, k: i64) -> Result<String, UuddStatus> {
        let mut s = ptr::null_mut();
        match unsafe { uudd_table_get(self.0, n, k, &mut s) } {
            UuddStatus::Ok => Ok(take(s)),
            e => Err(e),
        }
    }
}

impl Drop for Table {
    fn drop(&mut self) {
        unsafe { uudd_table_free(self.0) };
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { read_c_str(uudd_version()) }.unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn table_values_and_sums() {
    let t = Table::build(6);
    assert_eq!(unsafe { uudd_table_max_n(t.0) }, 6);
    assert_eq!(t.get(4, 0).unwrap(), "408");
    assert_eq!(t.get(3, -3).unwrap(), "42");
    assert_eq!(t.get(3, 3).unwrap(), "42");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { uudd_table_row_sum(t.0, 6, &mut s) }, UuddStatus::Ok);
    assert_eq!(take(s), "10570416");
    for id in [
        UuddIdentity::Symmetry,
        UuddIdentity::SecondDifference,
        UuddIdentity::EdgeRelation,
    ] {
        let mut holds = false;
        assert_eq!(unsafe { uudd_table_verify(t.0, id, &mut holds) }, UuddStatus::Ok);
        assert!(holds, "{id:?}");
    }
}

#[test]
fn out_of_range_sets_message() {
    let t = Table::build(2);
    assert_eq!(t.get(3, 0), Err(UuddStatus::OutOfRange));
    assert!(last_error().contains("outside the table"));
    assert_eq!(t.get(2, 3), Err(UuddStatus::OutOfRange));
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { uudd_table_row_sum(t.0, 9, &mut s) }, UuddStatus::OutOfRange);
    assert!(s.is_null());
    assert_eq!(t.get(1, 1).unwrap(), "1");
    assert_eq!(last_error(), "");
}

#[test]
fn null_pointers_are_rejected() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { uudd_table_get(ptr::null(), 0, 0, &mut s) },
        UuddStatus::NullPointer
    );
    assert!(last_error().contains("table"));
    assert_eq!(unsafe { uudd_table_build(3, ptr::null_mut()) }, UuddStatus::NullPointer);
    assert_eq!(unsafe { uudd_v(2, ptr::null_mut()) }, UuddStatus::NullPointer);
    let t = Table::build(1);
    assert_eq!(
        unsafe { uudd_table_verify(t.0, UuddIdentity::Symmetry, ptr::null_mut()) },
        UuddStatus::NullPointer
    );
    assert_eq!(unsafe { uudd_table_max_n(ptr::null()) }, 0);
    unsafe {
        uudd_table_free(ptr::null_mut());
        uudd_p_series_free(ptr::null_mut());
        uudd_string_free(ptr::null_mut());
    }
}

#[test]
fn series_matches_table() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { uudd_p_series_build(12, &mut p) }, UuddStatus::Ok);
    let t = Table::build(6);
    for n in 0..=6usize {
        for k in -(n as i64)..=n as i64 {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { uudd_p_series_extract(p, n, k, &mut s) }, UuddStatus::Ok);
            assert_eq!(take(s), t.get(n, k).unwrap());
        }
    }
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { uudd_p_series_extract(p, 7, 0, &mut s) }, UuddStatus::OutOfRange);
    unsafe { uudd_p_series_free(p) };
}

#[test]
fn v_values() {
    for (n, want) in [(0, "1"), (1, "2"), (2, "14"), (3, "204"), (4, "5104"), (6, "10570416")] {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { uudd_v(n, &mut s) }, UuddStatus::Ok);
        assert_eq!(take(s), want);
    }
}

#[test]
fn brute_force_counts() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { uudd_brute_pnk_row(2, &mut s) }, UuddStatus::Ok);
    assert_eq!(take(s), "4,2,2,2,4");
    assert_eq!(unsafe { uudd_brute_uudd_count(5, &mut s) }, UuddStatus::Ok);
    assert_eq!(take(s), "14");
    assert_eq!(unsafe { uudd_brute_whirlpool(2, 3, &mut s) }, UuddStatus::Ok);
    assert_eq!(take(s), "84");
    assert_eq!(unsafe { uudd_brute_alternating(1, 1, &mut s) }, UuddStatus::Ok);
    assert_eq!(take(s), "1");
}

#[test]
fn brute_force_bounds() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { uudd_brute_pnk_row(40, &mut s) }, UuddStatus::BoundExceeded);
    assert!(s.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { uudd_brute_uudd_count(4, &mut s) }, UuddStatus::InvalidArgument);
}

#[test]
fn verify_suites() {
    let (mut passed, mut total) = (0usize, 0usize);
    let status = unsafe { uudd_verify_suite(UuddSuite::Lemmas, 10, 20, &mut passed, &mut total) };
    assert_eq!(status, UuddStatus::Ok, "{}", last_error());
    assert!(total > 0);
    assert_eq!(passed, total);
    let status =
        unsafe { uudd_verify_suite(UuddSuite::Theorem, 6, 12, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(status, UuddStatus::Ok, "{}", last_error());
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/uudd.h");
    for name in [
        "uudd_version",
        "uudd_last_error_message",
        "uudd_string_free",
        "uudd_table_build",
        "uudd_table_free",
        "uudd_table_max_n",
        "uudd_table_get",
        "uudd_table_row_sum",
        "uudd_table_verify",
        "uudd_p_series_build",
        "uudd_p_series_free",
        "uudd_p_series_extract",
        "uudd_v",
        "uudd_brute_pnk_row",
        "uudd_brute_uudd_count",
        "uudd_brute_whirlpool",
        "uudd_brute_alternating",
        "uudd_verify_suite",
        "typedef struct UuddTable UuddTable",
        "UUDD_STATUS_BOUND_EXCEEDED",
        "UUDD_SUITE_ALL",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    assert!(!header.contains("read_c_str"));
}
