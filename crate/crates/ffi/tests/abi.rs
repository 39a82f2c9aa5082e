//! Calls through the exported C functions, as a foreign caller would.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use soberbench_ffi::*;

fn last_error() -> String {
    let p = sb_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> Result<*mut SbSpace, (SbStatus, String)> {
    let text = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    match unsafe { sb_space_parse(text.as_ptr(), &mut h) } {
        SbStatus::Ok => Ok(h),
        s => Err((s, last_error())),
    }
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { sb_string_free(p) };
    s
}

fn flag(h: *const SbSpace, name: &str) -> bool {
    let name = CString::new(name).unwrap();
    let mut v = false;
    assert_eq!(unsafe { sb_classify_flag(h, ptr::null(), name.as_ptr(), &mut v) }, SbStatus::Ok);
    v
}

fn family(h: *const SbSpace, name: &str) -> Result<usize, SbStatus> {
    let name = CString::new(name).unwrap();
    let mut n = 0;
    match unsafe { sb_family_size(h, ptr::null(), name.as_ptr(), &mut n) } {
        SbStatus::Ok => Ok(n),
        s => Err(s),
    }
}

#[test]
fn lambda_through_the_handle_api() {
    let h = parse("poset 3\n0 < 2\n1 < 2\n").unwrap();
    let mut n = 0;
    assert_eq!(unsafe { sb_space_size(h, &mut n) }, SbStatus::Ok);
    assert_eq!(n, 3);
    assert!(flag(h, "sober"));
    assert!(!flag(h, "t1"));
    assert_eq!(family(h, "irreducible_closed"), Ok(3));
    assert_eq!(family(h, "compact_saturated"), Ok(4));
    assert_eq!(family(h, "nonsense"), Err(SbStatus::InvalidArgument));
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { sb_classify_json(h, ptr::null(), &mut json) }, SbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["well_filtered"], true);
    unsafe { sb_space_free(h) };
}

#[test]
fn covers_constructor_and_verify() {
    let lt = [0usize, 1];
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { sb_space_from_covers(2, lt.as_ptr(), 1, &mut h) }, SbStatus::Ok);
    let ids = CString::new("hofmann-mislove,inclusion-chain").unwrap();
    let caps = sb_caps_default();
    let mut failures = usize::MAX;
    let mut report = ptr::null_mut();
    let s = unsafe { sb_verify(h, &caps, ids.as_ptr(), &mut failures, &mut report) };
    assert_eq!(s, SbStatus::Ok);
    assert_eq!(failures, 0);
    let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["detail"]["open filters"], 2);
    let cyclic = [0usize, 1, 1, 0];
    let mut bad = ptr::null_mut();
    let s = unsafe { sb_space_from_covers(2, cyclic.as_ptr(), 2, &mut bad) };
    assert_eq!(s, SbStatus::NotAnOrder);
    assert!(bad.is_null());
    unsafe { sb_space_free(h) };
}

#[test]
fn cofinite_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { sb_space_cofinite(&mut h) }, SbStatus::Ok);
    assert!(!flag(h, "well_filtered"));
    assert!(flag(h, "rudin_space"));
    let mut n = 0;
    assert_eq!(unsafe { sb_space_size(h, &mut n) }, SbStatus::Unsupported);
    assert!(last_error().contains("infinite"));
    assert_eq!(family(h, "closed"), Err(SbStatus::Unsupported));
    unsafe { sb_space_free(h) };
}

#[test]
fn errors_set_status_and_message() {
    let (s, msg) = parse("poset 2\n0 < 1\n1 < 0\n").unwrap_err();
    assert_eq!(s, SbStatus::Parse);
    assert!(msg.contains("line 3"), "{msg}");
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { sb_space_parse(ptr::null(), &mut h) }, SbStatus::NullPointer);
    let text = CString::new("cofinite").unwrap();
    assert_eq!(unsafe { sb_space_parse(text.as_ptr(), ptr::null_mut()) }, SbStatus::NullPointer);
    let bytes = [0xffu8, 0];
    let s = unsafe { sb_space_parse(bytes.as_ptr().cast(), &mut h) };
    assert_eq!(s, SbStatus::InvalidUtf8);
    let mut n = 0;
    assert_eq!(unsafe { sb_space_size(ptr::null(), &mut n) }, SbStatus::NullPointer);
    // A successful call clears the message.
    let h = parse("poset 1\n").unwrap();
    assert!(sb_last_error_message().is_null());
    unsafe { sb_space_free(h) };
    unsafe { sb_space_free(ptr::null_mut()) };
    unsafe { sb_string_free(ptr::null_mut()) };
}

#[test]
fn caps_are_honoured() {
    let h = parse("poset 4\n0 < 1\n1 < 2\n2 < 3\n").unwrap();
    let bounded = |caps: *const SbCaps| {
        let mut json = ptr::null_mut();
        assert_eq!(unsafe { sb_classify_json(h, caps, &mut json) }, SbStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["sober"], true);
        v["bounded"].as_bool().unwrap()
    };
    assert!(!bounded(ptr::null()));
    let mut caps = sb_caps_default();
    caps.carrier = 2;
    caps.families = 2;
    assert!(bounded(&caps));
    unsafe { sb_space_free(h) };
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/soberbench.h");
    for item in [
        "SOBERBENCH_H",
        "typedef struct SbSpace SbSpace;",
        "SB_STATUS_OK = 0",
        "SB_STATUS_THEOREM_FAILED = 9",
        "sb_space_parse",
        "sb_space_from_covers",
        "sb_space_cofinite",
        "sb_space_free",
        "sb_classify_flag",
        "sb_classify_json",
        "sb_family_size",
        "sb_verify",
        "sb_last_error_message",
        "sb_string_free",
        "sb_caps_default",
    ] {
        assert!(header.contains(item), "header lacks {item}");
    }
}
