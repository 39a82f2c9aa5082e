//! C ABI for the workbench.
//!
//! Spaces are opaque handles created by `sb_space_*` constructors and
//! released with `sb_space_free`. Every function returns an `SbStatus`;
//! results go through out-pointers. On a nonzero status,
//! `sb_last_error_message` describes the error for the calling thread.
//! Strings returned by the library are freed with `sb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use soberbench::classify::classify;
use soberbench::classify::theorems::{verify_theorems, Verdict};
use soberbench::cli::{parse_space, parse_suite};
use soberbench::space::{enumerate_families, Families};
use soberbench::{Caps, Error, FinPoset, Space};

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotAnOrder = 4,
    InvalidArgument = 5,
    CapExceeded = 6,
    Unsupported = 7,
    CarrierTooLarge = 8,
    /// A theorem check failed; the report is still written.
    TheoremFailed = 9,
    Panic = 10,
}

/// Enumeration limits; pass NULL for the defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SbCaps {
    pub carrier: usize,
    pub powerspace: usize,
    pub maps: usize,
    pub families: usize,
    pub lattice: usize,
    pub target_size: usize,
}

/// Opaque space handle.
pub struct SbSpace {
    space: Space,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SbStatus {
    match e {
        Error::NotAnOrder(_) | Error::Cycle(_) => SbStatus::NotAnOrder,
        Error::IndexOutOfRange { .. } | Error::InvalidArgument(_) => SbStatus::InvalidArgument,
        Error::CarrierTooLarge(_) => SbStatus::CarrierTooLarge,
        Error::CapExceeded { .. } => SbStatus::CapExceeded,
        Error::Unsupported(_) => SbStatus::Unsupported,
        Error::Parse { .. } => SbStatus::Parse,
    }
}

struct Failure(SbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SbStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, recording the error message and containing panics.
fn guard(f: impl FnOnce() -> Result<SbStatus, Failure>) -> SbStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            SbStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn space_arg<'a>(p: *const SbSpace) -> Result<&'a Space, Failure> {
    p.as_ref().map(|s| &s.space).ok_or_else(|| null("space"))
}

unsafe fn caps_arg(p: *const SbCaps) -> Caps {
    match p.as_ref() {
        None => Caps::default(),
        Some(c) => Caps {
            carrier: c.carrier,
            powerspace: c.powerspace,
            maps: c.maps,
            families: c.families,
            lattice: c.lattice,
            target_size: c.target_size,
        },
    }
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn new_handle(space: Space) -> *mut SbSpace {
    Box::into_raw(Box::new(SbSpace { space }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no nul").into_raw()
}

/// The default caps.
#[no_mangle]
pub extern "C" fn sb_caps_default() -> SbCaps {
    let c = Caps::default();
    SbCaps {
        carrier: c.carrier,
        powerspace: c.powerspace,
        maps: c.maps,
        families: c.families,
        lattice: c.lattice,
        target_size: c.target_size,
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library from this thread.
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Parses a space in the text file format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_space_parse(text: *const c_char, out: *mut *mut SbSpace) -> SbStatus {
    guard(|| {
        let x = parse_space(str_arg(text, "text")?)?;
        write_out(out, new_handle(x))?;
        Ok(SbStatus::Ok)
    })
}

/// A finite poset on `0..n` from `npairs` cover pairs stored as
/// `lt[2*k] < lt[2*k+1]`.
///
/// # Safety
/// `lt` must point to `2 * npairs` values (may be NULL when `npairs` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_space_from_covers(
    n: usize,
    lt: *const usize,
    npairs: usize,
    out: *mut *mut SbSpace,
) -> SbStatus {
    guard(|| {
        let pairs: Vec<(usize, usize)> = if npairs == 0 {
            Vec::new()
        } else if lt.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(lt, 2 * npairs)
                .chunks_exact(2)
                .map(|c| (c[0], c[1]))
                .collect()
        };
        let p = FinPoset::from_covers(n, &pairs)?;
        write_out(out, new_handle(Space::Finite(p)))?;
        Ok(SbStatus::Ok)
    })
}

/// The natural numbers with the cofinite topology.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_space_cofinite(out: *mut *mut SbSpace) -> SbStatus {
    guard(|| {
        write_out(out, new_handle(Space::Cofinite))?;
        Ok(SbStatus::Ok)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `space` must come from a constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sb_space_free(space: *mut SbSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points; `Unsupported` for the cofinite space.
///
/// # Safety
/// `space` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_space_size(space: *const SbSpace, out: *mut usize) -> SbStatus {
    guard(|| match space_arg(space)? {
        Space::Finite(p) => {
            write_out(out, p.len())?;
            Ok(SbStatus::Ok)
        }
        Space::Cofinite => Err(Failure(SbStatus::Unsupported, "the cofinite space is infinite".into())),
    })
}

/// One flag of the classification vector, such as `"sober"`.
///
/// # Safety
/// `space` must be a live handle, `name` a nul-terminated string, `out`
/// writable. `caps` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sb_classify_flag(
    space: *const SbSpace,
    caps: *const SbCaps,
    name: *const c_char,
    out: *mut bool,
) -> SbStatus {
    guard(|| {
        let x = space_arg(space)?;
        let name = str_arg(name, "name")?;
        let v = classify(x, &caps_arg(caps))?;
        let flag = v
            .get(name)
            .ok_or_else(|| Failure(SbStatus::InvalidArgument, format!("unknown flag {name:?}")))?;
        write_out(out, flag)?;
        Ok(SbStatus::Ok)
    })
}

/// The classification vector as JSON.
///
/// # Safety
/// `space` must be a live handle and `out` writable. `caps` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sb_classify_json(
    space: *const SbSpace,
    caps: *const SbCaps,
    out: *mut *mut c_char,
) -> SbStatus {
    guard(|| {
        let v = classify(space_arg(space)?, &caps_arg(caps))?;
        let s = serde_json::to_string(&v).expect("serializable");
        write_out(out, c_string(s))?;
        Ok(SbStatus::Ok)
    })
}

/// Size of a named family of a finite space: `closed`, `open`,
/// `irreducible_closed`, `directed_closures`, `point_closures`, `rudin`,
/// `well_filtered_determined`, `compact_saturated` or `supercompact`.
///
/// # Safety
/// `space` must be a live handle, `name` a nul-terminated string, `out`
/// writable. `caps` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sb_family_size(
    space: *const SbSpace,
    caps: *const SbCaps,
    name: *const c_char,
    out: *mut usize,
) -> SbStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let Families::Finite(f) = enumerate_families(space_arg(space)?, &caps_arg(caps))? else {
            return Err(Failure(SbStatus::Unsupported, "families of the cofinite space are infinite".into()));
        };
        let len = match name {
            "closed" => f.closed.len(),
            "open" => f.open.len(),
            "irreducible_closed" => f.irreducible_closed.len(),
            "directed_closures" => f.directed_closures.len(),
            "point_closures" => f.point_closures.len(),
            "rudin" => f.rudin.len(),
            "well_filtered_determined" => f.well_filtered_determined.len(),
            "compact_saturated" => f.compact_saturated.len(),
            "supercompact" => f.supercompact.len(),
            _ => {
                return Err(Failure(SbStatus::InvalidArgument, format!("unknown family {name:?}")))
            }
        };
        write_out(out, len)?;
        Ok(SbStatus::Ok)
    })
}

/// Runs theorem checks. `ids` is a comma-separated list or `"all"` (NULL
/// means all). Writes the number of failed checks and, if `report` is not
/// NULL, the reports as a JSON array. Returns `TheoremFailed` when some
/// check failed.
///
/// # Safety
/// `space` must be a live handle and `failures` writable; `ids`, `caps` and
/// `report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sb_verify(
    space: *const SbSpace,
    caps: *const SbCaps,
    ids: *const c_char,
    failures: *mut usize,
    report: *mut *mut c_char,
) -> SbStatus {
    guard(|| {
        let x = space_arg(space)?;
        let sel = if ids.is_null() { Vec::new() } else { parse_suite(str_arg(ids, "ids")?) };
        let sel: Vec<&str> = sel.iter().map(String::as_str).collect();
        let reports = verify_theorems(x, &sel, &caps_arg(caps))?;
        let failed = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
        write_out(failures, failed)?;
        if !report.is_null() {
            let s = serde_json::to_string(&reports).expect("serializable");
            write_out(report, c_string(s))?;
        }
        Ok(if failed > 0 { SbStatus::TheoremFailed } else { SbStatus::Ok })
    })
}

/// Frees a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
