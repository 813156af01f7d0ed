//! C interface to `cablefloer`.
//!
//! Objects are opaque handles created by the `cf_knot_*` and `cf_presentation_*`
//! constructors and released with the matching `*_free`. Every fallible call returns a
//! [`CfStatus`]; on failure a message describing the last error on the calling
//! thread is available from [`cf_last_error`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cablefloer::hfunc::{h_stab, h_torus, HKnot};
use cablefloer::laurent::{torus_knot_delta, LaurentPoly};
use cablefloer::presentation::{build_colored, build_tensor, build_torus, Presentation};
use cablefloer::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// Δ(1) ≠ 1, asymmetric Δ, or half-integer exponents.
    BadPolynomial = 4,
    NotLSpace = 5,
    OffLattice = 6,
    Internal = 7,
    Panic = 8,
}

impl From<&Error> for CfStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::BadExponent(_) => CfStatus::Parse,
            Error::NotNormalized(_) | Error::Asymmetric | Error::HalfIntegerKnot => CfStatus::BadPolynomial,
            Error::NotLSpace(_) => CfStatus::NotLSpace,
            Error::OffLattice(_) => CfStatus::OffLattice,
            Error::InvalidArgument(_) | Error::WindowOutOfRange(_) | Error::NonDivisible(_) => CfStatus::InvalidArgument,
            Error::Internal(_) | Error::Io(..) => CfStatus::Internal,
        }
    }
}

/// An L-space knot, described by its h-function.
pub struct CfKnot(HKnot);

/// A finitely presented multigraded module.
pub struct CfPresentation(Presentation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (CfStatus, String)>) -> CfStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            CfStatus::Panic
        }
    }
}

fn lib<T>(r: cablefloer::Result<T>) -> Result<T, (CfStatus, String)> {
    r.map_err(|e| (CfStatus::from(&e), e.to_string()))
}

fn null(what: &str) -> (CfStatus, String) {
    (CfStatus::NullPointer, format!("{what} is NULL"))
}

fn invalid(msg: impl Into<String>) -> (CfStatus, String) {
    (CfStatus::InvalidArgument, msg.into())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], (CfStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (CfStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn knot_ref<'a>(k: *const CfKnot) -> Result<&'a HKnot, (CfStatus, String)> {
    k.as_ref().map(|k| &k.0).ok_or_else(|| null("knot"))
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Knot from its Alexander polynomial, e.g. `"t^3 - t^2 + 1 - t^-2 + t^-3"`.
///
/// # Safety
/// `delta` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_from_delta(delta: *const c_char, out: *mut *mut CfKnot) -> CfStatus {
    guard(|| {
        if delta.is_null() {
            return Err(null("delta"));
        }
        let text = CStr::from_ptr(delta).to_str().map_err(|_| invalid("delta is not UTF-8"))?;
        let poly: LaurentPoly = lib(text.parse())?;
        let knot = lib(HKnot::from_delta(&poly))?;
        write_out(out, Box::into_raw(Box::new(CfKnot(knot))), "out")
    })
}

/// The torus knot `T(p, q)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_torus(p: i64, q: i64, out: *mut *mut CfKnot) -> CfStatus {
    guard(|| {
        let knot = lib(HKnot::from_delta(&lib(torus_knot_delta(p, q))?))?;
        write_out(out, Box::into_raw(Box::new(CfKnot(knot))), "out")
    })
}

/// Overrides the twist from which cables are trusted to be L-space links.
///
/// # Safety
/// `knot` must come from a `cf_knot_*` constructor.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_set_threshold(knot: *mut CfKnot, m: i64) -> CfStatus {
    guard(|| {
        let k = knot.as_mut().ok_or_else(|| null("knot"))?;
        k.0 = k.0.clone().with_threshold(m);
        Ok(())
    })
}

/// # Safety
/// `knot` must be NULL or come from a `cf_knot_*` constructor, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_free(knot: *mut CfKnot) {
    if !knot.is_null() {
        drop(Box::from_raw(knot));
    }
}

/// # Safety
/// `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_genus(knot: *const CfKnot, out: *mut i64) -> CfStatus {
    guard(|| write_out(out, knot_ref(knot)?.genus(), "out"))
}

/// `h_K(s)`.
///
/// # Safety
/// `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_knot_h(knot: *const CfKnot, s: i64, out: *mut i64) -> CfStatus {
    guard(|| write_out(out, knot_ref(knot)?.h(s), "out"))
}

/// h-function of the cable `K_{n,mn}` at normalized degree `sbar[0..n]`.
/// `lspace_verified` (may be NULL) reports whether `m` is in the trusted range.
///
/// # Safety
/// `sbar` must point to `n` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_h_stab(
    knot: *const CfKnot,
    n: usize,
    m: i64,
    sbar: *const i64,
    out: *mut i64,
    lspace_verified: *mut bool,
) -> CfStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        let s = slice(sbar, n, "sbar")?;
        let h = lib(h_stab(k, n as i64, m, s))?;
        if !lspace_verified.is_null() {
            lspace_verified.write(h.lspace_verified);
        }
        write_out(out, h.value, "out")
    })
}

/// h-function of the torus link `T(n, mn)` at doubled Alexander degree `s2[0..n]`.
///
/// # Safety
/// `s2` must point to `n` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_h_torus(n: usize, m: i64, s2: *const i64, out: *mut i64) -> CfStatus {
    guard(|| {
        let s = slice(s2, n, "s2")?;
        write_out(out, lib(h_torus(n as i64, m, s))?, "out")
    })
}

fn boxed(p: Presentation) -> *mut CfPresentation {
    Box::into_raw(Box::new(CfPresentation(p)))
}

/// Presentation of `⊕_s HFL(T(n, mn))`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_torus(n: usize, m: usize, out: *mut *mut CfPresentation) -> CfStatus {
    guard(|| write_out(out, boxed(lib(build_torus(n, m))?), "out"))
}

/// Presentation of the colored homology of `knot` on `n` strands with `count`
/// generators.
///
/// # Safety
/// `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_colored(
    knot: *const CfKnot,
    n: usize,
    count: usize,
    out: *mut *mut CfPresentation,
) -> CfStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        write_out(out, boxed(lib(build_colored(k.staircase(), n, count))?), "out")
    })
}

/// Presentation of `CFK(K)^{⊗n}` over the colored unknot algebra.
///
/// # Safety
/// `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_tensor(
    knot: *const CfKnot,
    n: usize,
    count: usize,
    out: *mut *mut CfPresentation,
) -> CfStatus {
    guard(|| {
        let k = knot_ref(knot)?;
        write_out(out, boxed(lib(build_tensor(k.staircase(), n, count))?), "out")
    })
}

/// # Safety
/// `p` must be NULL or come from a `cf_presentation_*` constructor, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_free(p: *mut CfPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of strands of the presentation.
///
/// # Safety
/// `p` must come from a `cf_presentation_*` constructor; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_strands(p: *const CfPresentation, out: *mut usize) -> CfStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("presentation"))?;
        write_out(out, p.0.n(), "out")
    })
}

/// Whether the presentation is exact at doubled Alexander degree `a2[0..n]`.
///
/// # Safety
/// `p` must come from a `cf_presentation_*` constructor; `a2` must point to `n`
/// integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_valid_at(
    p: *const CfPresentation,
    a2: *const i64,
    n: usize,
    out: *mut bool,
) -> CfStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("presentation"))?;
        let a = slice(a2, n, "a2")?;
        if a.len() != p.0.n() {
            return Err(invalid(format!("degree has {} entries, expected {}", a.len(), p.0.n())));
        }
        write_out(out, p.0.validity().contains(a), "out")
    })
}

/// `dim_F` of the module in doubled Alexander degree `a2[0..n]` and Maslov degree `maslov`.
///
/// # Safety
/// `p` must come from a `cf_presentation_*` constructor; `a2` must point to `n`
/// integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_presentation_graded_dim(
    p: *const CfPresentation,
    a2: *const i64,
    n: usize,
    maslov: i64,
    out: *mut usize,
) -> CfStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("presentation"))?;
        let a = slice(a2, n, "a2")?;
        write_out(out, lib(p.0.graded_dim(a, maslov))?, "out")
    })
}

/// Checks the specialization identity for every `x_i` on `n` strands.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cf_verify_hy(n: usize, out: *mut bool) -> CfStatus {
    guard(|| write_out(out, lib(cablefloer::hybridge::verify_hy(n))?, "out"))
}
