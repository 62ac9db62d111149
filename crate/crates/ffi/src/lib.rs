//! C ABI over `qho_nodal`.
//!
//! Every function returns a [`QnStatus`]; on failure the message is kept
//! per thread and read with [`qn_last_error`]. Families are opaque
//! [`QnFamily`] handles released with [`qn_family_free`]. Strings returned
//! through out-parameters are released with [`qn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qho_nodal::eigenbasis::{EigenFamily, Parity};
use qho_nodal::experiments::{verify_two_domains, RunOptions};
use qho_nodal::field::Field;
use qho_nodal::geometry::{Point, Window, WindowProvenance};
use qho_nodal::nodal::{analyze, AnalysisOptions};
use qho_nodal::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QnStatus {
    Ok = 0,
    InvalidArgument = 1,
    /// θ equals a critical value.
    CriticalTheta = 2,
    /// Non-finite values, failed root bracketing or similar.
    Numerical = 3,
    NullPointer = 4,
    /// The output buffer is too short; the needed length was written.
    BufferTooSmall = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

/// Opaque eigenfunction handle.
pub struct QnFamily(EigenFamily);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QnStatus {
    match e {
        Error::CriticalTheta { .. } => QnStatus::CriticalTheta,
        Error::NonFinite { .. }
        | Error::NoBracket { .. }
        | Error::DegenerateHessian { .. }
        | Error::NotCritical { .. } => QnStatus::Numerical,
        _ => QnStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (QnStatus, String)>) -> QnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QnStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal error");
            QnStatus::Internal
        }
    }
}

fn lib<T>(r: qho_nodal::Result<T>) -> Result<T, (QnStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (QnStatus, String) {
    (QnStatus::NullPointer, format!("{what} is null"))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), (QnStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn family<'a>(f: *const QnFamily) -> Result<&'a EigenFamily, (QnStatus, String)> {
    f.as_ref().map(|h| &h.0).ok_or_else(|| null("family"))
}

unsafe fn new_family(r: qho_nodal::Result<EigenFamily>, out: *mut *mut QnFamily) -> QnStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let fam = lib(r)?;
        out.write(Box::into_raw(Box::new(QnFamily(fam))));
        Ok(())
    })
}

/// Message of the last failed call on this thread ("" after a success).
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn qn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `cosθ H_n(x) + sinθ H_n(y)` times the Gaussian, θ ∈ [0, π].
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_stern(n: u32, theta: f64, out: *mut *mut QnFamily) -> QnStatus {
    new_family(EigenFamily::stern(n, theta), out)
}

/// `H_n(x) - H_n(y)` times the Gaussian.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_difference(n: u32, out: *mut *mut QnFamily) -> QnStatus {
    new_family(Ok(EigenFamily::difference(n)), out)
}

/// Polar mode of degree `ell` with radial index `n`; `sine` selects the
/// sine angular factor.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_polar(ell: u32, n: u32, sine: bool, out: *mut *mut QnFamily) -> QnStatus {
    let parity = if sine { Parity::Sine } else { Parity::Cosine };
    new_family(EigenFamily::polar(ell, n, parity), out)
}

/// Oval family `A + aB + bC` of degree `4k` (Gaussian omitted).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_oval(k: u32, epsilon: f64, a: f64, b: f64, out: *mut *mut QnFamily) -> QnStatus {
    new_family(EigenFamily::oval(k, epsilon, a, b), out)
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `f` must come from a `qn_family_*` constructor and not be used again.
#[no_mangle]
pub unsafe extern "C" fn qn_family_free(f: *mut QnFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Full eigenfunction value at `(x, y)`.
///
/// # Safety
/// `f` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_value(f: *const QnFamily, x: f64, y: f64, out: *mut f64) -> QnStatus {
    guard(|| {
        let fam = family(f)?;
        put(out, fam.value(Point::new(x, y)), "out")
    })
}

/// Polynomial factor (same zero set, no Gaussian) at `(x, y)`.
///
/// # Safety
/// `f` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qn_family_nodal_value(f: *const QnFamily, x: f64, y: f64, out: *mut f64) -> QnStatus {
    guard(|| {
        let fam = family(f)?;
        put(out, fam.nodal_value(Point::new(x, y)), "out")
    })
}

/// Counts nodal domains and zero-set components on the square window of
/// half-width `half_width` sampled at `resolution²` points.
///
/// # Safety
/// `f` must be a live handle; `mu` and `components` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_count_domains(
    f: *const QnFamily,
    half_width: f64,
    resolution: usize,
    mu: *mut usize,
    components: *mut usize,
) -> QnStatus {
    guard(|| {
        let fam = family(f)?;
        if mu.is_null() || components.is_null() {
            return Err(null("output"));
        }
        let w = lib(Window::centered(half_width, WindowProvenance::User))?;
        let a = lib(analyze(&fam.nodal(), &w, resolution, AnalysisOptions::default()))?;
        mu.write(a.stats.mu);
        components.write(a.stats.components);
        Ok(())
    })
}

/// Physicists' Hermite polynomial `H_n(t)`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qn_hermite(n: u32, t: f64, out: *mut f64) -> QnStatus {
    guard(|| put(out, qho_nodal::specfun::hermite(n, t), "out"))
}

unsafe fn fill(values: &[f64], buf: *mut f64, len: usize, written: *mut usize) -> Result<(), (QnStatus, String)> {
    put(written, values.len(), "written")?;
    if values.len() > len {
        return Err((QnStatus::BufferTooSmall, format!("need {} entries, buffer has {len}", values.len())));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

/// Zeros of `H_n` in increasing order. `written` receives `n` even when
/// the buffer is too small.
///
/// # Safety
/// `buf` must be valid for `len` writes and `written` for one.
#[no_mangle]
pub unsafe extern "C" fn qn_hermite_zeros(n: u32, buf: *mut f64, len: usize, written: *mut usize) -> QnStatus {
    guard(|| fill(&qho_nodal::specfun::hermite_zeros(n).zeros, buf, len, written))
}

/// Critical values `θ(i, j)`, row-major `(n-1)×(n-1)`, in `(0, π)`.
///
/// # Safety
/// `buf` must be valid for `len` writes and `written` for one.
#[no_mangle]
pub unsafe extern "C" fn qn_critical_values(n: u32, buf: *mut f64, len: usize, written: *mut usize) -> QnStatus {
    guard(|| {
        let t = lib(qho_nodal::critical::critical_values(n))?;
        let flat: Vec<f64> = t.values.iter().flatten().copied().collect();
        fill(&flat, buf, len, written)
    })
}

/// Smallest critical value `θ_c`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qn_theta_c(n: u32, out: *mut f64) -> QnStatus {
    guard(|| put(out, lib(qho_nodal::critical::theta_c(n))?, "out"))
}

/// Returns `QN_STATUS_CRITICAL_THETA` if `theta` is a critical value for
/// degree `n`, so the Stern zero set has a singular point.
#[no_mangle]
pub extern "C" fn qn_check_theta(n: u32, theta: f64) -> QnStatus {
    guard(|| lib(qho_nodal::critical::critical_values(n).and_then(|t| t.check_regular(theta))))
}

/// Runs the two-domain verification and returns its JSON report in
/// `*json` (free with `qn_string_free`); `*pass` is set to the verdict.
/// `resolution` is the finest grid size (the sweep uses /4 and /2 too).
///
/// # Safety
/// `json` and `pass` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_verify_two_domains(
    n: u32,
    theta: f64,
    resolution: usize,
    json: *mut *mut c_char,
    pass: *mut bool,
) -> QnStatus {
    guard(|| {
        if json.is_null() || pass.is_null() {
            return Err(null("output"));
        }
        if resolution < 32 {
            return Err((QnStatus::InvalidArgument, "resolution must be at least 32".into()));
        }
        let opts = RunOptions {
            counts: vec![resolution / 4, resolution / 2, resolution],
            refine: Some(2 * resolution),
            ..RunOptions::default()
        };
        let r = lib(verify_two_domains(n, theta, &opts))?;
        let text = lib(r.to_json())?;
        let c = CString::new(text).map_err(|e| (QnStatus::Internal, e.to_string()))?;
        json.write(c.into_raw());
        pass.write(r.pass);
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn qn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
