//! C ABI for `hytet`.
//!
//! A tetrahedron is an opaque `HytetTetrahedron *` created from six edge
//! lengths in the order `l12, l13, l14, l23, l24, l34` and released with
//! `hytet_tetrahedron_free`. Every fallible call returns a `HytetStatus`;
//! on failure `hytet_last_error_message` describes the error. Panics never
//! cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hytet::oracle::{embed_vertices, volume_monte_carlo, MonteCarloConfig};
use hytet::{
    cofactors, dihedral_angles, edge_matrix_from_lengths, exists, volume_edges, volume_regular, volume_sforza,
    EdgeLengths, Error, QuadratureConfig, VolumeResult,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HytetStatus {
    Ok = 0,
    NullPointer = 1,
    /// Non-finite or negative input.
    Domain = 2,
    /// The lengths do not bound a compact tetrahedron.
    Nonexistent = 3,
    /// A flat configuration where the quantity is undefined.
    Degenerate = 4,
    Inconsistent = 5,
    Numerical = 6,
    Panic = 7,
}

/// Opaque handle.
pub struct HytetTetrahedron {
    lengths: EdgeLengths,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> HytetStatus {
    match err {
        Error::Domain { .. } | Error::Precondition(_) | Error::OutsideDomain(_) => HytetStatus::Domain,
        Error::NonExistent(_) | Error::NotATetrahedron(_) | Error::NotRealizable(_) => HytetStatus::Nonexistent,
        Error::DegenerateEmbedding { .. } => HytetStatus::Degenerate,
        Error::Inconsistent(_) => HytetStatus::Inconsistent,
        Error::Numerical(_) => HytetStatus::Numerical,
    }
}

fn fail(err: Error) -> HytetStatus {
    set_error(&err.to_string());
    status_of(&err)
}

fn guard(f: impl FnOnce() -> HytetStatus) -> HytetStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == HytetStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => {
            set_error("internal panic");
            HytetStatus::Panic
        }
    }
}

fn null(what: &str) -> HytetStatus {
    set_error(&format!("{what} is null"));
    HytetStatus::NullPointer
}

fn quadrature(tol: f64) -> QuadratureConfig {
    if tol > 0.0 && tol.is_finite() {
        QuadratureConfig {
            abs_tol: tol,
            rel_tol: tol,
            ..QuadratureConfig::default()
        }
    } else {
        QuadratureConfig::default()
    }
}

unsafe fn write_volume(r: VolumeResult, value: *mut f64, error_estimate: *mut f64) -> HytetStatus {
    if value.is_null() {
        return null("value");
    }
    *value = r.value;
    if !error_estimate.is_null() {
        *error_estimate = r.error_estimate;
    }
    HytetStatus::Ok
}

/// Creates a tetrahedron from `lengths[6]`. The lengths are validated but
/// existence is not required; query it with `hytet_tetrahedron_exists`.
///
/// # Safety
/// `lengths` must point to six readable doubles and `out` to a writable
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_new(lengths: *const f64, out: *mut *mut HytetTetrahedron) -> HytetStatus {
    guard(|| {
        if lengths.is_null() {
            return null("lengths");
        }
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        let mut v = [0.0; 6];
        v.copy_from_slice(std::slice::from_raw_parts(lengths, 6));
        match EdgeLengths::from_array(v) {
            Ok(l) => {
                *out = Box::into_raw(Box::new(HytetTetrahedron { lengths: l }));
                HytetStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `t` must come from `hytet_tetrahedron_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_free(t: *mut HytetTetrahedron) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Existence verdict; `degenerate` may be null.
///
/// # Safety
/// `t` must be a live handle and `exists_out` writable.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_exists(
    t: *const HytetTetrahedron,
    exists_out: *mut bool,
    degenerate: *mut bool,
) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        if exists_out.is_null() {
            return null("exists");
        }
        let r = exists(&t.lengths);
        *exists_out = r.exists;
        if !degenerate.is_null() {
            *degenerate = r.degenerate;
        }
        HytetStatus::Ok
    })
}

/// Admissible interval `[l1, l2]` for `l34`.
///
/// # Safety
/// `t` must be a live handle, `l1` and `l2` writable.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_bounds(
    t: *const HytetTetrahedron,
    l1: *mut f64,
    l2: *mut f64,
) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        if l1.is_null() || l2.is_null() {
            return null("output");
        }
        let l = &t.lengths;
        match hytet::l34_bounds(l.l12, l.l13, l.l14, l.l23, l.l24) {
            Ok(b) => {
                *l1 = b.l1;
                *l2 = b.l2;
                HytetStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Dihedral angles in radians, written to `out[6]` in edge order.
///
/// # Safety
/// `t` must be a live handle and `out` must point to six writable doubles.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_angles(t: *const HytetTetrahedron, out: *mut f64) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        if out.is_null() {
            return null("out");
        }
        let r = exists(&t.lengths);
        if !r.exists {
            return fail(Error::NonExistent(Box::new(r)));
        }
        let angles = edge_matrix_from_lengths(&t.lengths).and_then(|e| dihedral_angles(&cofactors(&e)));
        match angles {
            Ok(a) => {
                std::slice::from_raw_parts_mut(out, 6).copy_from_slice(&a.as_array());
                HytetStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Volume by the edge integral. `tol <= 0` selects the default tolerance;
/// `error_estimate` may be null.
///
/// # Safety
/// `t` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_volume(
    t: *const HytetTetrahedron,
    tol: f64,
    value: *mut f64,
    error_estimate: *mut f64,
) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        match volume_edges(&t.lengths, &quadrature(tol)) {
            Ok(r) => write_volume(r, value, error_estimate),
            Err(e) => fail(e),
        }
    })
}

/// Volume by the dihedral-angle integral.
///
/// # Safety
/// As for `hytet_tetrahedron_volume`.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_volume_sforza(
    t: *const HytetTetrahedron,
    tol: f64,
    value: *mut f64,
    error_estimate: *mut f64,
) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        let r = exists(&t.lengths);
        if !r.exists {
            return fail(Error::NonExistent(Box::new(r)));
        }
        let res = edge_matrix_from_lengths(&t.lengths)
            .and_then(|e| dihedral_angles(&cofactors(&e)))
            .and_then(|a| volume_sforza(&a, &quadrature(tol)));
        match res {
            Ok(r) => write_volume(r, value, error_estimate),
            Err(e) => fail(e),
        }
    })
}

/// Monte Carlo volume; `std_error` may be null. Deterministic in
/// `(seed, samples)`.
///
/// # Safety
/// `t` must be a live handle and `value` writable.
#[no_mangle]
pub unsafe extern "C" fn hytet_tetrahedron_volume_monte_carlo(
    t: *const HytetTetrahedron,
    seed: u64,
    samples: u64,
    value: *mut f64,
    std_error: *mut f64,
) -> HytetStatus {
    guard(|| {
        let Some(t) = t.as_ref() else {
            return null("tetrahedron");
        };
        let cfg = MonteCarloConfig {
            seed,
            samples,
            ..MonteCarloConfig::default()
        };
        let res = edge_matrix_from_lengths(&t.lengths)
            .and_then(|e| embed_vertices(&e))
            .and_then(|emb| volume_monte_carlo(&emb, &cfg));
        match res {
            Ok(r) => write_volume(r, value, std_error),
            Err(e) => fail(e),
        }
    })
}

/// Volume of the regular tetrahedron with edge `a`.
///
/// # Safety
/// `value` must be writable; `error_estimate` may be null.
#[no_mangle]
pub unsafe extern "C" fn hytet_volume_regular(
    a: f64,
    tol: f64,
    value: *mut f64,
    error_estimate: *mut f64,
) -> HytetStatus {
    guard(|| match volume_regular(a, &quadrature(tol)) {
        Ok(r) => write_volume(r, value, error_estimate),
        Err(e) => fail(e),
    })
}

/// Message for the last failed call on this thread; empty after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hytet_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hytet_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
