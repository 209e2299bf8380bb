//! C ABI for the exact local-Euler-characteristic library.
//!
//! Conventions: every fallible call returns an [`AnchiStatus`] and writes its
//! result through an out-pointer on success. Functions taking pointers are
//! `unsafe` in the usual C sense: pointers must be null or valid for the
//! access the call performs (null is reported as `NullPointer`). Quasi-polynomials are opaque
//! handles created by `anchi_*_qpoly_new`, freed with `anchi_qpoly_free`.
//! Strings returned by `anchi_qpoly_json` are heap-allocated and must be
//! released with `anchi_string_free`. Values that do not fit the fixed-width
//! out types report `Overflow` instead of truncating.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};

use num_traits::ToPrimitive;

use anchi::euler;
use anchi::exact::QuasiPolynomial;
use anchi::hyperbolicity;

/// Status codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AnchiStatus {
    Ok = 0,
    /// An argument was outside the supported domain.
    InvalidArgument = 1,
    /// An internal cross-check failed (method disagreement, interpolation
    /// verification failure, negative chi1).
    CheckFailed = 2,
    /// The result does not fit the out-parameter type.
    Overflow = 3,
    NullPointer = 4,
}

/// Opaque quasi-polynomial handle.
pub struct AnchiQpoly {
    inner: QuasiPolynomial,
}

fn guarded(f: impl FnOnce() -> AnchiStatus + UnwindSafe) -> AnchiStatus {
    catch_unwind(f).unwrap_or(AnchiStatus::CheckFailed)
}

/// chi_loc(n, m) by the closed form. Requires n >= 1.
#[no_mangle]
pub unsafe extern "C" fn anchi_chi_loc(n: u32, m: u64, out: *mut i64) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| {
        let value = euler::chi_loc_closed(n, m);
        match value.to_i64() {
            Some(v) => {
                unsafe { *out = v };
                AnchiStatus::Ok
            }
            None => AnchiStatus::Overflow,
        }
    })
}

/// chi0(n, m) by direct enumeration. Requires n >= 1.
#[no_mangle]
pub unsafe extern "C" fn anchi_chi0(n: u32, m: u32, out: *mut u64) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| {
        unsafe { *out = euler::chi0_direct(n, m) };
        AnchiStatus::Ok
    })
}

/// chi1(n, m) = chi_loc - chi0. `CheckFailed` on a negative difference.
#[no_mangle]
pub unsafe extern "C" fn anchi_chi1(n: u32, m: u32, out: *mut i64) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| match euler::chi1(n, m) {
        Ok(value) => match value.to_i64() {
            Some(v) => {
                unsafe { *out = v };
                AnchiStatus::Ok
            }
            None => AnchiStatus::Overflow,
        },
        Err(_) => AnchiStatus::CheckFailed,
    })
}

/// Threshold count: smallest r forcing a big cotangent bundle for degree-d
/// surfaces with A_n singularities. Requires d >= 5, n >= 1.
#[no_mangle]
pub unsafe extern "C" fn anchi_r_min(d: u32, n: u32, out: *mut u64) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if d < 5 || n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| {
        unsafe { *out = hyperbolicity::r_min(d, n) };
        AnchiStatus::Ok
    })
}

/// Largest admissible number of A_n singularities on a degree-d surface.
#[no_mangle]
pub unsafe extern "C" fn anchi_miyaoka_max(d: u32, n: u32, out: *mut u64) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if d == 0 || n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| {
        unsafe { *out = hyperbolicity::miyaoka_max(d, n) };
        AnchiStatus::Ok
    })
}

/// Verdict record for the degree-2k family with 4k^2 singularities of type
/// A_(k-1). `verdict` is 1 when the count meets the threshold.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct AnchiLabsReport {
    pub k: u32,
    pub degree: u32,
    pub singularity_index: u32,
    pub available: u64,
    pub required: u64,
    pub verdict: u8,
}

/// Fill a [`AnchiLabsReport`] for the given k. Requires k >= 3 (k = 2 is
/// below the general-type degree range).
#[no_mangle]
pub unsafe extern "C" fn anchi_labs_check(k: u32, out: *mut AnchiLabsReport) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if k < 2 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| match hyperbolicity::labs_check(k) {
        Ok(report) => {
            unsafe {
                *out = AnchiLabsReport {
                    k: report.k,
                    degree: report.degree,
                    singularity_index: report.singularity_index,
                    available: report.available,
                    required: report.required,
                    verdict: u8::from(report.verdict),
                };
            }
            AnchiStatus::Ok
        }
        Err(_) => AnchiStatus::InvalidArgument,
    })
}

/// Run the cross-validation grid; `Ok` means every method agreed on every
/// cell and the tabulated generating functions matched.
#[no_mangle]
pub extern "C" fn anchi_validate(n_max: u32, m_max: u32) -> AnchiStatus {
    if n_max == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| match euler::validate(n_max, m_max) {
        Ok(_) => AnchiStatus::Ok,
        Err(_) => AnchiStatus::CheckFailed,
    })
}

/// New quasi-polynomial handle for chi_loc(n, -).
#[no_mangle]
pub unsafe extern "C" fn anchi_chi_loc_qpoly_new(n: u32, out: *mut *mut AnchiQpoly) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| {
        let q = euler::chi_loc_qpoly(n);
        unsafe { *out = Box::into_raw(Box::new(AnchiQpoly { inner: q })) };
        AnchiStatus::Ok
    })
}

/// New quasi-polynomial handle for chi0(n, -). This interpolates the piece
/// counters, so construction verifies itself and can fail with
/// `CheckFailed`.
#[no_mangle]
pub unsafe extern "C" fn anchi_chi0_qpoly_new(n: u32, out: *mut *mut AnchiQpoly) -> AnchiStatus {
    if out.is_null() {
        return AnchiStatus::NullPointer;
    }
    if n == 0 {
        return AnchiStatus::InvalidArgument;
    }
    guarded(|| match euler::chi0_qpoly(n) {
        Ok(q) => {
            unsafe { *out = Box::into_raw(Box::new(AnchiQpoly { inner: q })) };
            AnchiStatus::Ok
        }
        Err(_) => AnchiStatus::CheckFailed,
    })
}

#[no_mangle]
pub unsafe extern "C" fn anchi_qpoly_period(q: *const AnchiQpoly, out: *mut u64) -> AnchiStatus {
    if q.is_null() || out.is_null() {
        return AnchiStatus::NullPointer;
    }
    unsafe { *out = (*q).inner.period() as u64 };
    AnchiStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn anchi_qpoly_degree(q: *const AnchiQpoly, out: *mut u32) -> AnchiStatus {
    if q.is_null() || out.is_null() {
        return AnchiStatus::NullPointer;
    }
    unsafe { *out = (*q).inner.degree() as u32 };
    AnchiStatus::Ok
}

/// Evaluate at a non-negative integer. The quasi-polynomials built here take
/// integer values; `Overflow` reports values outside the i64 range.
#[no_mangle]
pub unsafe extern "C" fn anchi_qpoly_eval(q: *const AnchiQpoly, t: u64, out: *mut i64) -> AnchiStatus {
    if q.is_null() || out.is_null() {
        return AnchiStatus::NullPointer;
    }
    let value = unsafe { (*q).inner.eval(t) };
    if !value.is_integer() {
        return AnchiStatus::CheckFailed;
    }
    match value.to_integer().to_i64() {
        Some(v) => {
            unsafe { *out = v };
            AnchiStatus::Ok
        }
        None => AnchiStatus::Overflow,
    }
}

/// JSON rendering of the handle (period, degree, coefficient rows). The
/// returned string must be freed with `anchi_string_free`. Returns null on a
/// null handle.
#[no_mangle]
pub unsafe extern "C" fn anchi_qpoly_json(q: *const AnchiQpoly) -> *mut c_char {
    if q.is_null() {
        return std::ptr::null_mut();
    }
    let json = unsafe { (*q).inner.to_json().to_string() };
    CString::new(json).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Release a handle created by one of the `*_qpoly_new` functions.
///
/// # Safety
/// `q` must be null or a pointer previously returned by a constructor in
/// this library, and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn anchi_qpoly_free(q: *mut AnchiQpoly) {
    if !q.is_null() {
        drop(unsafe { Box::from_raw(q) });
    }
}

/// Release a string returned by `anchi_qpoly_json`.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library, and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn anchi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
