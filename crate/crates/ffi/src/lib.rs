//! C ABI for the `symvar` library.
//!
//! Every fallible function returns a [`SymvarStatus`] and writes its result
//! through an out-pointer. On failure, [`symvar_last_error`] returns a message
//! for the calling thread. Handles are opaque and must be released with the
//! matching `_free` function. Strings returned by the library are released
//! with [`symvar_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use symvar::finite_field::{bruhat_factor, FqMatrix};
use symvar::involution::{is_special, InvolutionFamily};
use symvar::orbits::{twisted_orbit_census, SymForm};
use symvar::renner::{bruhat_leq, rook_count};
use symvar::{Error, Family, InvolutionSpec, RookElement, RootSystem};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymvarStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Input was rejected: bad family, size, field or matrix.
    InvalidInput = 2,
    /// The weight passed in is not special for the involution.
    NotSpecial = 3,
    /// The request exceeds a built-in size limit.
    ResourceGuard = 4,
    /// A computed object failed an internal consistency check.
    InvariantViolation = 5,
    /// An output buffer is too small.
    BufferTooSmall = 6,
    /// The library panicked; this is a bug.
    Panic = 7,
}

/// A root system of classical type.
pub struct SymvarRootSystem {
    inner: RootSystem,
}

/// An involution of a classical root system together with its root data.
pub struct SymvarInvolution {
    inner: InvolutionSpec,
}

/// Summary of a Borel congruence census.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymvarCensus {
    pub orbit_count: usize,
    pub invariant_values: usize,
    pub expected_parametrizers: usize,
    pub matches: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SymvarStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NotSpecial => SymvarStatus::NotSpecial,
            Error::ResourceGuard { .. } => SymvarStatus::ResourceGuard,
            Error::InvariantViolation(_) => SymvarStatus::InvariantViolation,
            _ => SymvarStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: SymvarStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SymvarStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SymvarStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            SymvarStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(SymvarStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(SymvarStatus::InvalidInput, format!("{name} is not UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, name: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(SymvarStatus::NullPointer, format!("{name} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| fail(SymvarStatus::NullPointer, format!("{name} is null")))
}

unsafe fn buffer_arg<'a, T>(p: *mut T, len: usize, need: usize, name: &str) -> Result<&'a mut [T], Failure> {
    if len < need {
        return Err(fail(SymvarStatus::BufferTooSmall, format!("{name} holds {len}, need {need}")));
    }
    if need == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(fail(SymvarStatus::NullPointer, format!("{name} is null")));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn symvar_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn symvar_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn symvar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the root system of `family` ("A", "B", "C" or "D") and `rank`.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_root_system_new(
    family: *const c_char,
    rank: usize,
    out: *mut *mut SymvarRootSystem,
) -> SymvarStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let family: Family = str_arg(family, "family")?.parse()?;
        let inner = RootSystem::new(family, rank)?;
        *out = Box::into_raw(Box::new(SymvarRootSystem { inner }));
        Ok(())
    })
}

/// # Safety
/// `rs` must be null or come from [`symvar_root_system_new`].
#[no_mangle]
pub unsafe extern "C" fn symvar_root_system_free(rs: *mut SymvarRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Number of positive roots.
///
/// # Safety
/// `rs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_root_system_positive_roots(rs: *const SymvarRootSystem, out: *mut usize) -> SymvarStatus {
    guard(|| {
        let rs = rs.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "rs is null"))?;
        *out_arg(out, "out")? = rs.inner.positive_roots().len();
        Ok(())
    })
}

/// Size of the Weyl orbit of the weight with fundamental-weight coefficients
/// `coeffs[0..len]`, where `len` equals the rank.
///
/// # Safety
/// `rs` must be a live handle; `coeffs` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_weyl_orbit_size(
    rs: *const SymvarRootSystem,
    coeffs: *const i64,
    len: usize,
    out: *mut usize,
) -> SymvarStatus {
    guard(|| {
        let rs = &rs.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "rs is null"))?.inner;
        let lambda = rs.weight_from_fundamental(slice_arg(coeffs, len, "coeffs")?)?;
        *out_arg(out, "out")? = rs.weyl_orbit(&lambda)?.len();
        Ok(())
    })
}

/// Builds an involution. `family` is one of AI, AII, AIII, CI, CII, DIII,
/// BDI; `params` holds one size, or two block sizes for AIII, CII and BDI.
///
/// # Safety
/// `family` must be a NUL-terminated string; `params` must hold `len` values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_new(
    family: *const c_char,
    params: *const usize,
    len: usize,
    out: *mut *mut SymvarInvolution,
) -> SymvarStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let family: InvolutionFamily = str_arg(family, "family")?.parse()?;
        let inner = InvolutionSpec::from_params(family, slice_arg(params, len, "params")?)?;
        *out = Box::into_raw(Box::new(SymvarInvolution { inner }));
        Ok(())
    })
}

/// # Safety
/// `inv` must be null or come from [`symvar_involution_new`].
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_free(inv: *mut SymvarInvolution) {
    if !inv.is_null() {
        drop(Box::from_raw(inv));
    }
}

/// Rank of the underlying root system.
///
/// # Safety
/// `inv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_rank(inv: *const SymvarInvolution, out: *mut usize) -> SymvarStatus {
    guard(|| {
        let inv = inv.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "inv is null"))?;
        *out_arg(out, "out")? = inv.inner.root_system().rank();
        Ok(())
    })
}

/// Number of semigroup generators of the special weights.
///
/// # Safety
/// `inv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_generator_count(inv: *const SymvarInvolution, out: *mut usize) -> SymvarStatus {
    guard(|| {
        let inv = inv.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "inv is null"))?;
        *out_arg(out, "out")? = inv.inner.generator_coefficients().len();
        Ok(())
    })
}

/// Writes the fundamental-weight coefficients of generator `index` into
/// `buf[0..rank]`.
///
/// # Safety
/// `inv` must be a live handle; `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_generator(
    inv: *const SymvarInvolution,
    index: usize,
    buf: *mut i64,
    len: usize,
) -> SymvarStatus {
    guard(|| {
        let inv = inv.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "inv is null"))?;
        let gens = inv.inner.generator_coefficients();
        let g = gens
            .get(index)
            .ok_or_else(|| fail(SymvarStatus::InvalidInput, format!("generator {index} of {}", gens.len())))?;
        buffer_arg(buf, len, g.len(), "buf")?[..g.len()].copy_from_slice(g);
        Ok(())
    })
}

/// Whether the dominant weight with fundamental coefficients `coeffs[0..len]`
/// is special for `inv`.
///
/// # Safety
/// `inv` must be a live handle; `coeffs` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_involution_is_special(
    inv: *const SymvarInvolution,
    coeffs: *const i64,
    len: usize,
    out: *mut bool,
) -> SymvarStatus {
    guard(|| {
        let inv = &inv.as_ref().ok_or_else(|| fail(SymvarStatus::NullPointer, "inv is null"))?.inner;
        let lambda = inv.root_system().weight_from_fundamental(slice_arg(coeffs, len, "coeffs")?)?;
        *out_arg(out, "out")? = is_special(inv, &lambda)?;
        Ok(())
    })
}

/// Number of `n x n` partial permutation matrices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_rook_count(n: usize, out: *mut u64) -> SymvarStatus {
    const LIMIT: usize = 20;
    guard(|| {
        if n > LIMIT {
            return Err(fail(SymvarStatus::ResourceGuard, format!("rook count size {n} (limit {LIMIT})")));
        }
        *out_arg(out, "out")? = u64::try_from(rook_count(n)).expect("within limit");
        Ok(())
    })
}

unsafe fn rook_arg(p: *const usize, n: usize, name: &str) -> Result<RookElement, Failure> {
    Ok(RookElement::new(slice_arg(p, n, name)?.to_vec())?)
}

/// Bruhat-Chevalley order on rook elements given as row maps of length `n`:
/// entry `i` is the 1-based column of the 1 in row `i`, or 0.
///
/// # Safety
/// `r` and `s` must hold `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_bruhat_leq(r: *const usize, s: *const usize, n: usize, out: *mut bool) -> SymvarStatus {
    guard(|| {
        let (r, s) = (rook_arg(r, n, "r")?, rook_arg(s, n, "s")?);
        *out_arg(out, "out")? = bruhat_leq(&r, &s);
        Ok(())
    })
}

/// Factors the row-major `n x n` matrix `entries` over `F_q` as `u (t r) v`.
/// `u`, `t` and `v` receive `n*n` row-major entries; `r` receives the row map
/// of the rook component.
///
/// # Safety
/// `entries`, `u`, `t`, `v` must hold `n*n` values and `r` must hold `n`.
#[no_mangle]
pub unsafe extern "C" fn symvar_bruhat_factor(
    entries: *const i64,
    n: usize,
    q: u8,
    u: *mut u8,
    t: *mut u8,
    r: *mut usize,
    v: *mut u8,
) -> SymvarStatus {
    guard(|| {
        let sq = n.checked_mul(n).ok_or_else(|| fail(SymvarStatus::InvalidInput, "n is too large"))?;
        let flat = slice_arg(entries, sq, "entries")?;
        let rows: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).take(n).collect();
        let f = bruhat_factor(&FqMatrix::new(q, &rows)?);
        for (dst, m, name) in [(u, &f.u, "u"), (t, &f.t, "t"), (v, &f.v, "v")] {
            let buf = buffer_arg(dst, sq, sq, name)?;
            for (slot, x) in buf.iter_mut().zip(m.rows().flatten()) {
                *slot = *x;
            }
        }
        buffer_arg(r, n, n, "r")?.copy_from_slice(f.r.map());
        Ok(())
    })
}

/// Borel congruence census on `form` ("sym" or "skew") matrices of size `n`
/// over `F_q`, `q` odd.
///
/// # Safety
/// `form` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_census(form: *const c_char, n: usize, q: u8, out: *mut SymvarCensus) -> SymvarStatus {
    guard(|| {
        let form: SymForm = str_arg(form, "form")?.parse()?;
        let report = twisted_orbit_census(n, q, form)?;
        *out_arg(out, "out")? = SymvarCensus {
            orbit_count: report.orbit_count,
            invariant_values: report.invariant_values,
            expected_parametrizers: report.expected_parametrizer_count,
            matches: report.matches(),
        };
        Ok(())
    })
}

/// Full census report, with per-orbit witnesses, as a JSON string. Release it
/// with [`symvar_string_free`].
///
/// # Safety
/// `form` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn symvar_census_json(form: *const c_char, n: usize, q: u8, out: *mut *mut c_char) -> SymvarStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let form: SymForm = str_arg(form, "form")?.parse()?;
        let json = serde_json::to_string(&twisted_orbit_census(n, q, form)?)
            .map_err(|e| fail(SymvarStatus::InvariantViolation, e.to_string()))?;
        *out = CString::new(json).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}
