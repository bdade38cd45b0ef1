//! C ABI over the skelbetti engine.
//!
//! Every fallible call returns an [`SbStatus`] and writes its result through
//! an out-pointer. On failure, [`sb_last_error_message`] describes the error
//! for the calling thread. Objects are opaque handles released with their
//! matching `*_free` function; strings returned by the library are released
//! with [`sb_string_free`].
//!
//! Subsets of the ground set `{1,...,n}` are passed as `uint32_t` masks with
//! label `v` in bit `v - 1`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use skelbetti::betti::{self, BettiTable, Convention};
use skelbetti::transfer::{self, TransferInput};
use skelbetti::{io, matroid, Error, Matroid, Prime, SimplicialComplex};

/// Outcome of a library call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    UnsupportedField = 4,
    OutOfRange = 5,
    NotAMatroid = 6,
    InconsistentTable = 7,
    Internal = 8,
}

/// Grading convention of a Betti table.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SbConvention {
    /// Resolution of the Stanley-Reisner ring; `β_{0,0} = 1`.
    Ring = 0,
    /// Resolution of the Stanley-Reisner ideal; homological index shifted by one.
    Ideal = 1,
}

impl From<SbConvention> for Convention {
    fn from(c: SbConvention) -> Self {
        match c {
            SbConvention::Ring => Convention::Ring,
            SbConvention::Ideal => Convention::Ideal,
        }
    }
}

/// A simplicial complex.
pub struct SbComplex(SimplicialComplex);

/// A matroid given by its bases.
pub struct SbMatroid(Matroid);

/// A graded Betti table over a prime field.
pub struct SbBettiTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> SbStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => SbStatus::Parse,
        Error::NotPrime(_) | Error::UnsupportedField(_) => SbStatus::UnsupportedField,
        Error::SkeletonRange { .. } | Error::TruncationRange { .. } | Error::ElongationRange { .. } => {
            SbStatus::OutOfRange
        }
        Error::EmptyBasisFamily | Error::NotEquicardinal(..) | Error::NotAMatroid { .. } => SbStatus::NotAMatroid,
        Error::InconsistentTable { .. } | Error::TransferStep { .. } => SbStatus::InconsistentTable,
        Error::FieldDependenceBug(..) => SbStatus::Internal,
        _ => SbStatus::InvalidArgument,
    }
}

struct Fail(SbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SbStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> SbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            SbStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SbStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(SbStatus::Parse, format!("text is not UTF-8: {e}")))
}

unsafe fn masks<'a>(p: *const u32, count: usize) -> Result<&'a [u32], Fail> {
    if count == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null("mask array"));
    }
    Ok(std::slice::from_raw_parts(p, count))
}

fn prime(p: u64) -> Result<Prime, Fail> {
    Ok(Prime::new(p)?)
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message describing the last failed call on this thread, or null.
///
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Complex on `{1,...,n}` generated by `count` facet masks.
///
/// # Safety
/// `facets` must point to `count` readable masks; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_new(
    n: usize,
    facets: *const u32,
    count: usize,
    out: *mut *mut SbComplex,
) -> SbStatus {
    guard(|| {
        let facets = masks(facets, count)?.to_vec();
        let complex = SimplicialComplex::from_masks(n, facets)?;
        write(out, boxed(SbComplex(complex)))
    })
}

/// Complex from facet-list text (`n = k` header, one facet per line).
///
/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_parse(source: *const c_char, out: *mut *mut SbComplex) -> SbStatus {
    guard(|| {
        let complex = io::parse_complex(text(source)?)?;
        write(out, boxed(SbComplex(complex)))
    })
}

/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_free(c: *mut SbComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Dimension of the complex (`-1` for the complex `{∅}`).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_dimension(c: *const SbComplex, out: *mut isize) -> SbStatus {
    guard(|| write(out, deref(c, "complex")?.0.dimension()))
}

/// Copies up to `cap` entries `f_{-1}, f_0, ...` into `buf` and stores the
/// full length in `len`. Call with `cap = 0` to query the length.
///
/// # Safety
/// `buf` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_f_vector(
    c: *const SbComplex,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> SbStatus {
    guard(|| {
        let f = deref(c, "complex")?.0.f_vector();
        let values = f.as_slice();
        let copied = values.len().min(cap);
        if copied > 0 {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(values.as_ptr(), buf, copied);
        }
        write(len, values.len())
    })
}

/// The `i`-skeleton, for `-1 <= i <= dim`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_complex_skeleton(c: *const SbComplex, i: isize, out: *mut *mut SbComplex) -> SbStatus {
    guard(|| {
        let skel = deref(c, "complex")?.0.skeleton(i)?;
        write(out, boxed(SbComplex(skel)))
    })
}

/// Graded Betti table of the complex over GF(`p`).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_betti(
    c: *const SbComplex,
    p: u64,
    convention: SbConvention,
    out: *mut *mut SbBettiTable,
) -> SbStatus {
    guard(|| {
        let table = betti::betti_numbers(&deref(c, "complex")?.0, prime(p)?, convention.into())?;
        write(out, boxed(SbBettiTable(table)))
    })
}

/// `β_{i,j}`; zero outside the support or for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sb_table_get(t: *const SbBettiTable, i: usize, j: usize) -> u64 {
    t.as_ref().map_or(0, |t| t.0.get(i, j))
}

/// Projective dimension of the ring the table describes.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_table_projective_dimension(t: *const SbBettiTable, out: *mut usize) -> SbStatus {
    guard(|| write(out, deref(t, "table")?.0.projective_dimension()))
}

/// JSON form of the table; release with [`sb_string_free`].
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_table_to_json(t: *const SbBettiTable, out: *mut *mut c_char) -> SbStatus {
    guard(|| {
        let json = deref(t, "table")?.0.to_json();
        let s = CString::new(json).map_err(|e| Fail(SbStatus::Internal, e.to_string()))?;
        write(out, s.into_raw())
    })
}

/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_table_from_json(source: *const c_char, out: *mut *mut SbBettiTable) -> SbStatus {
    guard(|| {
        let table = BettiTable::from_json(text(source)?)?;
        write(out, boxed(SbBettiTable(table)))
    })
}

/// # Safety
/// `t` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sb_table_free(t: *mut SbBettiTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

unsafe fn transfer_input(t: *const SbBettiTable, dim: usize) -> Result<TransferInput, Fail> {
    let table = deref(t, "table")?.0.clone();
    Ok(if dim == 0 {
        TransferInput::with_inferred_dimension(table)?
    } else {
        TransferInput::new(table, dim)?
    })
}

/// Table of the codimension-one skeleton, from the table of a complex of
/// dimension `dim` (`0` infers it). The result uses the ring convention.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_transfer(t: *const SbBettiTable, dim: usize, out: *mut *mut SbBettiTable) -> SbStatus {
    guard(|| {
        let table = transfer::transfer(&transfer_input(t, dim)?)?;
        write(out, boxed(SbBettiTable(table)))
    })
}

/// Number of top-dimensional faces recovered from the table alone.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_top_face_count(t: *const SbBettiTable, dim: usize, out: *mut u64) -> SbStatus {
    guard(|| write(out, transfer::top_face_count(&transfer_input(t, dim)?)?))
}

/// Matroid on `{1,...,n}` with the given basis masks.
///
/// # Safety
/// `bases` must point to `count` readable masks; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_new(
    n: usize,
    bases: *const u32,
    count: usize,
    out: *mut *mut SbMatroid,
) -> SbStatus {
    guard(|| {
        let m = Matroid::from_masks(n, masks(bases, count)?.to_vec())?;
        write(out, boxed(SbMatroid(m)))
    })
}

/// Matroid from basis-list text, in the facet file format.
///
/// # Safety
/// `source` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_parse(source: *const c_char, out: *mut *mut SbMatroid) -> SbStatus {
    guard(|| {
        let m = io::parse_matroid(text(source)?)?;
        write(out, boxed(SbMatroid(m)))
    })
}

/// # Safety
/// `m` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_free(m: *mut SbMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_rank(m: *const SbMatroid, out: *mut usize) -> SbStatus {
    guard(|| write(out, deref(m, "matroid")?.0.rank()))
}

/// Ring-convention table of the independence complex.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_betti(m: *const SbMatroid, p: u64, out: *mut *mut SbBettiTable) -> SbStatus {
    guard(|| {
        let table = matroid::matroid_betti(&deref(m, "matroid")?.0, prime(p)?)?;
        write(out, boxed(SbBettiTable(table)))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_truncation(m: *const SbMatroid, i: usize, out: *mut *mut SbMatroid) -> SbStatus {
    guard(|| {
        let t = deref(m, "matroid")?.0.truncation(i)?;
        write(out, boxed(SbMatroid(t)))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_elongation(m: *const SbMatroid, i: usize, out: *mut *mut SbMatroid) -> SbStatus {
    guard(|| {
        let e = deref(m, "matroid")?.0.elongation(i)?;
        write(out, boxed(SbMatroid(e)))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_matroid_dual(m: *const SbMatroid, out: *mut *mut SbMatroid) -> SbStatus {
    guard(|| {
        let d = deref(m, "matroid")?.0.dual();
        write(out, boxed(SbMatroid(d)))
    })
}

/// Evaluates the built-in matroid pair whose tables agree while those of
/// their elongations differ; `passed` receives the verdict.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_counterexample(passed: *mut bool) -> SbStatus {
    guard(|| write(passed, matroid::counterexample_report()?.passed()))
}
