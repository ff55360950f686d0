//! C interface to `hyperlat`.
//!
//! Every function returns an [`HlStatus`]; results are written through out
//! pointers. Objects are opaque handles released with their `_free` function.
//! Strings returned to the caller are NUL terminated and released with
//! [`hl_string_free`]. The message of the last failure on the calling thread
//! is available from [`hl_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperlat::coxeter::render::to_json;
use hyperlat::error::Error;
use hyperlat::exact::matrix::Matrix;
use hyperlat::vinberg::{run_vinberg, Status, VinbergConfig, VinbergRun};
use hyperlat::zlattice::{build_z, decide_isomorphic, IsoDecision, ZLattice};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Degenerate = 5,
    Overflow = 6,
    IndexOutOfRange = 7,
    Computation = 8,
    Panic = 9,
}

/// Outcome of an isometry test.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlIso {
    Distinct = 0,
    Isomorphic = 1,
    Unknown = 2,
}

/// An integral lattice.
pub struct HlLattice(ZLattice);

/// The output of Vinberg's algorithm.
pub struct HlVinbergRun(VinbergRun);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &Error) -> HlStatus {
    match e {
        Error::Parse(_) | Error::UnknownName(_) => HlStatus::Parse,
        Error::Degenerate => HlStatus::Degenerate,
        Error::DimensionMismatch(_) | Error::NotSymmetric | Error::InvalidController(_) => HlStatus::InvalidArgument,
        _ => HlStatus::Computation,
    }
}

struct Fail(HlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn fail<T>(s: HlStatus, msg: &str) -> Result<T, Fail> {
    Err(Fail(s, msg.to_string()))
}

/// Run `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HlStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            HlStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return fail(HlStatus::NullPointer, "string argument is null");
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(HlStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail(HlStatus::NullPointer, "output pointer is null".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail(HlStatus::NullPointer, "handle is null".into()))
}

fn to_i64(x: &BigInt) -> Result<i64, Fail> {
    x.to_i64().ok_or(Fail(HlStatus::Overflow, format!("{x} does not fit in 64 bits")))
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).or_else(|_| fail(HlStatus::Computation, "string contains NUL"))?;
    unsafe { *out_arg(out)? = c.into_raw() };
    Ok(())
}

/// Message of the last failure on this thread, or null. Owned by the library.
#[no_mangle]
pub extern "C" fn hl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a lattice from an expression such as `U+E8(2)+A1`.
///
/// # Safety
/// `expr` must be a NUL terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_from_expr(expr: *const c_char, out: *mut *mut HlLattice) -> HlStatus {
    guard(|| {
        let out = out_arg(out)?;
        let l = build_z(str_arg(expr)?)?;
        *out = Box::into_raw(Box::new(HlLattice(l)));
        Ok(())
    })
}

/// Build a lattice from a row-major symmetric `n x n` Gram matrix.
///
/// # Safety
/// `gram` must point to `n * n` integers and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_from_gram(gram: *const i64, n: usize, out: *mut *mut HlLattice) -> HlStatus {
    guard(|| {
        let out = out_arg(out)?;
        if gram.is_null() {
            return fail(HlStatus::NullPointer, "gram is null");
        }
        if n == 0 {
            return fail(HlStatus::InvalidArgument, "rank must be positive");
        }
        let flat = std::slice::from_raw_parts(gram, n * n);
        let rows = flat.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let l = ZLattice::new("gram", Matrix::from_rows(rows))?;
        *out = Box::into_raw(Box::new(HlLattice(l)));
        Ok(())
    })
}

/// # Safety
/// `l` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_free(l: *mut HlLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_rank(l: *const HlLattice, out: *mut usize) -> HlStatus {
    guard(|| {
        *out_arg(out)? = handle(l)?.0.rank();
        Ok(())
    })
}

/// Signature as numbers of positive and negative squares.
///
/// # Safety
/// `l` must be a valid handle; `pos` and `neg` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_signature(l: *const HlLattice, pos: *mut usize, neg: *mut usize) -> HlStatus {
    guard(|| {
        let s = handle(l)?.0.summary();
        *out_arg(pos)? = s.r_plus;
        *out_arg(neg)? = s.r_minus;
        Ok(())
    })
}

/// Determinant of the Gram matrix; fails with `Overflow` beyond 64 bits.
///
/// # Safety
/// `l` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_det(l: *const HlLattice, out: *mut i64) -> HlStatus {
    guard(|| {
        *out_arg(out)? = to_i64(&handle(l)?.0.det())?;
        Ok(())
    })
}

/// Copy the Gram matrix, row-major, into `buf` of length `len >= rank^2`.
///
/// # Safety
/// `l` must be a valid handle and `buf` must hold `len` integers.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_gram(l: *const HlLattice, buf: *mut i64, len: usize) -> HlStatus {
    guard(|| {
        let g = &handle(l)?.0.gram;
        let n = g.rows();
        if buf.is_null() {
            return fail(HlStatus::NullPointer, "buffer is null");
        }
        if len < n * n {
            return fail(HlStatus::InvalidArgument, "buffer too small");
        }
        let dst = std::slice::from_raw_parts_mut(buf, n * n);
        for i in 0..n {
            for j in 0..n {
                dst[i * n + j] = to_i64(&g[(i, j)])?;
            }
        }
        Ok(())
    })
}

/// Invariants of the lattice as a JSON object.
///
/// # Safety
/// `l` must be a valid handle; `out` receives a string for [`hl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_info_json(l: *const HlLattice, out: *mut *mut c_char) -> HlStatus {
    guard(|| {
        let s =
            serde_json::to_string(&handle(l)?.0.summary()).or_else(|e| fail(HlStatus::Computation, &e.to_string()))?;
        give_string(s, out)
    })
}

/// Decide whether two lattices are isometric.
///
/// # Safety
/// `a` and `b` must be valid handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_lattice_isomorphic(a: *const HlLattice, b: *const HlLattice, out: *mut HlIso) -> HlStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = match decide_isomorphic(&handle(a)?.0, &handle(b)?.0) {
            IsoDecision::Isomorphic(_) => HlIso::Isomorphic,
            IsoDecision::Distinct(_) => HlIso::Distinct,
            IsoDecision::Unknown(_) => HlIso::Unknown,
        };
        Ok(())
    })
}

/// Run Vinberg's algorithm on a hyperbolic lattice.
///
/// `controller` may be null to let the library choose; otherwise it holds
/// `rank` coordinates. `max_height` bounds the search when positive.
///
/// # Safety
/// `l` must be a valid handle, `controller` null or `rank` integers, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_run(
    l: *const HlLattice,
    controller: *const i64,
    max_height: i64,
    out: *mut *mut HlVinbergRun,
) -> HlStatus {
    guard(|| {
        let out = out_arg(out)?;
        let l = handle(l)?.0.clone();
        let n = l.rank();
        let mut config = VinbergConfig::new(l)?;
        if !controller.is_null() {
            let p = std::slice::from_raw_parts(controller, n).iter().map(|&x| BigInt::from(x)).collect();
            config = config.with_controller(p);
        }
        if max_height > 0 {
            config = config.with_max_height(BigInt::from(max_height).into());
        }
        *out = Box::into_raw(Box::new(HlVinbergRun(run_vinberg(&config)?)));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_free(r: *mut HlVinbergRun) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Whether the run terminated with a polyhedron of finite volume.
///
/// # Safety
/// `r` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_finite_volume(r: *const HlVinbergRun, out: *mut bool) -> HlStatus {
    guard(|| {
        let r = &handle(r)?.0;
        *out_arg(out)? = r.status == Status::Finished && r.census.as_ref().is_some_and(|c| c.finite_volume);
        Ok(())
    })
}

/// # Safety
/// `r` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_root_count(r: *const HlVinbergRun, out: *mut usize) -> HlStatus {
    guard(|| {
        *out_arg(out)? = handle(r)?.0.roots.len();
        Ok(())
    })
}

/// Copy root `index` into `buf` of length `len >= rank` and its norm into `norm`.
///
/// # Safety
/// `r` must be a valid handle, `buf` must hold `len` integers, `norm` valid.
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_root(
    r: *const HlVinbergRun,
    index: usize,
    buf: *mut i64,
    len: usize,
    norm: *mut i64,
) -> HlStatus {
    guard(|| {
        let run = &handle(r)?.0;
        let Some(root) = run.roots.get(index) else {
            return fail(HlStatus::IndexOutOfRange, "root index out of range");
        };
        if buf.is_null() {
            return fail(HlStatus::NullPointer, "buffer is null");
        }
        if len < root.vector.len() {
            return fail(HlStatus::InvalidArgument, "buffer too small");
        }
        let dst = std::slice::from_raw_parts_mut(buf, root.vector.len());
        for (d, x) in dst.iter_mut().zip(&root.vector) {
            *d = to_i64(x)?;
        }
        *out_arg(norm)? = to_i64(&root.norm)?;
        Ok(())
    })
}

/// Coxeter diagram of a finished run as JSON.
///
/// # Safety
/// `r` must be a valid handle; `out` receives a string for [`hl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hl_vinberg_diagram_json(r: *const HlVinbergRun, out: *mut *mut c_char) -> HlStatus {
    guard(|| {
        let d = handle(r)?.0.diagram()?;
        give_string(to_json(&d).to_string(), out)
    })
}

/// Run the built-in consistency checks and write the report as JSON.
///
/// `only` is null for every group or a comma separated list of group names.
///
/// # Safety
/// `only` must be null or a NUL terminated string; `out` and `passed` valid.
#[no_mangle]
pub unsafe extern "C" fn hl_verify_json(only: *const c_char, out: *mut *mut c_char, passed: *mut bool) -> HlStatus {
    guard(|| {
        let selection: Vec<String> = if only.is_null() {
            Vec::new()
        } else {
            str_arg(only)?.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
        };
        let report = hyperlat::verify::verify_paper(&selection)?;
        *out_arg(passed)? = report.pass;
        give_string(report.to_json(), out)
    })
}
