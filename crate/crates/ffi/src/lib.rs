//! C ABI for the `evolalg` library.
//!
//! Algebras live behind an opaque `EvolAlgebra` handle. Every fallible call
//! returns an `EvolStatus`; on failure a message is available from
//! `evolalg_last_error` on the same thread until the next call. Strings handed
//! out by the library must be released with `evolalg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use evolalg::analysis::{self, AnalysisConfig, DegeneracyEngine, State, Verdict3};
use evolalg::cli::{analyze, parse_algebra, render_algebra, to_json};
use evolalg::exactla::Mat;
use evolalg::{DiGraph, Error, EvolutionAlgebra, Rat};

/// Opaque algebra handle.
pub struct EvolAlgebra {
    algebra: EvolutionAlgebra,
    description: Option<String>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvolStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    Precondition = 5,
    /// A configured bound or engine limit was hit; the answer is unknown.
    EngineLimit = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvolState {
    No = 0,
    Yes = 1,
    Undetermined = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvolEngine {
    Linear = 0,
    Groebner = 1,
}

/// Analysis options. A null pointer means the defaults from
/// `evolalg_options_default`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct EvolOptions {
    pub engine: EvolEngine,
    pub support_bound: usize,
    pub height_cap: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

struct Fail(EvolStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BoundExceeded { .. } | Error::EngineLimit(_) => EvolStatus::EngineLimit,
            Error::Precondition(_) | Error::NotHereditary(_) => EvolStatus::Precondition,
            Error::Parse(_) => EvolStatus::ParseError,
            Error::DimensionMismatch { .. } | Error::NotSquare { .. } => EvolStatus::InvalidArgument,
            Error::Invariant(_) => EvolStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(EvolStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EvolStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EvolStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("panic: {msg}"));
            EvolStatus::Panic
        }
    }
}

unsafe fn algebra_ref<'a>(a: *const EvolAlgebra) -> Result<&'a EvolAlgebra, Fail> {
    a.as_ref().ok_or_else(|| null("algebra"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

unsafe fn options(o: *const EvolOptions) -> AnalysisConfig {
    let o = o.as_ref().copied().unwrap_or_else(|| evolalg_options_default());
    let mut cfg = AnalysisConfig {
        support_bound: o.support_bound,
        engine: match o.engine {
            EvolEngine::Linear => DegeneracyEngine::Linear,
            EvolEngine::Groebner => DegeneracyEngine::Groebner,
        },
        ..AnalysisConfig::default()
    };
    cfg.points.height_cap = o.height_cap;
    cfg
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(EvolStatus::Internal, "output contains a NUL byte".into()))
}

fn state(v: &Verdict3) -> EvolState {
    match v.state {
        State::No => EvolState::No,
        State::Yes => EvolState::Yes,
        State::Undetermined => EvolState::Undetermined,
    }
}

#[no_mangle]
pub extern "C" fn evolalg_options_default() -> EvolOptions {
    let d = AnalysisConfig::default();
    EvolOptions {
        engine: EvolEngine::Linear,
        support_bound: d.support_bound,
        height_cap: d.points.height_cap,
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn evolalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn evolalg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses an algebra file (JSON text).
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_algebra_from_json(json: *const c_char, out: *mut *mut EvolAlgebra) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Fail(EvolStatus::InvalidUtf8, e.to_string()))?;
        let f = parse_algebra(text)?;
        *out = Box::into_raw(Box::new(EvolAlgebra {
            algebra: f.algebra,
            description: f.description,
        }));
        Ok(())
    })
}

/// Builds an algebra from `n*n` row-major structure constants
/// `num[k] / den[k]`; column `i` holds the coordinates of `e_i^2`.
///
/// # Safety
/// `num` and `den` must point to `n*n` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn evolalg_algebra_from_matrix(
    n: usize,
    num: *const i64,
    den: *const i64,
    out: *mut *mut EvolAlgebra,
) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if n == 0 {
            return Err(Fail(EvolStatus::InvalidArgument, "dimension must be positive".into()));
        }
        if num.is_null() || den.is_null() {
            return Err(null("matrix data"));
        }
        let len = n
            .checked_mul(n)
            .ok_or_else(|| Fail(EvolStatus::InvalidArgument, "dimension overflows".into()))?;
        let num = std::slice::from_raw_parts(num, len);
        let den = std::slice::from_raw_parts(den, len);
        let mut data = Vec::with_capacity(len);
        for (k, (&p, &q)) in num.iter().zip(den).enumerate() {
            if q == 0 {
                return Err(Fail(
                    EvolStatus::InvalidArgument,
                    format!("entry ({}, {}) has zero denominator", k / n, k % n),
                ));
            }
            data.push(Rat::new(p.into(), q.into()));
        }
        let algebra = EvolutionAlgebra::with_default_labels(Mat::from_vec(n, n, data)?)?;
        *out = Box::into_raw(Box::new(EvolAlgebra {
            algebra,
            description: None,
        }));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn evolalg_algebra_free(a: *mut EvolAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_algebra_dim(a: *const EvolAlgebra, out: *mut usize) -> EvolStatus {
    guard(|| {
        *out_ref(out)? = algebra_ref(a)?.algebra.dim();
        Ok(())
    })
}

/// Serializes the algebra back to the JSON file format.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_algebra_to_json(a: *const EvolAlgebra, out: *mut *mut c_char) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        let h = algebra_ref(a)?;
        *out = into_c_string(render_algebra(&h.algebra, h.description.as_deref()))?;
        Ok(())
    })
}

/// Full JSON report, the same document the command line prints with `--json`.
///
/// # Safety
/// `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_analyze_json(
    a: *const EvolAlgebra,
    opts: *const EvolOptions,
    out: *mut *mut c_char,
) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        let h = algebra_ref(a)?;
        let r = analyze(&h.algebra, h.description.as_deref(), &options(opts));
        *out = into_c_string(to_json(&r))?;
        Ok(())
    })
}

/// Graphviz text for the graph of the natural basis.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_graph_dot(a: *const EvolAlgebra, out: *mut *mut c_char) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        let h = algebra_ref(a)?;
        *out = into_c_string(DiGraph::from_algebra(&h.algebra).to_dot(h.algebra.labels()))?;
        Ok(())
    })
}

unsafe fn verdict(
    a: *const EvolAlgebra,
    opts: *const EvolOptions,
    out: *mut EvolState,
    f: fn(&EvolutionAlgebra, &AnalysisConfig) -> evolalg::Result<Verdict3>,
) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        let v = f(&algebra_ref(a)?.algebra, &options(opts))?;
        *out = state(&v);
        Ok(())
    })
}

/// `Yes` when the algebra has a nonzero absolute zero divisor.
///
/// # Safety
/// `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_degeneracy(
    a: *const EvolAlgebra,
    opts: *const EvolOptions,
    out: *mut EvolState,
) -> EvolStatus {
    verdict(a, opts, out, analysis::degeneracy)
}

/// # Safety
/// `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_semiprime(
    a: *const EvolAlgebra,
    opts: *const EvolOptions,
    out: *mut EvolState,
) -> EvolStatus {
    verdict(a, opts, out, analysis::semiprime)
}

/// # Safety
/// `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_prime(
    a: *const EvolAlgebra,
    opts: *const EvolOptions,
    out: *mut EvolState,
) -> EvolStatus {
    verdict(a, opts, out, analysis::prime)
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_von_neumann_regular(a: *const EvolAlgebra, out: *mut bool) -> EvolStatus {
    guard(|| {
        *out_ref(out)? = analysis::vn_algebra(&algebra_ref(a)?.algebra);
        Ok(())
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_centroid_dim(a: *const EvolAlgebra, out: *mut usize) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = analysis::centroid(&algebra_ref(a)?.algebra)?.dim;
        Ok(())
    })
}

/// Number of connected components of the graph.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_component_count(a: *const EvolAlgebra, out: *mut usize) -> EvolStatus {
    guard(|| {
        *out_ref(out)? = DiGraph::from_algebra(&algebra_ref(a)?.algebra).components().len();
        Ok(())
    })
}

/// Stabilizing index of the upper annihilating series.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evolalg_annihilator_index(a: *const EvolAlgebra, out: *mut usize) -> EvolStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = analysis::absorption(&algebra_ref(a)?.algebra)?.asi;
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn evolalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
