//! C ABI for `b3quot`.
//!
//! Fallible functions return a `B3Status`; on failure `b3_last_error` describes the
//! problem (per thread, valid until the next call on that thread). Handles are opaque and
//! released by their `_free` function. Strings handed out through out-parameters belong
//! to the caller and are released with `b3_string_free`. Field elements travel as text:
//! `"p/q"` in the rationals, `"[c0, c1, ...]"` in an extension.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use b3quot::analysis::{irreducible_oracle, semisimplicity};
use b3quot::braidword::{parse, Evaluator};
use b3quot::cli::parse_context;
use b3quot::reps::parse_params;
use b3quot::spectral::{central_value, check_traces};
use b3quot::{build_rep, Context, Error, FieldElement, RepSpec, Representation};
use serde_json::{json, Value};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParameters = 4,
    MissingRoot = 5,
    InvalidSpec = 6,
    ConstructionCheck = 7,
    Arithmetic = 8,
    OutOfRange = 9,
    Panic = 10,
}

impl From<&Error> for B3Status {
    fn from(e: &Error) -> B3Status {
        match e {
            Error::Parse(_) | Error::Syntax { .. } => B3Status::Parse,
            Error::BadParameters(_) => B3Status::InvalidParameters,
            Error::MissingRoot(_) | Error::RootsUnavailable(_) => B3Status::MissingRoot,
            Error::BadSpec(_) | Error::BadLevel(_) | Error::InvalidWitness => B3Status::InvalidSpec,
            Error::ConstructionCheck(_) | Error::NotScalar | Error::NotSemisimple => B3Status::ConstructionCheck,
            Error::IndexOutOfRange { .. } => B3Status::OutOfRange,
            Error::NonMonic
            | Error::NotSquarefree
            | Error::BadModulus(_)
            | Error::ContextMismatch
            | Error::DivisionByZero
            | Error::NotInvertible
            | Error::ZeroPolynomial
            | Error::ShapeMismatch(_)
            | Error::NotSquare => B3Status::Arithmetic,
        }
    }
}

/// A number field `Q[t]/(m)` plus the root hints used when searching for roots.
pub struct B3Context {
    ctx: Context,
    hints: Vec<FieldElement>,
}

/// A constructed representation.
pub struct B3Representation {
    rep: Representation,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(B3Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(B3Status::from(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> B3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            B3Status::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            B3Status::Panic
        }
    }
}

fn null() -> Fail {
    Fail(B3Status::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(B3Status::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn json_arg(s: *const c_char) -> Result<Value, Fail> {
    serde_json::from_str(text(s)?).map_err(|e| Fail(B3Status::Parse, e.to_string()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Fail(B3Status::Parse, "interior NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

/// Message for the last failed call on this thread (empty after a success). Do not free.
#[no_mangle]
pub extern "C" fn b3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string. Do not free.
#[no_mangle]
pub extern "C" fn b3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn b3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a field context by name: `Q`, `gaussian`, `zeta5`, `zeta120`, `cyclotomic:N`,
/// `sqrt:D` or `modulus:c0,c1,...` (ascending rational coefficients, monic, squarefree).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3_context_new(name: *const c_char, out: *mut *mut B3Context) -> B3Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let (ctx, hints) = parse_context(text(name)?)?;
        *out = Box::into_raw(Box::new(B3Context { ctx, hints }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must come from `b3_context_new` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn b3_context_free(ctx: *mut B3Context) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Degree of the field over `Q`, or 0 for a null handle.
///
/// # Safety
/// `ctx` must be null or a live context handle.
#[no_mangle]
pub unsafe extern "C" fn b3_context_degree(ctx: *const B3Context) -> usize {
    ctx.as_ref().map_or(0, |c| c.ctx.degree())
}

/// Builds a representation from a JSON spec `{"dim": d, "X": [...], "h"?, "f"?, "variant"?}`.
///
/// # Safety
/// `ctx` must be a live context; `spec_json` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_build(
    ctx: *const B3Context,
    spec_json: *const c_char,
    out: *mut *mut B3Representation,
) -> B3Status {
    guard(|| {
        let c = handle(ctx)?;
        if out.is_null() {
            return Err(null());
        }
        let spec = RepSpec::from_json(&c.ctx, &json_arg(spec_json)?)?;
        let rep = build_rep(&spec)?;
        *out = Box::into_raw(Box::new(B3Representation { rep }));
        Ok(())
    })
}

/// # Safety
/// `rep` must come from `b3_representation_build` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_free(rep: *mut B3Representation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Dimension of a representation, or 0 for a null handle.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_dim(rep: *const B3Representation) -> usize {
    rep.as_ref().map_or(0, |r| r.rep.dim())
}

/// Entry `(row, col)` (0-based) of `g1` (`generator = 1`) or `g2` (`generator = 2`).
///
/// # Safety
/// `rep` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_entry(
    rep: *const B3Representation,
    generator: u32,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> B3Status {
    guard(|| {
        let r = &handle(rep)?.rep;
        let m = match generator {
            1 => &r.g1,
            2 => &r.g2,
            other => return Err(Fail(B3Status::OutOfRange, format!("generator {other} is not 1 or 2"))),
        };
        if row >= m.rows() || col >= m.cols() {
            return Err(Fail(
                B3Status::OutOfRange,
                format!("entry ({row}, {col}) outside {}x{}", m.rows(), m.cols()),
            ));
        }
        put_string(out, m[(row, col)].encode())
    })
}

/// Full JSON of a representation (spec and both matrices).
///
/// # Safety
/// `rep` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_to_json(rep: *const B3Representation, out: *mut *mut c_char) -> B3Status {
    guard(|| put_string(out, handle(rep)?.rep.to_json().to_string()))
}

/// Scalar by which `(g1 g2)^3` acts.
///
/// # Safety
/// `rep` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_central_value(
    rep: *const B3Representation,
    out: *mut *mut c_char,
) -> B3Status {
    guard(|| put_string(out, central_value(&handle(rep)?.rep)?.encode()))
}

/// Braid relation, minimal polynomial and every spectral identity.
///
/// # Safety
/// `rep` must be a live handle; `all_ok` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_verify(rep: *const B3Representation, all_ok: *mut bool) -> B3Status {
    guard(|| {
        let r = &handle(rep)?.rep;
        if all_ok.is_null() {
            return Err(null());
        }
        let ok = r.verify_braid_relation() && r.verify_minimal_polynomial() && check_traces(r)?.all_ok;
        *all_ok = ok;
        Ok(())
    })
}

/// Whether `g1, g2` generate the full matrix algebra.
///
/// # Safety
/// `rep` must be a live handle; `irreducible` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_is_irreducible(
    rep: *const B3Representation,
    irreducible: *mut bool,
) -> B3Status {
    guard(|| {
        let r = &handle(rep)?.rep;
        if irreducible.is_null() {
            return Err(null());
        }
        *irreducible = irreducible_oracle(r)?;
        Ok(())
    })
}

/// Evaluates a braid word such as `"(s1 s2)^3"`; writes `{"matrix", "trace", "word"}` JSON.
///
/// # Safety
/// `rep` must be a live handle; `word` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn b3_representation_eval_word(
    rep: *const B3Representation,
    word: *const c_char,
    out: *mut *mut c_char,
) -> B3Status {
    guard(|| {
        let r = &handle(rep)?.rep;
        let w = parse(text(word)?)?;
        let m = Evaluator::new(r)?.evaluate(&w);
        let v = json!({"word": w.to_string(), "matrix": m.to_json(), "trace": m.trace().to_json()});
        put_string(out, v.to_string())
    })
}

/// Semisimplicity verdict for `X` given as a JSON list; optionally writes the failing
/// predicate names as a JSON list (pass null to skip).
///
/// # Safety
/// `ctx` must be a live context; `x_json` a NUL-terminated string; `verdict` writable;
/// `failing` null or writable.
#[no_mangle]
pub unsafe extern "C" fn b3_semisimple(
    ctx: *const B3Context,
    x_json: *const c_char,
    verdict: *mut bool,
    failing: *mut *mut c_char,
) -> B3Status {
    guard(|| {
        let c = handle(ctx)?;
        if verdict.is_null() {
            return Err(null());
        }
        let x = parse_params(&c.ctx, &json_arg(x_json)?)?;
        let report = semisimplicity(&x)?;
        *verdict = report.verdict;
        if !failing.is_null() {
            put_string(failing, json!(report.failing_names()).to_string())?;
        }
        Ok(())
    })
}

/// Number of representations `enumerate_irreps` builds on `X` with this context's roots,
/// and how many root choices it had to defer.
///
/// # Safety
/// `ctx` must be a live context; `x_json` a NUL-terminated string; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn b3_enumerate_count(
    ctx: *const B3Context,
    x_json: *const c_char,
    built: *mut usize,
    deferred: *mut usize,
) -> B3Status {
    guard(|| {
        let c = handle(ctx)?;
        if built.is_null() || deferred.is_null() {
            return Err(null());
        }
        let x = parse_params(&c.ctx, &json_arg(x_json)?)?;
        let e = b3quot::reps::enumerate_irreps(&x, &c.hints)?;
        *built = e.reps.len();
        *deferred = e.deferred.iter().map(|d| d.missing).sum();
        Ok(())
    })
}
