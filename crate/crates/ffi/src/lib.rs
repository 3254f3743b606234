//! C ABI for `packtriple`.
//!
//! Triples are passed as opaque `PtTriple` handles created by one of the
//! constructors and released with `pt_triple_free`. Every fallible function
//! returns a status code: `PT_OK`, `PT_NO_PACKING`, or a negative `PT_ERR_*`
//! value, in which case `pt_last_error_message` describes the failure.
//! Strings returned to the caller must be released with `pt_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use packtriple::conditions::{check, Prediction, TheoremId};
use packtriple::format::{parse_triple, write_triple};
use packtriple::generators::{generate, FamilyParams, FamilyTag};
use packtriple::solver::{solve, Method};
use packtriple::{Error, Graph, PackingMap, Triple};

pub const PT_OK: i32 = 0;
/// The triple has no packing.
pub const PT_NO_PACKING: i32 = 1;
pub const PT_ERR_NULL: i32 = -1;
pub const PT_ERR_PARSE: i32 = -2;
pub const PT_ERR_INVALID: i32 = -3;
pub const PT_ERR_GUARD: i32 = -4;
pub const PT_ERR_PRECONDITION: i32 = -5;
/// An output buffer is too small.
pub const PT_ERR_BUFFER: i32 = -6;
pub const PT_ERR_INTERNAL: i32 = -7;
pub const PT_ERR_IO: i32 = -8;
pub const PT_ERR_PANIC: i32 = -9;

pub const PT_METHOD_BRUTE: i32 = 0;
pub const PT_METHOD_BACKTRACK: i32 = 1;
pub const PT_METHOD_CONSTRUCTIVE: i32 = 2;

pub const PT_THEOREM_SS_PRODUCT: i32 = 0;
pub const PT_THEOREM_LEMMA7: i32 = 1;
pub const PT_THEOREM_COR8: i32 = 2;
pub const PT_THEOREM_BE: i32 = 3;

pub const PT_PREDICT_MUST_PACK: i32 = 0;
pub const PT_PREDICT_EXCEPTION_NO_PACK: i32 = 1;
pub const PT_PREDICT_NONE: i32 = 2;

/// Which graph `pt_triple_add_edge` edits.
pub const PT_GRAPH_G1: i32 = 1;
pub const PT_GRAPH_G2: i32 = 2;
pub const PT_GRAPH_YELLOW: i32 = 3;

/// Opaque triple handle.
pub struct PtTriple {
    inner: Triple,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => PT_ERR_PARSE,
        Error::Guard(_) => PT_ERR_GUARD,
        Error::Precondition(_) => PT_ERR_PRECONDITION,
        Error::Internal(_) => PT_ERR_INTERNAL,
        Error::Io(_) => PT_ERR_IO,
        _ => PT_ERR_INVALID,
    }
}

fn fail(e: Error) -> i32 {
    set_error(&e.to_string());
    code_of(&e)
}

/// Runs `body`, turning panics into `PT_ERR_PANIC`.
fn guarded(body: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(code) => code,
        Err(_) => {
            set_error("panic inside packtriple");
            PT_ERR_PANIC
        }
    }
}

fn null_error(what: &str) -> i32 {
    set_error(&format!("{what} is null"));
    PT_ERR_NULL
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, i32> {
    if s.is_null() {
        return Err(null_error(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        PT_ERR_INVALID
    })
}

unsafe fn store(out: *mut *mut PtTriple, t: Triple) -> i32 {
    *out = Box::into_raw(Box::new(PtTriple { inner: t }));
    PT_OK
}

/// Message for the last error on this thread. Valid until the next call
/// into the library from the same thread; never null.
#[no_mangle]
pub extern "C" fn pt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the text triple format into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_parse(text: *const c_char, out: *mut *mut PtTriple) -> i32 {
    guarded(|| {
        if out.is_null() {
            return null_error("out");
        }
        let text = match read_str(text, "text") {
            Ok(s) => s,
            Err(code) => return code,
        };
        match parse_triple(text) {
            Ok(t) => store(out, t),
            Err(e) => fail(e),
        }
    })
}

/// A new triple on `n + n` vertices with no edges.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_new(n: usize, out: *mut *mut PtTriple) -> i32 {
    guarded(|| {
        if out.is_null() {
            return null_error("out");
        }
        match Triple::empty(n) {
            Ok(t) => store(out, t),
            Err(e) => fail(e),
        }
    })
}

/// Adds an edge to `G1`, `G2` or the yellow graph (`PT_GRAPH_*`). Yellow
/// pairs are `(V1 vertex, V2 vertex)`.
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_add_edge(t: *mut PtTriple, which: i32, a: usize, b: usize) -> i32 {
    guarded(|| {
        let Some(h) = t.as_mut() else {
            return null_error("triple");
        };
        let cur = &h.inner;
        let result = match which {
            PT_GRAPH_G1 | PT_GRAPH_G2 => {
                let mut g1 = cur.g1().clone();
                let mut g2 = cur.g2().clone();
                let g: &mut Graph = if which == PT_GRAPH_G1 { &mut g1 } else { &mut g2 };
                g.try_add_edge(a, b).and_then(|_| Triple::new(g1, g2, &cur.yellow_pairs().collect::<Vec<_>>()))
            }
            PT_GRAPH_YELLOW => cur.add_yellow(&[(a, b)]),
            _ => Err(Error::InvalidParams(format!("unknown graph selector {which}"))),
        };
        match result {
            Ok(next) => {
                h.inner = next;
                PT_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds a named family (`"BE1"`, `"FIG2D"`, `"KK_CLIQUE"`, ...). Zero
/// for `n`, `m`, `mp` or `k` means "not given".
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_generate(
    family: *const c_char,
    n: usize,
    m: usize,
    mp: usize,
    k: usize,
    out: *mut *mut PtTriple,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            return null_error("out");
        }
        let family = match read_str(family, "family") {
            Ok(s) => s,
            Err(code) => return code,
        };
        let opt = |x: usize| (x > 0).then_some(x);
        let built = family.parse::<FamilyTag>().and_then(|tag| {
            generate(
                tag,
                opt(n),
                FamilyParams {
                    m: opt(m),
                    mp: opt(mp),
                    k: opt(k),
                },
            )
        });
        match built {
            Ok(t) => store(out, t),
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `t` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_free(t: *mut PtTriple) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of vertices on each side, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_order(t: *const PtTriple) -> usize {
    t.as_ref().map_or(0, |h| h.inner.n())
}

/// Serializes to the text format; free the result with `pt_string_free`.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_triple_to_string(t: *const PtTriple, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        let Some(h) = t.as_ref() else {
            return null_error("triple");
        };
        if out.is_null() {
            return null_error("out");
        }
        let s = CString::new(write_triple(&h.inner)).expect("triple text has no NUL");
        *out = s.into_raw();
        PT_OK
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Searches for a packing with `method` (`PT_METHOD_*`). On `PT_OK` the
/// first `n` entries of `perm` hold `f(0), ..., f(n-1)`.
///
/// # Safety
/// `t` must be a live handle and `perm` must point to `len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn pt_solve(t: *const PtTriple, method: i32, perm: *mut usize, len: usize) -> i32 {
    guarded(|| {
        let Some(h) = t.as_ref() else {
            return null_error("triple");
        };
        if perm.is_null() {
            return null_error("perm");
        }
        let n = h.inner.n();
        if len < n {
            set_error(&format!("perm holds {len} entries, need {n}"));
            return PT_ERR_BUFFER;
        }
        let method = match method {
            PT_METHOD_BRUTE => Method::Brute,
            PT_METHOD_BACKTRACK => Method::Backtrack,
            PT_METHOD_CONSTRUCTIVE => Method::Constructive,
            _ => return fail(Error::InvalidParams(format!("unknown method {method}"))),
        };
        match solve(&h.inner, method) {
            Ok(Some(f)) => {
                std::slice::from_raw_parts_mut(perm, n).copy_from_slice(f.as_slice());
                PT_OK
            }
            Ok(None) => PT_NO_PACKING,
            Err(e) => fail(e),
        }
    })
}

/// Checks whether `perm[0..len]` is a packing; writes the answer to `result`.
///
/// # Safety
/// `t` must be a live handle, `perm` must point to `len` readable slots and
/// `result` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_is_packing(t: *const PtTriple, perm: *const usize, len: usize, result: *mut bool) -> i32 {
    guarded(|| {
        let Some(h) = t.as_ref() else {
            return null_error("triple");
        };
        if perm.is_null() || result.is_null() {
            return null_error("perm or result");
        }
        let map = match PackingMap::new(std::slice::from_raw_parts(perm, len).to_vec()) {
            Ok(m) => m,
            Err(e) => return fail(e),
        };
        match h.inner.is_packing(&map) {
            Ok(b) => {
                *result = b;
                PT_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Runs one hypothesis checker (`PT_THEOREM_*`) and writes its prediction
/// (`PT_PREDICT_*`).
///
/// # Safety
/// `t` must be a live handle and `prediction` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_check(t: *const PtTriple, theorem: i32, prediction: *mut i32) -> i32 {
    guarded(|| {
        let Some(h) = t.as_ref() else {
            return null_error("triple");
        };
        if prediction.is_null() {
            return null_error("prediction");
        }
        let id = match theorem {
            PT_THEOREM_SS_PRODUCT => TheoremId::SsProduct,
            PT_THEOREM_LEMMA7 => TheoremId::Lemma7,
            PT_THEOREM_COR8 => TheoremId::Cor8,
            PT_THEOREM_BE => TheoremId::Be,
            _ => return fail(Error::InvalidParams(format!("unknown theorem {theorem}"))),
        };
        match check(id, &h.inner) {
            Ok(r) => {
                *prediction = match r.predicted {
                    Prediction::MustPack => PT_PREDICT_MUST_PACK,
                    Prediction::ExceptionNoPack => PT_PREDICT_EXCEPTION_NO_PACK,
                    Prediction::NoPrediction => PT_PREDICT_NONE,
                };
                PT_OK
            }
            Err(e) => fail(e),
        }
    })
}
