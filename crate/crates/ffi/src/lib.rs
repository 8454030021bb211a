//! C interface. Objects cross the boundary as opaque handles that the caller
//! frees with the matching `sw_*_free`. Every fallible call returns an
//! [`SwStatus`]; the message of the last failure on the calling thread is
//! available from [`sw_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sandwich::csp::has_siggers;
use sandwich::format::{emit_instance, parse_graph, parse_instance, parse_structure};
use sandwich::oracle::DEFAULT_BUDGET;
use sandwich::{solve, Certificate, ClassId, Error, FiniteStructure, Method, SandwichInstance};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    Overlap = 4,
    Range = 5,
    Size = 6,
    Budget = 7,
    Signature = 8,
    NotBipartite = 9,
    Invalid = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwMethod {
    Auto = 0,
    Poly = 1,
    Search = 2,
    Oracle = 3,
}

/// A validated sandwich instance.
pub struct SwInstance(SandwichInstance);

/// A finite relational structure.
pub struct SwStructure(FiniteStructure);

/// Outcome of [`sw_solve`]: a verdict plus the completion when YES.
pub struct SwResult(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SwStatus {
    match e {
        Error::Overlap(_) => SwStatus::Overlap,
        Error::Range(_) => SwStatus::Range,
        Error::Size(_) => SwStatus::Size,
        Error::Budget(_) => SwStatus::Budget,
        Error::Signature(_) => SwStatus::Signature,
        Error::NotBipartite => SwStatus::NotBipartite,
        Error::Parse { .. } => SwStatus::Parse,
        Error::Invalid(_) => SwStatus::Invalid,
    }
}

enum Fail {
    Status(SwStatus, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, recording failures and catching panics.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SwStatus::Ok,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            SwStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(SwStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(SwStatus::Utf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::Status(SwStatus::NullPointer, "null handle".into()))
}

fn out_ptr<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail::Status(SwStatus::NullPointer, "null output pointer".into()))
    } else {
        Ok(())
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the `p swi` text format.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_instance_parse(src: *const c_char, out: *mut *mut SwInstance) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let inst = parse_instance(text(src)?)?;
        *out = Box::into_raw(Box::new(SwInstance(inst)));
        Ok(())
    })
}

/// Builds an instance from 0-based pairs stored as consecutive `u, v`
/// entries: `forced_len` and `forbidden_len` count pairs, not entries.
///
/// # Safety
/// Each array must hold `2 * len` entries (or be null when `len` is 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sw_instance_new(
    n: u32,
    forced: *const u32,
    forced_len: usize,
    forbidden: *const u32,
    forbidden_len: usize,
    out: *mut *mut SwInstance,
) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let pairs = |p: *const u32, len: usize| -> Result<Vec<(usize, usize)>, Fail> {
            if len == 0 {
                return Ok(Vec::new());
            }
            if p.is_null() {
                return Err(Fail::Status(SwStatus::NullPointer, "null pair array".into()));
            }
            let s = std::slice::from_raw_parts(p, 2 * len);
            Ok(s.chunks(2).map(|c| (c[0] as usize, c[1] as usize)).collect())
        };
        let inst = SandwichInstance::new(n as usize, pairs(forced, forced_len)?, pairs(forbidden, forbidden_len)?)?;
        *out = Box::into_raw(Box::new(SwInstance(inst)));
        Ok(())
    })
}

/// # Safety
/// `inst` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_instance_free(inst: *mut SwInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// # Safety
/// `inst` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sw_instance_vertex_count(inst: *const SwInstance) -> u32 {
    inst.as_ref().map_or(0, |i| i.0.vertex_count() as u32)
}

/// Canonical `p swi` text; free with [`sw_string_free`].
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_instance_emit(inst: *const SwInstance, out: *mut *mut c_char) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let s = emit_instance(&handle(inst)?.0);
        *out = CString::new(s).expect("no nul bytes").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Solves `inst` for the named class (`split`, `pqsplit:1,2`, ...). A zero
/// budget means the default. Running out of budget returns
/// [`SwStatus::Budget`].
///
/// # Safety
/// `inst` must be a live handle, `class_name` a nul-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_solve(
    inst: *const SwInstance,
    class_name: *const c_char,
    method: SwMethod,
    budget: u64,
    out: *mut *mut SwResult,
) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let cls = ClassId::parse(text(class_name)?)?;
        let method = match method {
            SwMethod::Auto => Method::Auto,
            SwMethod::Poly => Method::Poly,
            SwMethod::Search => Method::Search,
            SwMethod::Oracle => Method::Oracle,
        };
        let budget = if budget == 0 { DEFAULT_BUDGET } else { budget };
        let (cert, _) = solve(&handle(inst)?.0, &cls, method, budget)?;
        *out = Box::into_raw(Box::new(SwResult(cert)));
        Ok(())
    })
}

/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sw_result_is_yes(res: *const SwResult) -> bool {
    res.as_ref().is_some_and(|r| r.0.is_yes())
}

/// Number of completion edges; 0 for NO.
///
/// # Safety
/// `res` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sw_result_edge_count(res: *const SwResult) -> usize {
    res.as_ref().and_then(|r| r.0.completion()).map_or(0, |e| e.len())
}

/// Copies the completion into `buf` as 0-based `u, v` entries. `cap` is the
/// number of pairs `buf` can hold.
///
/// # Safety
/// `res` must be a live handle and `buf` hold `2 * cap` entries.
#[no_mangle]
pub unsafe extern "C" fn sw_result_edges(res: *const SwResult, buf: *mut u32, cap: usize) -> SwStatus {
    guard(|| {
        out_ptr(buf)?;
        let edges = handle(res)?.0.completion().unwrap_or(&[]);
        if edges.len() > cap {
            return Err(Fail::Status(
                SwStatus::Size,
                format!("{} edges do not fit in {cap}", edges.len()),
            ));
        }
        let dst = std::slice::from_raw_parts_mut(buf, 2 * edges.len());
        for (i, p) in edges.iter().enumerate() {
            dst[2 * i] = p.lo() as u32;
            dst[2 * i + 1] = p.hi() as u32;
        }
        Ok(())
    })
}

/// # Safety
/// `res` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_result_free(res: *mut SwResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Class membership of a graph given in the `p gr` format.
///
/// # Safety
/// Both strings must be nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_recognize(graph: *const c_char, class_name: *const c_char, out: *mut bool) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let g = parse_graph(text(graph)?)?;
        *out = ClassId::parse(text(class_name)?)?.contains(&g)?;
        Ok(())
    })
}

/// Parses the `p fst` text format.
///
/// # Safety
/// `src` must be nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_structure_parse(src: *const c_char, out: *mut *mut SwStructure) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        let s = parse_structure(text(src)?)?;
        *out = Box::into_raw(Box::new(SwStructure(s)));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_structure_free(s: *mut SwStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Whether the template has a 4-ary Siggers polymorphism.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_has_siggers(s: *const SwStructure, out: *mut bool) -> SwStatus {
    guard(|| {
        out_ptr(out)?;
        *out = has_siggers(&handle(s)?.0)?.is_some();
        Ok(())
    })
}
