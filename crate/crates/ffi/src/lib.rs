//! C ABI over `ctz-core`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`CtStatus`]; the message of the last failure on the calling thread is
//! available through [`ct_last_error`]. Strings returned by the library are
//! NUL-terminated UTF-8 and must be released with [`ct_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ctz_core::group::{bsgs_build, conjecture_check, ctk_degree, ctk_generators, ctk_generators_full};
use ctz_core::order::{product_order, Method};
use ctz_core::perm::horizontal_product_perm;
use ctz_core::{ClassTransposition, Error, FinitePermutation, OrderStatus, StabilizerChain};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    NotHorizontal = 4,
    Overflow = 5,
    ResourceLimit = 6,
    /// A mathematical invariant failed (unexpected component shape).
    Invariant = 7,
    /// Unclassified failure, including a caught panic.
    Internal = 8,
}

/// Order method selector for [`ct_product_order`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtMethod {
    Finite = 0,
    Graph = 1,
    Trace = 2,
}

/// Certification level of a computed order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtOrderStatus {
    Exact = 0,
    WindowExact = 1,
    Unknown = 2,
}

/// Opaque class transposition.
pub struct CtTransposition(ClassTransposition);

/// Opaque permutation of `{0, ..., degree-1}`.
pub struct CtPermutation(FinitePermutation);

/// Opaque permutation group, held as a stabilizer chain.
pub struct CtGroup(StabilizerChain);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> CtStatus {
    match e {
        Error::Parse { .. } | Error::Range { .. } | Error::NotDisjoint { .. } => CtStatus::Parse,
        Error::InvalidArgument(_) | Error::DegreeMismatch { .. } => CtStatus::InvalidArgument,
        Error::NotHorizontal(_) => CtStatus::NotHorizontal,
        Error::Overflow(_) => CtStatus::Overflow,
        Error::ResourceLimit { .. } => CtStatus::ResourceLimit,
        Error::ShapeViolation(_) => CtStatus::Invariant,
        Error::NotClassified => CtStatus::Internal,
    }
}

/// Runs `f`, recording any failure (or panic) as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (CtStatus, String)>) -> CtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CtStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CtStatus::Internal
        }
    }
}

fn core(e: Error) -> (CtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CtStatus, String) {
    (CtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CtStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CtStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CtStatus::Parse, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (CtStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message of the last failure on this thread, or NULL. Release with
/// [`ct_string_free`].
#[no_mangle]
pub extern "C" fn ct_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(s) => s.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"r1(m1),r2(m2)"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_transposition_parse(
    text: *const c_char,
    out: *mut *mut CtTransposition,
) -> CtStatus {
    guard(|| {
        let t: ClassTransposition = read_str(text, "text")?.parse().map_err(core)?;
        write_out(out, Box::into_raw(Box::new(CtTransposition(t))), "out")
    })
}

/// # Safety
/// `t` must be NULL or a handle from [`ct_transposition_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_transposition_free(t: *mut CtTransposition) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Image of `n`; fails with `Overflow` outside the i64 range.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_transposition_apply(
    t: *const CtTransposition,
    n: i64,
    out: *mut i64,
) -> CtStatus {
    guard(|| {
        let t = as_ref(t, "transposition")?;
        let y = t
            .0
            .checked_apply(n)
            .ok_or_else(|| core(Error::Overflow(format!("image of {n}"))))?;
        write_out(out, y, "out")
    })
}

/// 1 for equal moduli, 0 otherwise (also for NULL).
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_transposition_is_horizontal(t: *const CtTransposition) -> i32 {
    t.as_ref().map_or(0, |t| t.0.is_horizontal() as i32)
}

/// Canonical text form, or NULL for a NULL handle.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_transposition_to_string(t: *const CtTransposition) -> *mut c_char {
    match t.as_ref() {
        Some(t) => into_c_string(t.0.to_string()),
        None => ptr::null_mut(),
    }
}

fn method(m: CtMethod) -> Method {
    match m {
        CtMethod::Finite => Method::Finite,
        CtMethod::Graph => Method::Graph,
        CtMethod::Trace => Method::Trace,
    }
}

/// Order of `t1·t2`. When the status comes back `Unknown`, `order` receives 0.
/// Fails with `Overflow` if the order does not fit in 64 bits.
///
/// # Safety
/// Handles must be live; `order` and `status` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_product_order(
    t1: *const CtTransposition,
    t2: *const CtTransposition,
    m: CtMethod,
    budget: usize,
    order: *mut u64,
    status: *mut CtOrderStatus,
) -> CtStatus {
    guard(|| {
        let (a, b) = (as_ref(t1, "t1")?, as_ref(t2, "t2")?);
        let r = product_order(&a.0, &b.0, method(m), budget).map_err(core)?;
        let value = match &r.order {
            Some(o) => u64::try_from(o).map_err(|_| core(Error::Overflow("order".into())))?,
            None => 0,
        };
        let s = match r.status {
            OrderStatus::Exact => CtOrderStatus::Exact,
            OrderStatus::WindowExact => CtOrderStatus::WindowExact,
            OrderStatus::Unknown => CtOrderStatus::Unknown,
        };
        write_out(order, value, "order")?;
        write_out(status, s, "status")
    })
}

/// Full order report as JSON.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_product_order_json(
    t1: *const CtTransposition,
    t2: *const CtTransposition,
    m: CtMethod,
    budget: usize,
    out: *mut *mut c_char,
) -> CtStatus {
    guard(|| {
        let (a, b) = (as_ref(t1, "t1")?, as_ref(t2, "t2")?);
        let r = product_order(&a.0, &b.0, method(m), budget).map_err(core)?;
        let json = serde_json::to_string(&r).map_err(|e| (CtStatus::Internal, e.to_string()))?;
        write_out(out, into_c_string(json), "out")
    })
}

/// Product (left to right) of horizontal transpositions reduced modulo the
/// lcm of their moduli.
///
/// # Safety
/// `ts` must point to `len` live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_horizontal_product(
    ts: *const *const CtTransposition,
    len: usize,
    out: *mut *mut CtPermutation,
) -> CtStatus {
    guard(|| {
        if ts.is_null() {
            return Err(null("ts"));
        }
        let list = std::slice::from_raw_parts(ts, len)
            .iter()
            .map(|&t| as_ref(t, "transposition").map(|t| t.0))
            .collect::<Result<Vec<_>, _>>()?;
        let p = horizontal_product_perm(&list).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(CtPermutation(p))), "out")
    })
}

/// Parses cycle notation such as `"(0,1)(2,3)"` on `{0, ..., degree-1}`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut CtPermutation,
) -> CtStatus {
    guard(|| {
        let p = FinitePermutation::parse_cycles(read_str(text, "text")?, degree).map_err(core)?;
        write_out(out, Box::into_raw(Box::new(CtPermutation(p))), "out")
    })
}

/// # Safety
/// `p` must be NULL or a permutation handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_free(p: *mut CtPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_degree(p: *const CtPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.degree())
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_image(
    p: *const CtPermutation,
    x: usize,
    out: *mut usize,
) -> CtStatus {
    guard(|| {
        let p = as_ref(p, "permutation")?;
        if x >= p.0.degree() {
            return Err(core(Error::InvalidArgument(format!(
                "point {x} outside degree {}",
                p.0.degree()
            ))));
        }
        write_out(out, p.0.image(x), "out")
    })
}

/// Canonical cycle structure as
/// `{"degree":..,"cycles":[[..]],"fixed":[..],"order":".."}`.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_cycles_json(p: *const CtPermutation) -> *mut c_char {
    match p.as_ref() {
        Some(p) => serde_json::to_string(&p.0.cycle_structure().report())
            .map(into_c_string)
            .unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    }
}

/// Order in decimal.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_permutation_order_string(p: *const CtPermutation) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(p.0.order().to_string()),
        None => ptr::null_mut(),
    }
}

/// `⟨CT_k : k in ks⟩` acting on residues modulo `degree` (0: lcm of `ks`).
/// `full` selects all C(k,2) generators per k instead of adjacent ones.
///
/// # Safety
/// `ks` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_group_from_ctk(
    ks: *const usize,
    len: usize,
    degree: usize,
    full: bool,
    max_degree: usize,
    out: *mut *mut CtGroup,
) -> CtStatus {
    guard(|| {
        if ks.is_null() {
            return Err(null("ks"));
        }
        let ks = std::slice::from_raw_parts(ks, len);
        let degree = if degree == 0 { ctk_degree(ks) } else { degree };
        if degree > max_degree {
            return Err(core(Error::ResourceLimit {
                degree,
                limit: max_degree,
            }));
        }
        let gens = if full {
            ctk_generators_full(ks, degree)
        } else {
            ctk_generators(ks, degree)
        }
        .map_err(core)?;
        write_out(out, Box::into_raw(Box::new(CtGroup(bsgs_build(&gens)))), "out")
    })
}

/// # Safety
/// `g` must be NULL or a group handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ct_group_free(g: *mut CtGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order in decimal.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_group_order_string(g: *const CtGroup) -> *mut c_char {
    match g.as_ref() {
        Some(g) => into_c_string(g.0.order().to_string()),
        None => ptr::null_mut(),
    }
}

/// Membership test; `out` receives 1 or 0.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_group_contains(
    g: *const CtGroup,
    p: *const CtPermutation,
    out: *mut i32,
) -> CtStatus {
    guard(|| {
        let (g, p) = (as_ref(g, "group")?, as_ref(p, "permutation")?);
        let yes = g.0.contains(&p.0).map_err(core)?;
        write_out(out, yes as i32, "out")
    })
}

/// `|⟨CT_2, ..., CT_k⟩|` against `N!` as JSON
/// `{"k":..,"N":..,"order":"..","n_factorial":"..","equal":..}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ct_conjecture_json(k: usize, max_degree: usize, out: *mut *mut c_char) -> CtStatus {
    guard(|| {
        let r = conjecture_check(k, max_degree).map_err(core)?;
        let json = serde_json::to_string(&r).map_err(|e| (CtStatus::Internal, e.to_string()))?;
        write_out(out, into_c_string(json), "out")
    })
}
