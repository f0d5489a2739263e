//! C ABI over the cgdom library.
//!
//! Conventions:
//! - Handles (`CgdomGroup`, `CgdomGraph`) are opaque; create them through the
//!   constructors here and release them with the matching `_free` function.
//! - Every fallible call returns a [`CgdomStatus`]; results come back through
//!   out-pointers. On any non-OK status, `cgdom_last_error` returns a
//!   thread-local message valid until the next failing call on that thread.
//! - Strings returned through out-pointers are NUL-terminated, UTF-8, owned
//!   by the caller, and must be released with `cgdom_string_free`.
//! - Structured results (invariants, domination results, theorem suites) are
//!   returned as JSON documents matching the cgdom CLI's `--json` output.

use cgdom::commuting;
use cgdom::domination::{exact_domination_number, exact_total_domination_number, Budget};
use cgdom::families::FamilySpec;
use cgdom::formulas;
use cgdom::graph::SimpleGraph;
use cgdom::group::{GroupError, GroupTable, DEFAULT_GROUP_CAP};
use cgdom::verify;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CgdomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    SizeLimit = 4,
    NotAGroup = 5,
    ParseError = 6,
    NotApplicable = 7,
    IoError = 8,
    /// An internal invariant failed; the operation was abandoned safely.
    Internal = 9,
}

/// Which group-derived graph to build.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CgdomGraphKind {
    Commuting = 0,
    ProperCommuting = 1,
    EnhancedPower = 2,
    ProperEnhancedPower = 3,
}

/// Opaque finite group handle.
pub struct CgdomGroup {
    inner: GroupTable,
}

/// Opaque simple-graph handle.
pub struct CgdomGraph {
    inner: SimpleGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', "?"))
        .unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: CgdomStatus, message: impl Into<String>) -> CgdomStatus {
    set_error(message.into());
    status
}

fn status_of_group_error(e: &GroupError) -> CgdomStatus {
    match e {
        GroupError::SizeLimit { .. } => CgdomStatus::SizeLimit,
        GroupError::NotAGroup(_) => CgdomStatus::NotAGroup,
        GroupError::BadTable(_) | GroupError::BadParameter(_) | GroupError::NotAbelian(_) => {
            CgdomStatus::InvalidArgument
        }
        GroupError::Io(_) => CgdomStatus::IoError,
        GroupError::Parse(_) => CgdomStatus::ParseError,
    }
}

/// Runs a closure, converting panics into `Internal` instead of unwinding
/// across the boundary.
fn guarded(f: impl FnOnce() -> CgdomStatus) -> CgdomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CgdomStatus::Internal, "internal panic"),
    }
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, CgdomStatus> {
    if ptr.is_null() {
        return Err(fail(CgdomStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(CgdomStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn give_string(out: *mut *mut c_char, text: String) -> CgdomStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => return fail(CgdomStatus::Internal, "result contained a NUL byte"),
    };
    unsafe { *out = c.into_raw() };
    CgdomStatus::Ok
}

/// Library version as a static string; never freed.
#[no_mangle]
pub extern "C" fn cgdom_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn cgdom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Releases a string returned through any `out` parameter here.
///
/// # Safety
/// `s` must have been produced by this library and not freed already.
#[no_mangle]
pub unsafe extern "C" fn cgdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from a family descriptor such as "dihedral(10)" or
/// "direct(quaternion(8),cyclic(3))". `cap` bounds the order; 0 means the
/// default cap (4096).
///
/// # Safety
/// `descriptor` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_build(
    descriptor: *const c_char,
    cap: usize,
    out: *mut *mut CgdomGroup,
) -> CgdomStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CgdomStatus::NullPointer, "null out pointer");
        }
        let text = match read_utf8(descriptor) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let cap = if cap == 0 { DEFAULT_GROUP_CAP } else { cap };
        let spec = match FamilySpec::parse_descriptor(text) {
            Ok(s) => s,
            Err(e) => return fail(status_of_group_error(&e), e.to_string()),
        };
        match spec.build(cap) {
            Ok(group) => {
                *out = Box::into_raw(Box::new(CgdomGroup { inner: group }));
                CgdomStatus::Ok
            }
            Err(e) => fail(status_of_group_error(&e), e.to_string()),
        }
    })
}

/// Parses the group file format (name/order/table/labels); the table is
/// validated and any axiom violation is an error.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_from_json(
    json: *const c_char,
    cap: usize,
    out: *mut *mut CgdomGroup,
) -> CgdomStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CgdomStatus::NullPointer, "null out pointer");
        }
        let text = match read_utf8(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let cap = if cap == 0 { DEFAULT_GROUP_CAP } else { cap };
        match GroupTable::from_json(text, cap) {
            Ok(group) => {
                *out = Box::into_raw(Box::new(CgdomGroup { inner: group }));
                CgdomStatus::Ok
            }
            Err(e) => fail(status_of_group_error(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `group` must come from a constructor here and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_free(group: *mut CgdomGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_order(group: *const CgdomGroup, out: *mut u32) -> CgdomStatus {
    if group.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    *out = (*group).inner.order() as u32;
    CgdomStatus::Ok
}

/// The canonical construction descriptor.
///
/// # Safety
/// `group` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_descriptor(
    group: *const CgdomGroup,
    out: *mut *mut c_char,
) -> CgdomStatus {
    if group.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    give_string(out, (*group).inner.descriptor().to_string())
}

/// The group file format (same as the CLI `make` output).
///
/// # Safety
/// `group` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_to_json(
    group: *const CgdomGroup,
    out: *mut *mut c_char,
) -> CgdomStatus {
    if group.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    give_string(out, (*group).inner.to_json())
}

/// All derived invariants (center size, centralizer counts, maximal cyclic
/// counts, AC and nilpotency flags, ...) as a JSON object.
///
/// # Safety
/// `group` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_invariants_json(
    group: *const CgdomGroup,
    out: *mut *mut c_char,
) -> CgdomStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return fail(CgdomStatus::NullPointer, "null pointer");
        }
        let inv = (*group).inner.compute_invariants();
        match serde_json::to_string_pretty(&inv) {
            Ok(text) => give_string(out, text),
            Err(e) => fail(CgdomStatus::Internal, e.to_string()),
        }
    })
}

/// Builds one of the group-derived graphs.
///
/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cgdom_graph_build(
    group: *const CgdomGroup,
    kind: CgdomGraphKind,
    out: *mut *mut CgdomGraph,
) -> CgdomStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return fail(CgdomStatus::NullPointer, "null pointer");
        }
        let g = &(*group).inner;
        let graph = match kind {
            CgdomGraphKind::Commuting => commuting::commuting_graph(g),
            CgdomGraphKind::ProperCommuting => commuting::proper_commuting_graph(g).0,
            CgdomGraphKind::EnhancedPower => commuting::enhanced_power_graph(g),
            CgdomGraphKind::ProperEnhancedPower => commuting::proper_enhanced_power_graph(g).0,
        };
        *out = Box::into_raw(Box::new(CgdomGraph { inner: graph }));
        CgdomStatus::Ok
    })
}

/// # Safety
/// `graph` must come from `cgdom_graph_build` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cgdom_graph_free(graph: *mut CgdomGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cgdom_graph_vertex_count(
    graph: *const CgdomGraph,
    out: *mut u32,
) -> CgdomStatus {
    if graph.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    *out = (*graph).inner.vertex_count() as u32;
    CgdomStatus::Ok
}

/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cgdom_graph_edge_count(
    graph: *const CgdomGraph,
    out: *mut u64,
) -> CgdomStatus {
    if graph.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    *out = (*graph).inner.edge_count() as u64;
    CgdomStatus::Ok
}

/// Graph export format ({n, edges, labels}).
///
/// # Safety
/// `graph` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_graph_to_json(
    graph: *const CgdomGraph,
    out: *mut *mut c_char,
) -> CgdomStatus {
    if graph.is_null() || out.is_null() {
        return fail(CgdomStatus::NullPointer, "null pointer");
    }
    give_string(out, (*graph).inner.to_json())
}

/// Exact domination (total = false) or total domination (total = true) with
/// certificate, as JSON: value, existence, method, bounds, node count, and the
/// witness as vertex labels. `budget_secs` of 0 means no time limit.
///
/// # Safety
/// `graph` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_gamma_json(
    graph: *const CgdomGraph,
    total: bool,
    budget_secs: u64,
    out: *mut *mut c_char,
) -> CgdomStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return fail(CgdomStatus::NullPointer, "null pointer");
        }
        let g = &(*graph).inner;
        let budget = if budget_secs == 0 {
            Budget::unlimited()
        } else {
            Budget::from_secs(budget_secs)
        };
        let result = if total {
            exact_total_domination_number(g, &budget)
        } else {
            exact_domination_number(g, &budget)
        };
        let witness: Option<Vec<String>> = result
            .witness
            .as_ref()
            .map(|w| w.iter().map(|v| g.label(v)).collect());
        let doc = serde_json::json!({
            "kind": if total { "total_domination" } else { "domination" },
            "value": result.value,
            "exists": result.exists,
            "method": match result.method {
                cgdom::SolveMethod::Exact => "exact",
                cgdom::SolveMethod::GreedyUpperOnly => "greedy_upper_only",
                cgdom::SolveMethod::Formula => "formula",
            },
            "lower_bound": result.lower_bound,
            "upper_bound": result.upper_bound,
            "node_count": result.node_count,
            "witness": witness,
        });
        give_string(out, serde_json::to_string_pretty(&doc).expect("json"))
    })
}

/// Runs the whole theorem suite for one group and returns the report as JSON
/// (the same shape the CLI's verify report uses per group).
///
/// # Safety
/// `group` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_group_suite_json(
    group: *const CgdomGroup,
    budget_secs: u64,
    out: *mut *mut c_char,
) -> CgdomStatus {
    guarded(|| {
        if group.is_null() || out.is_null() {
            return fail(CgdomStatus::NullPointer, "null pointer");
        }
        let budget = if budget_secs == 0 {
            Budget::unlimited()
        } else {
            Budget::from_secs(budget_secs)
        };
        let report = verify::run_theorem_suite(&(*group).inner, &budget);
        match serde_json::to_string_pretty(&report) {
            Ok(text) => give_string(out, text),
            Err(e) => fail(CgdomStatus::Internal, e.to_string()),
        }
    })
}

/// Evaluates a parameterized closed-form prediction. `id` is one of suzuki,
/// pq, p4, pgl2, psl2, spectrum; `params` is the space-separated integer
/// parameter list (for example id = "pq", params = "3 7").
///
/// # Safety
/// `id`, `params` and `out` must be valid pointers; free the result with
/// `cgdom_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cgdom_formula_json(
    id: *const c_char,
    params: *const c_char,
    out: *mut *mut c_char,
) -> CgdomStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CgdomStatus::NullPointer, "null out pointer");
        }
        let id = match read_utf8(id) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let params = match read_utf8(params) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let numbers: Result<Vec<u64>, _> = params
            .split_whitespace()
            .map(|t| t.parse::<u64>())
            .collect();
        let Ok(numbers) = numbers else {
            return fail(CgdomStatus::InvalidArgument, format!("bad parameters '{params}'"));
        };
        let need = |count: usize| -> Result<(), CgdomStatus> {
            if numbers.len() < count {
                Err(fail(
                    CgdomStatus::InvalidArgument,
                    format!("{id} needs {count} parameter(s)"),
                ))
            } else {
                Ok(())
            }
        };
        let to_json = |preds: &[&formulas::FormulaPrediction]| -> String {
            serde_json::to_string_pretty(preds).expect("json")
        };
        let rendered = match id {
            "suzuki" => {
                if let Err(s) = need(1) {
                    return s;
                }
                match formulas::suzuki_gamma(numbers[0] as u32) {
                    Ok(eval) => serde_json::to_string_pretty(&eval).expect("json"),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            "pq" => {
                if let Err(s) = need(2) {
                    return s;
                }
                match formulas::pq_gamma(numbers[0], numbers[1]) {
                    Ok(p) => to_json(&[&p.gamma, &p.gamma_t]),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            "p4" => {
                if let Err(s) = need(2) {
                    return s;
                }
                match formulas::p4_gamma(numbers[0], numbers[1] as u32) {
                    Ok((g, gt)) => to_json(&[&g, &gt]),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            "pgl2" => {
                if let Err(s) = need(2) {
                    return s;
                }
                match formulas::pgl2_gamma(numbers[0], numbers[1] as u32) {
                    Ok((g, gt)) => to_json(&[&g, &gt]),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            "psl2" => {
                if let Err(s) = need(1) {
                    return s;
                }
                match formulas::psl2_gamma_t(numbers[0]) {
                    Ok(p) => to_json(&[&p]),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            "spectrum" => {
                if let Err(s) = need(1) {
                    return s;
                }
                match formulas::ratio_spectrum_witness(numbers[0]) {
                    Ok((spec, ratio)) => serde_json::json!({
                        "group": spec.descriptor(),
                        "ratio": format!("{}/{}", ratio.numer(), ratio.denom()),
                    })
                    .to_string(),
                    Err(e) => return fail(CgdomStatus::NotApplicable, e.to_string()),
                }
            }
            other => {
                return fail(CgdomStatus::InvalidArgument, format!("unknown formula id '{other}'"))
            }
        };
        give_string(out, rendered)
    })
}
