//! C ABI over `stl-core`.
//!
//! Every function returns an [`StlStatus`]; results come back through out
//! pointers. On failure, [`stl_last_error_message`] describes the error for
//! the calling thread.
//!
//! Ownership:
//! * handles from `stl_digraph_*` constructors are freed with [`stl_digraph_free`];
//! * reports from [`stl_search`] are freed with [`stl_report_free`];
//! * strings written to `char **` out pointers are freed with [`stl_string_free`].
//!
//! Handles are not thread-safe for concurrent mutation, but read-only calls
//! may share a handle across threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stl_core::closed_forms::Quantity;
use stl_core::cycles::find_cycle_of_length;
use stl_core::invariants::{c2, first_zagreb, laplacian_energy, trace_l_squared};
use stl_core::io::{parse_arclist, render_arclist, to_json};
use stl_core::search::{
    are_isomorphic, search_extremal, ExtremalSearchReport, Objective, Scope, SearchConfig,
};
use stl_core::{Digraph, Error, FamilySpec};

/// Opaque digraph handle.
pub struct StlDigraph(Digraph);

/// Opaque search report handle.
pub struct StlSearchReport(ExtremalSearchReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Capacity = 3,
    Parse = 4,
    InvalidUtf8 = 5,
    Overflow = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

pub type StlObjective = u32;
pub const STL_OBJECTIVE_LE: StlObjective = 0;
pub const STL_OBJECTIVE_M1: StlObjective = 1;
pub const STL_OBJECTIVE_ARCS: StlObjective = 2;

pub type StlScope = u32;
pub const STL_SCOPE_ALL: StlScope = 0;
pub const STL_SCOPE_CONNECTED_ONLY: StlScope = 1;

pub type StlQuantity = u32;
pub const STL_QUANTITY_EX_LE: StlQuantity = 0;
pub const STL_QUANTITY_EX_ARCS: StlQuantity = 1;
pub const STL_QUANTITY_EX_M1: StlQuantity = 2;
pub const STL_QUANTITY_EX_CLIQUE: StlQuantity = 3;
pub const STL_QUANTITY_EX_COMPLETE_DIGRAPH: StlQuantity = 4;
pub const STL_QUANTITY_EX_TOURNAMENT: StlQuantity = 5;

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StlInvariants {
    pub le: i64,
    pub m1: i64,
    pub c2: i64,
    pub e: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StlExactValue {
    pub value: i64,
    pub numerator: i64,
    pub denominator: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(StlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Capacity { .. } | Error::SearchCap { .. } => StlStatus::Capacity,
            Error::Parse { .. } | Error::UnknownTag(_) => StlStatus::Parse,
            _ => StlStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(StlStatus::NullPointer, format!("{what} is null"))
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> StlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(String::new());
            StlStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("panic: {message}"));
            StlStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(StlStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Failure(StlStatus::InvalidArgument, e.to_string()))
}

fn boxed(g: Digraph) -> *mut StlDigraph {
    Box::into_raw(Box::new(StlDigraph(g)))
}

fn narrow(v: i128, what: &str) -> Result<i64, Failure> {
    i64::try_from(v).map_err(|_| {
        Failure(
            StlStatus::Overflow,
            format!("{what} does not fit in 64 bits"),
        )
    })
}

/// Message for the most recent failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn stl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Empty digraph on `n` vertices.
///
/// # Safety
/// `out_graph` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_new(n: usize, out_graph: *mut *mut StlDigraph) -> StlStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        *slot = boxed(Digraph::empty(n)?);
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_free(g: *mut StlDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle not used concurrently.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_add_arc(g: *mut StlDigraph, u: usize, v: usize) -> StlStatus {
    guard(|| {
        let handle = out(g, "g")?;
        handle.0 = handle.0.with_arc(u, v)?;
        Ok(())
    })
}

/// Builds a family member from its spec string, e.g. `fnk:n=5,k=3,s=2`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_from_family(
    spec: *const c_char,
    out_graph: *mut *mut StlDigraph,
) -> StlStatus {
    guard(|| {
        let spec: FamilySpec = read_str(spec, "spec")?.parse()?;
        let g = spec.build()?;
        *out(out_graph, "out_graph")? = boxed(g);
        Ok(())
    })
}

/// # Safety
/// `text` must be a NUL-terminated string; `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_parse_arclist(
    text: *const c_char,
    out_graph: *mut *mut StlDigraph,
) -> StlStatus {
    guard(|| {
        let g = parse_arclist(read_str(text, "text")?)?;
        *out(out_graph, "out_graph")? = boxed(g);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out_text` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_to_arclist(
    g: *const StlDigraph,
    out_text: *mut *mut c_char,
) -> StlStatus {
    guard(|| {
        let text = render_arclist(&borrow(g, "g")?.0);
        *out(out_text, "out_text")? = into_c_string(text)?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; the out pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_digraph_size(
    g: *const StlDigraph,
    out_n: *mut usize,
    out_e: *mut usize,
) -> StlStatus {
    guard(|| {
        let g = &borrow(g, "g")?.0;
        *out(out_n, "out_n")? = g.order();
        *out(out_e, "out_e")? = g.arc_count();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out_inv` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_invariants(
    g: *const StlDigraph,
    out_inv: *mut StlInvariants,
) -> StlStatus {
    guard(|| {
        let g = &borrow(g, "g")?.0;
        *out(out_inv, "out_inv")? = StlInvariants {
            le: laplacian_energy(g),
            m1: first_zagreb(g),
            c2: c2(g),
            e: g.arc_count() as i64,
        };
        Ok(())
    })
}

/// `trace(L²)` by explicit matrix multiplication.
///
/// # Safety
/// `g` must be a live handle; `out_trace` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_trace_l_squared(
    g: *const StlDigraph,
    out_trace: *mut i64,
) -> StlStatus {
    guard(|| {
        *out(out_trace, "out_trace")? = trace_l_squared(&borrow(g, "g")?.0);
        Ok(())
    })
}

/// Writes the outdegree of each vertex, by label, into `buf[0..n]`.
///
/// # Safety
/// `g` must be a live handle; `buf` valid for `buf_len` writes.
#[no_mangle]
pub unsafe extern "C" fn stl_out_degrees(
    g: *const StlDigraph,
    buf: *mut u32,
    buf_len: usize,
) -> StlStatus {
    guard(|| {
        let g = &borrow(g, "g")?.0;
        if buf.is_null() {
            return Err(null("buf"));
        }
        if buf_len < g.order() {
            return Err(Failure(
                StlStatus::BufferTooSmall,
                format!("need {} entries, got {buf_len}", g.order()),
            ));
        }
        let dst = std::slice::from_raw_parts_mut(buf, g.order());
        for (slot, d) in dst.iter_mut().zip(g.out_degrees()) {
            *slot = d as u32;
        }
        Ok(())
    })
}

/// Looks for a directed cycle of exactly `len` vertices. On success
/// `*out_found` says whether one exists; if so its vertices, in cycle order,
/// are written to `buf[0..len]`.
///
/// # Safety
/// `g` must be a live handle; `out_found` valid for writes; `buf` valid for
/// `buf_len` writes.
#[no_mangle]
pub unsafe extern "C" fn stl_find_cycle(
    g: *const StlDigraph,
    len: usize,
    out_found: *mut bool,
    buf: *mut u32,
    buf_len: usize,
) -> StlStatus {
    guard(|| {
        let g = &borrow(g, "g")?.0;
        let found = out(out_found, "out_found")?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        if buf_len < len {
            return Err(Failure(
                StlStatus::BufferTooSmall,
                format!("need {len} entries, got {buf_len}"),
            ));
        }
        *found = false;
        if let Some(cycle) = find_cycle_of_length(g, len)? {
            let dst = std::slice::from_raw_parts_mut(buf, len);
            for (slot, &v) in dst.iter_mut().zip(cycle.vertices()) {
                *slot = v as u32;
            }
            *found = true;
        }
        Ok(())
    })
}

/// # Safety
/// `g` and `h` must be live handles; `out_iso` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_are_isomorphic(
    g: *const StlDigraph,
    h: *const StlDigraph,
    out_iso: *mut bool,
) -> StlStatus {
    guard(|| {
        let iso = are_isomorphic(&borrow(g, "g")?.0, &borrow(h, "h")?.0)?;
        *out(out_iso, "out_iso")? = iso;
        Ok(())
    })
}

/// Exact closed-form value. `k` is ignored for `STL_QUANTITY_EX_M1`.
///
/// # Safety
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_formula(
    quantity: StlQuantity,
    n: usize,
    k: usize,
    out_value: *mut StlExactValue,
) -> StlStatus {
    guard(|| {
        let q = match quantity {
            STL_QUANTITY_EX_LE => Quantity::ExLe,
            STL_QUANTITY_EX_ARCS => Quantity::ExArcs,
            STL_QUANTITY_EX_M1 => Quantity::ExM1,
            STL_QUANTITY_EX_CLIQUE => Quantity::ExClique,
            STL_QUANTITY_EX_COMPLETE_DIGRAPH => Quantity::ExCompleteDigraph,
            STL_QUANTITY_EX_TOURNAMENT => Quantity::ExTournament,
            other => {
                return Err(Failure(
                    StlStatus::InvalidArgument,
                    format!("unknown quantity {other}"),
                ))
            }
        };
        let v = q.evaluate(n, k)?;
        *out(out_value, "out_value")? = StlExactValue {
            value: v.value,
            numerator: narrow(v.numerator, "numerator")?,
            denominator: narrow(v.denominator, "denominator")?,
        };
        Ok(())
    })
}

/// Exhaustive extremal search. `jobs` of 0 means one worker.
///
/// # Safety
/// `out_report` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_search(
    n: usize,
    forbidden_len: usize,
    objective: StlObjective,
    scope: StlScope,
    jobs: usize,
    out_report: *mut *mut StlSearchReport,
) -> StlStatus {
    guard(|| {
        let objective = match objective {
            STL_OBJECTIVE_LE => Objective::Le,
            STL_OBJECTIVE_M1 => Objective::M1,
            STL_OBJECTIVE_ARCS => Objective::Arcs,
            other => {
                return Err(Failure(
                    StlStatus::InvalidArgument,
                    format!("unknown objective {other}"),
                ))
            }
        };
        let scope = match scope {
            STL_SCOPE_ALL => Scope::All,
            STL_SCOPE_CONNECTED_ONLY => Scope::ConnectedOnly,
            other => {
                return Err(Failure(
                    StlStatus::InvalidArgument,
                    format!("unknown scope {other}"),
                ))
            }
        };
        let slot = out(out_report, "out_report")?;
        let config = SearchConfig::new(n, forbidden_len, objective)
            .scope(scope)
            .jobs(jobs.max(1));
        *slot = Box::into_raw(Box::new(StlSearchReport(search_extremal(&config)?)));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from [`stl_search`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stl_report_free(report: *mut StlSearchReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle; the out pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_report_summary(
    report: *const StlSearchReport,
    out_max_value: *mut i64,
    out_witness_count: *mut usize,
) -> StlStatus {
    guard(|| {
        let r = &borrow(report, "report")?.0;
        *out(out_max_value, "out_max_value")? = r.max_value;
        *out(out_witness_count, "out_witness_count")? = r.witnesses.len();
        Ok(())
    })
}

/// Copies witness `index` (in canonical order) into a new digraph handle.
///
/// # Safety
/// `report` must be a live handle; `out_graph` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_report_witness(
    report: *const StlSearchReport,
    index: usize,
    out_graph: *mut *mut StlDigraph,
) -> StlStatus {
    guard(|| {
        let r = &borrow(report, "report")?.0;
        let w = r.witnesses.get(index).ok_or_else(|| {
            Failure(
                StlStatus::InvalidArgument,
                format!("witness {index} of {}", r.witnesses.len()),
            )
        })?;
        *out(out_graph, "out_graph")? = boxed(w.digraph.clone());
        Ok(())
    })
}

/// The report as JSON. With `include_timing` false, `elapsed_ms` is written
/// as 0 so the text is reproducible.
///
/// # Safety
/// `report` must be a live handle; `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stl_report_to_json(
    report: *const StlSearchReport,
    include_timing: bool,
    out_json: *mut *mut c_char,
) -> StlStatus {
    guard(|| {
        let r = &borrow(report, "report")?.0;
        let text = if include_timing {
            to_json(r)
        } else {
            let mut copy = r.clone();
            copy.elapsed_ms = 0;
            to_json(&copy)
        };
        *out(out_json, "out_json")? = into_c_string(text)?;
        Ok(())
    })
}
