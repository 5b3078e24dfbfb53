//! C ABI over `zf-core`.
//!
//! Graphs, decompositions and results are opaque handles created by the
//! library and released with the matching `*_free` function. Every fallible
//! call returns a [`ZfStatus`]; on failure a description is available from
//! [`zf_last_error`] on the same thread until the next failing call.
//! Vertex ids are `size_t`. Borrowed pointers handed out by a handle stay
//! valid until that handle is freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zf_core::approx::verify_result;
use zf_core::certificate::{solve, Certificate, DecompositionSource, SolveError};
use zf_core::decomposition::{
    exact_pathwidth_limited, parse_decomposition, DecompositionError, PathDecomposition, EXACT_PATHWIDTH_MAX_N,
};
use zf_core::forcing::is_zero_forcing_set;
use zf_core::graph::{parse_graph, Graph, VertexSet};
use zf_core::oracles::{exact_z, OracleBudget};

/// Status codes. The numeric values of the first six match the exit codes
/// of the `zf` command line tool.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfStatus {
    Ok = 0,
    VerificationFailed = 1,
    ParseError = 2,
    InvalidDecomposition = 3,
    Internal = 4,
    BudgetExceeded = 5,
    NullPointer = 6,
    InvalidArgument = 7,
}

pub struct ZfGraph {
    graph: Graph,
}

pub struct ZfDecomposition {
    pd: PathDecomposition,
}

pub struct ZfResult {
    s: Vec<usize>,
    forts: Vec<Vec<usize>>,
    /// Arcs flattened as `tail, head` pairs.
    arcs: Vec<usize>,
    width: usize,
    certificate: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: ZfStatus, message: impl Into<String>) -> ZfStatus {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("nul bytes removed"));
    status
}

/// Runs `f`, turning a panic into [`ZfStatus::Internal`].
fn guard(f: impl FnOnce() -> ZfStatus) -> ZfStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ZfStatus::Internal, "internal panic"))
}

unsafe fn bytes<'a>(data: *const u8, len: usize) -> Option<&'a [u8]> {
    if data.is_null() {
        return if len == 0 { Some(&[]) } else { None };
    }
    Some(std::slice::from_raw_parts(data, len))
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Description of the last failure on this thread, or an empty string.
/// The pointer is valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn zf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn zf_status_name(status: ZfStatus) -> *const c_char {
    let name: &'static CStr = match status {
        ZfStatus::Ok => c"ok",
        ZfStatus::VerificationFailed => c"verification failed",
        ZfStatus::ParseError => c"parse error",
        ZfStatus::InvalidDecomposition => c"invalid decomposition",
        ZfStatus::Internal => c"internal error",
        ZfStatus::BudgetExceeded => c"size limit exceeded",
        ZfStatus::NullPointer => c"null pointer",
        ZfStatus::InvalidArgument => c"invalid argument",
    };
    name.as_ptr()
}

/// Parses a graph in edge-list format (`n m` header, then `m` lines `u v`).
///
/// # Safety
/// `text` must point to `len` readable bytes and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_parse(text: *const u8, len: usize, out: *mut *mut ZfGraph) -> ZfStatus {
    guard(|| {
        let Some(text) = bytes(text, len) else { return fail(ZfStatus::NullPointer, "text is null") };
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "out is null");
        }
        match parse_graph(text) {
            Ok(graph) => {
                store(out, ZfGraph { graph });
                ZfStatus::Ok
            }
            Err(e) => fail(ZfStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable ids and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        if (edges.is_null() && m > 0) || out.is_null() {
            return fail(ZfStatus::NullPointer, "edges or out is null");
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        match Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))) {
            Ok(graph) => {
                store(out, ZfGraph { graph });
                ZfStatus::Ok
            }
            Err(e) => fail(ZfStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_free(graph: *mut ZfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_vertex_count(graph: *const ZfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_edge_count(graph: *const ZfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.m())
}

/// Parses and validates a path decomposition of `graph` (one bag per line).
///
/// # Safety
/// `graph` must be a live handle, `text` must point to `len` readable bytes
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_decomposition_parse(
    graph: *const ZfGraph,
    text: *const u8,
    len: usize,
    out: *mut *mut ZfDecomposition,
) -> ZfStatus {
    guard(|| {
        let (Some(g), Some(text)) = (graph.as_ref(), bytes(text, len)) else {
            return fail(ZfStatus::NullPointer, "graph or text is null");
        };
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "out is null");
        }
        match parse_decomposition(text, &g.graph) {
            Ok(pd) => {
                store(out, ZfDecomposition { pd });
                ZfStatus::Ok
            }
            Err(e) => fail(decomposition_status(&e), e.to_string()),
        }
    })
}

fn decomposition_status(e: &DecompositionError) -> ZfStatus {
    match e {
        DecompositionError::MalformedLine { .. } | DecompositionError::EmptyBag { .. } | DecompositionError::UnsortedBag { .. } => {
            ZfStatus::ParseError
        }
        DecompositionError::TooLarge { .. } => ZfStatus::BudgetExceeded,
        _ => ZfStatus::InvalidDecomposition,
    }
}

/// Minimum-width decomposition, for graphs of at most 12 vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_decomposition_exact(graph: *const ZfGraph, out: *mut *mut ZfDecomposition) -> ZfStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else { return fail(ZfStatus::NullPointer, "graph is null") };
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "out is null");
        }
        match exact_pathwidth_limited(&g.graph, EXACT_PATHWIDTH_MAX_N) {
            Ok((_, pd)) => {
                store(out, ZfDecomposition { pd });
                ZfStatus::Ok
            }
            Err(e) => fail(decomposition_status(&e), e.to_string()),
        }
    })
}

/// Width of a decomposition, or 0 for a null handle.
///
/// # Safety
/// `pd` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_decomposition_width(pd: *const ZfDecomposition) -> usize {
    pd.as_ref().map_or(0, |d| d.pd.width())
}

/// # Safety
/// `pd` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_decomposition_free(pd: *mut ZfDecomposition) {
    if !pd.is_null() {
        drop(Box::from_raw(pd));
    }
}

/// Runs the approximation on every component and self-verifies the result.
/// With a null `pd`, components of at most 12 vertices are decomposed
/// exactly.
///
/// # Safety
/// `graph` must be a live handle, `pd` null or a live decomposition of that
/// graph, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_solve(graph: *const ZfGraph, pd: *const ZfDecomposition, out: *mut *mut ZfResult) -> ZfStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else { return fail(ZfStatus::NullPointer, "graph is null") };
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "out is null");
        }
        let source = match pd.as_ref() {
            Some(d) => DecompositionSource::Given(&d.pd),
            None => DecompositionSource::Exact { max_n: EXACT_PATHWIDTH_MAX_N },
        };
        let sol = match solve(&g.graph, source) {
            Ok(sol) => sol,
            Err(e) => {
                let status = match &e {
                    SolveError::Decomposition(d) => decomposition_status(d),
                    SolveError::TooLarge { .. } => ZfStatus::BudgetExceeded,
                    SolveError::Approx(_) | SolveError::Verification(_) => ZfStatus::Internal,
                };
                return fail(status, e.to_string());
            }
        };
        let certificate = CString::new(Certificate::new(&g.graph, &sol).to_json()).expect("JSON has no nul bytes");
        let r = sol.result;
        store(
            out,
            ZfResult {
                s: r.s.into_vec(),
                forts: r.packing.forts.into_iter().map(VertexSet::into_vec).collect(),
                arcs: r.fas.arcs().iter().flat_map(|&(u, v)| [u, v]).collect(),
                width: r.width_used,
                certificate,
            },
        );
        ZfStatus::Ok
    })
}

/// # Safety
/// `result` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_result_free(result: *mut ZfResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Borrowed view of the zero forcing set, ascending.
///
/// # Safety
/// `result` must be a live handle; `data` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_result_zero_forcing_set(
    result: *const ZfResult,
    data: *mut *const usize,
    len: *mut usize,
) -> ZfStatus {
    let Some(r) = result.as_ref() else { return fail(ZfStatus::NullPointer, "result is null") };
    view(&r.s, data, len)
}

/// Number of forts in the packing.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_result_fort_count(result: *const ZfResult) -> usize {
    result.as_ref().map_or(0, |r| r.forts.len())
}

/// Borrowed view of fort `index`, ascending.
///
/// # Safety
/// `result` must be a live handle; `data` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_result_fort(
    result: *const ZfResult,
    index: usize,
    data: *mut *const usize,
    len: *mut usize,
) -> ZfStatus {
    let Some(r) = result.as_ref() else { return fail(ZfStatus::NullPointer, "result is null") };
    match r.forts.get(index) {
        Some(f) => view(f, data, len),
        None => fail(ZfStatus::InvalidArgument, format!("fort index {index} out of range")),
    }
}

/// Borrowed view of the forcing arc set as `tail, head` pairs; `len`
/// receives the number of arcs.
///
/// # Safety
/// `result` must be a live handle; `data` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_result_arcs(result: *const ZfResult, data: *mut *const usize, len: *mut usize) -> ZfStatus {
    let Some(r) = result.as_ref() else { return fail(ZfStatus::NullPointer, "result is null") };
    let status = view(&r.arcs, data, len);
    if status == ZfStatus::Ok {
        *len /= 2;
    }
    status
}

/// Width of the decomposition the result was computed from.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_result_width(result: *const ZfResult) -> usize {
    result.as_ref().map_or(0, |r| r.width)
}

/// The result's certificate as a NUL-terminated JSON document, or null for
/// a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_result_certificate(result: *const ZfResult) -> *const c_char {
    result.as_ref().map_or(ptr::null(), |r| r.certificate.as_ptr())
}

unsafe fn view(items: &[usize], data: *mut *const usize, len: *mut usize) -> ZfStatus {
    if data.is_null() || len.is_null() {
        return fail(ZfStatus::NullPointer, "data or len is null");
    }
    *data = items.as_ptr();
    *len = items.len();
    ZfStatus::Ok
}

/// Checks a certificate against `graph`. Returns `Ok` when every claim
/// holds, `VerificationFailed` when one does not (the report is then in
/// [`zf_last_error`]) and `ParseError` for a malformed certificate.
///
/// # Safety
/// `graph` must be a live handle and `json` must point to `len` readable
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn zf_verify_certificate(graph: *const ZfGraph, json: *const u8, len: usize) -> ZfStatus {
    guard(|| {
        let (Some(g), Some(json)) = (graph.as_ref(), bytes(json, len)) else {
            return fail(ZfStatus::NullPointer, "graph or json is null");
        };
        let cert = match Certificate::from_json(json) {
            Ok(c) => c,
            Err(e) => return fail(ZfStatus::ParseError, e.to_string()),
        };
        let result = match cert.to_result(&g.graph) {
            Ok(r) => r,
            Err(e) => return fail(ZfStatus::ParseError, e.to_string()),
        };
        if !cert.matches_graph(&g.graph) {
            return fail(ZfStatus::VerificationFailed, "certificate is for a different graph");
        }
        let report = verify_result(&g.graph, &result);
        if report.all_passed() {
            ZfStatus::Ok
        } else {
            fail(ZfStatus::VerificationFailed, report.to_string())
        }
    })
}

/// Whether `set` (of `len` ids) forces the whole graph.
///
/// # Safety
/// `graph` must be a live handle, `set` must point to `len` readable ids
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_zero_forcing_set(
    graph: *const ZfGraph,
    set: *const usize,
    len: usize,
    out: *mut bool,
) -> ZfStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else { return fail(ZfStatus::NullPointer, "graph is null") };
        if (set.is_null() && len > 0) || out.is_null() {
            return fail(ZfStatus::NullPointer, "set or out is null");
        }
        let ids = if len == 0 { &[][..] } else { std::slice::from_raw_parts(set, len) };
        let s = VertexSet::from(ids.to_vec());
        if let Err(e) = g.graph.check_vertex_set(&s) {
            return fail(ZfStatus::InvalidArgument, e.to_string());
        }
        *out = is_zero_forcing_set(&g.graph, &s);
        ZfStatus::Ok
    })
}

/// Exact zero forcing number, for graphs of at most 16 vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_exact_zero_forcing_number(graph: *const ZfGraph, out: *mut usize) -> ZfStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else { return fail(ZfStatus::NullPointer, "graph is null") };
        if out.is_null() {
            return fail(ZfStatus::NullPointer, "out is null");
        }
        match exact_z(&g.graph, &OracleBudget::default()) {
            Ok((z, _)) => {
                *out = z;
                ZfStatus::Ok
            }
            Err(e) => fail(ZfStatus::BudgetExceeded, e.to_string()),
        }
    })
}
