//! C ABI over the lcec library.
//!
//! Graphs and results are opaque heap handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call
//! returns an [`LcecStatus`] code; on failure a message is available from
//! [`lcec_last_error`] on the same thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcec::aux::{count_colourings, recognize, verify_locally_complete, EdgeColouring, RecognitionResult};
use lcec::graph::{parse_graph, Graph};
use lcec::kaleidoscope::extract_kaleidoscope;
use lcec::structure::structural_recognize;

/// Status codes returned by every fallible function.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcecStatus {
    Ok = 0,
    NullPointer = -1,
    InvalidUtf8 = -2,
    ParseError = -3,
    InvalidArgument = -4,
    Internal = -5,
    Panic = -6,
}

/// An undirected simple graph.
pub struct LcecGraph(Graph);

/// Outcome of recognition: a colouring or a non-colourability certificate.
pub struct LcecResult {
    colourable: bool,
    colours: Vec<u8>,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn guard(f: impl FnOnce() -> Result<(), (LcecStatus, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcecStatus::Ok as i32,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status as i32
        }
        Err(_) => {
            set_error("panic inside lcec");
            LcecStatus::Panic as i32
        }
    }
}

fn null() -> (LcecStatus, String) {
    (LcecStatus::NullPointer, "null pointer argument".into())
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn lcec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the edge-list text format into a new graph.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_parse(text: *const c_char, out: *mut *mut LcecGraph) -> i32 {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| (LcecStatus::InvalidUtf8, e.to_string()))?;
        let parsed = parse_graph(text).map_err(|e| (LcecStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(LcecGraph(parsed.graph)));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be null when
/// `m == 0`) and `out` must be valid for one handle.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut LcecGraph,
) -> i32 {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return Err(null());
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(n, &pairs).map_err(|e| (LcecStatus::InvalidArgument, e.to_string()))?;
        *out = Box::into_raw(Box::new(LcecGraph(g)));
        Ok(())
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_vertex_count(g: *const LcecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle. Edge ids run over `0..m` in
/// input order, duplicates removed.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_edge_count(g: *const LcecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Writes the endpoints of edge `id`.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_edge(g: *const LcecGraph, id: usize, u: *mut usize, v: *mut usize) -> i32 {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        if u.is_null() || v.is_null() {
            return Err(null());
        }
        if id >= g.0.m() {
            return Err((LcecStatus::InvalidArgument, format!("edge {id} out of range")));
        }
        let (a, b) = g.0.edge(id);
        *u = a;
        *v = b;
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcec_graph_free(g: *mut LcecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Runs the auxiliary-graph recognizer.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for one handle.
#[no_mangle]
pub unsafe extern "C" fn lcec_recognize(g: *const LcecGraph, out: *mut *mut LcecResult) -> i32 {
    guard(|| {
        let g = &g.as_ref().ok_or_else(null)?.0;
        if out.is_null() {
            return Err(null());
        }
        let r = recognize(g);
        let mut json = serde_json::to_value(r.to_json(g)).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
        json["count"] = serde_json::json!(count_colourings(g).to_string());
        let (colourable, colours) = match &r {
            RecognitionResult::Colourable(c) => (true, c.colours().to_vec()),
            RecognitionResult::NotColourable(cycle) => {
                let kal = extract_kaleidoscope(g, cycle).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
                json["kaleidoscope"] = serde_json::to_value(kal).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
                (false, Vec::new())
            }
        };
        let json = CString::new(json.to_string()).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
        *out = Box::into_raw(Box::new(LcecResult { colourable, colours, json }));
        Ok(())
    })
}

/// 1 when the graph is colourable, 0 when not, negative status on error.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcec_result_is_colourable(r: *const LcecResult) -> i32 {
    match r.as_ref() {
        Some(r) => r.colourable as i32,
        None => {
            set_error("null pointer argument");
            LcecStatus::NullPointer as i32
        }
    }
}

/// Colour (1 or 2) of edge `id` in the colouring of a colourable result.
///
/// # Safety
/// `r` must be a live result handle and `colour` writable.
#[no_mangle]
pub unsafe extern "C" fn lcec_result_colour(r: *const LcecResult, id: usize, colour: *mut u8) -> i32 {
    guard(|| {
        let r = r.as_ref().ok_or_else(null)?;
        if colour.is_null() {
            return Err(null());
        }
        let c = r.colours.get(id).ok_or((LcecStatus::InvalidArgument, format!("no colour for edge {id}")))?;
        *colour = *c;
        Ok(())
    })
}

/// JSON document of the result: status, colouring or odd cycle, count and
/// (when not colourable) the kaleidoscope. Owned by the result.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn lcec_result_json(r: *const LcecResult) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Releases a result. Null is ignored.
///
/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcec_result_free(r: *mut LcecResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Checks a colouring given as one colour per edge id. Writes 1 to `valid`
/// when locally complete, else 0.
///
/// # Safety
/// `g` must be a live graph handle, `colours` must point to `len`
/// readable bytes and `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcec_verify_colouring(
    g: *const LcecGraph,
    colours: *const u8,
    len: usize,
    valid: *mut i32,
) -> i32 {
    guard(|| {
        let g = &g.as_ref().ok_or_else(null)?.0;
        if valid.is_null() || (colours.is_null() && len > 0) {
            return Err(null());
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(colours, len) };
        let c = EdgeColouring::new(slice.to_vec()).map_err(|e| (LcecStatus::InvalidArgument, e.to_string()))?;
        let v = verify_locally_complete(g, &c).map_err(|e| (LcecStatus::InvalidArgument, e.to_string()))?;
        *valid = v.is_none() as i32;
        Ok(())
    })
}

/// Runs the structural dispatcher and returns its report as a newly
/// allocated JSON string, released with [`lcec_string_free`].
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lcec_structural_json(g: *const LcecGraph, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let g = &g.as_ref().ok_or_else(null)?.0;
        if out.is_null() {
            return Err(null());
        }
        let report = structural_recognize(g).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
        let json = serde_json::to_string(&report).map_err(|e| (LcecStatus::Internal, e.to_string()))?;
        *out = CString::new(json).map_err(|e| (LcecStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Releases a string allocated by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
