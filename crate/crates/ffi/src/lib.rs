//! C ABI for `eccx`.
//!
//! Conventions:
//! - Every fallible function returns an [`EccxStatus`]; `ECCX_STATUS_OK` is 0.
//! - On failure a thread-local message is available from
//!   [`eccx_last_error_message`] until the next failing call on that thread.
//! - Handles (`EccxGraph`, `EccxSpectrum`) and strings returned through `out`
//!   pointers are owned by the caller and released with the matching
//!   `_free` function. Passing NULL to a `_free` function is a no-op.
//! - Panics never cross the boundary; they surface as `ECCX_STATUS_PANIC`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use eccx::graph::{self, Family, Graph};
use eccx::linalg::{self, Spectrum};
use eccx::theorems::{self, Theorem};
use eccx::{metrics, Error};

/// Result codes shared by every function in this library.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EccxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Input = 4,
    Parameter = 5,
    Structure = 6,
    Disconnected = 7,
    Hypothesis = 8,
    Numeric = 9,
    Contract = 10,
    Partition = 11,
    BufferTooSmall = 12,
    IndexOutOfRange = 13,
    Panic = 14,
}

/// Named graph families for [`eccx_graph_family`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EccxFamily {
    Complete = 0,
    CompleteBipartite = 1,
    Cycle = 2,
    Path = 3,
    Star = 4,
    Petersen = 5,
    Prism = 6,
}

/// Opaque immutable graph.
pub struct EccxGraph {
    inner: Graph,
}

/// Opaque grouped spectrum.
pub struct EccxSpectrum {
    inner: Spectrum,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn fail(status: EccxStatus, message: &str) -> EccxStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> EccxStatus {
    match e {
        Error::Parameter(_) => EccxStatus::Parameter,
        Error::Parse { .. } => EccxStatus::Parse,
        Error::Input(_) => EccxStatus::Input,
        Error::Structure(_) => EccxStatus::Structure,
        Error::Disconnected => EccxStatus::Disconnected,
        Error::Contract(_) => EccxStatus::Contract,
        Error::Numeric(_) => EccxStatus::Numeric,
        Error::Partition { .. } => EccxStatus::Partition,
        Error::Hypothesis(_) => EccxStatus::Hypothesis,
    }
}

type FfiResult<T> = Result<T, EccxStatus>;

impl From<Error> for EccxStatus {
    fn from(e: Error) -> Self {
        fail(status_of(&e), &e.to_string())
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> EccxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EccxStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EccxStatus::Panic, "internal panic"),
    }
}

unsafe fn graph_ref<'a>(g: *const EccxGraph) -> FfiResult<&'a Graph> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(EccxStatus::NullPointer, "graph handle is NULL"))
}

unsafe fn spectrum_ref<'a>(s: *const EccxSpectrum) -> FfiResult<&'a Spectrum> {
    s.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(EccxStatus::NullPointer, "spectrum handle is NULL"))
}

unsafe fn text<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(fail(EccxStatus::NullPointer, "string argument is NULL"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(EccxStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(fail(EccxStatus::NullPointer, "output pointer is NULL"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut EccxGraph, g: Graph) -> FfiResult<()> {
    write(out, Box::into_raw(Box::new(EccxGraph { inner: g })))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|_| fail(EccxStatus::Contract, "string contains NUL"))?;
    write(out, c.into_raw())
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eccx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn eccx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decodes one graph6 line.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_from_graph6(
    text_in: *const c_char,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::parse_graph6(text(text_in)?)?))
}

/// Parses a JSON edge list `{"n": .., "edges": [[i, j], ..]}`.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_from_edge_list_json(
    text_in: *const c_char,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::parse_edge_list(text(text_in)?)?))
}

/// Parses an operand spec such as `C5`, `K3,3`, `L2(prism)` or `g6:A_`.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_from_spec(
    spec: *const c_char,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, eccx::cli::parse_operand(text(spec)?)?))
}

/// Builds a member of a named family from `len` parameters.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_family(
    kind: EccxFamily,
    params: *const usize,
    len: usize,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| {
        let params: &[usize] = if len == 0 {
            &[]
        } else if params.is_null() {
            return Err(fail(EccxStatus::NullPointer, "params is NULL"));
        } else {
            std::slice::from_raw_parts(params, len)
        };
        let kind = match kind {
            EccxFamily::Complete => Family::Complete,
            EccxFamily::CompleteBipartite => Family::CompleteBipartite,
            EccxFamily::Cycle => Family::Cycle,
            EccxFamily::Path => Family::Path,
            EccxFamily::Star => Family::Star,
            EccxFamily::Petersen => Family::Petersen,
            EccxFamily::Prism => Family::Prism,
        };
        put_graph(out, graph::family(kind, params)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_free(g: *mut EccxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_order(g: *const EccxGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// Edge count; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_size(g: *const EccxGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.size())
}

/// graph6 encoding; free with [`eccx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_to_graph6(
    g: *const EccxGraph,
    out: *mut *mut c_char,
) -> EccxStatus {
    guard(|| put_string(out, graph_ref(g)?.to_graph6()))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_complement(
    g: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::complement(graph_ref(g)?)))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_line_graph(
    g: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::line_graph(graph_ref(g)?)))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_subdivision(
    g: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::subdivision(graph_ref(g)?)))
}

/// Disjoint union, vertices of `a` first.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_union(
    a: *const EccxGraph,
    b: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::disjoint_union([graph_ref(a)?, graph_ref(b)?])?))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_join(
    a: *const EccxGraph,
    b: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| put_graph(out, graph::join(graph_ref(a)?, graph_ref(b)?)))
}

/// Subdivision-vertex join; `a` needs at least one edge.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_subdivision_vertex_join(
    a: *const EccxGraph,
    b: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| {
        put_graph(
            out,
            graph::subdivision_vertex_join(graph_ref(a)?, graph_ref(b)?)?,
        )
    })
}

/// Subdivision-edge join; `a` needs at least one edge.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_subdivision_edge_join(
    a: *const EccxGraph,
    b: *const EccxGraph,
    out: *mut *mut EccxGraph,
) -> EccxStatus {
    guard(|| {
        put_graph(
            out,
            graph::subdivision_edge_join(graph_ref(a)?, graph_ref(b)?)?,
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_is_connected(
    g: *const EccxGraph,
    out: *mut bool,
) -> EccxStatus {
    guard(|| write(out, graph_ref(g)?.is_connected()))
}

/// Copies the row-major eccentricity matrix into `buf`. `out_order`
/// receives the order even when `capacity < order²`, in which case
/// `ECCX_STATUS_BUFFER_TOO_SMALL` is returned and `buf` is untouched.
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_epsilon_matrix(
    g: *const EccxGraph,
    buf: *mut i64,
    capacity: usize,
    out_order: *mut usize,
) -> EccxStatus {
    guard(|| {
        let p = metrics::profile(graph_ref(g)?)?;
        let n = p.order();
        write(out_order, n)?;
        if capacity < n * n {
            return Err(fail(
                EccxStatus::BufferTooSmall,
                &format!("need {} entries, got {capacity}", n * n),
            ));
        }
        if buf.is_null() {
            return Err(fail(EccxStatus::NullPointer, "buffer is NULL"));
        }
        let dst = std::slice::from_raw_parts_mut(buf, n * n);
        for (row, chunk) in p.eps_matrix.rows().zip(dst.chunks_mut(n.max(1))) {
            chunk.copy_from_slice(row);
        }
        Ok(())
    })
}

/// Grouped ε-spectrum; free with [`eccx_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_epsilon_spectrum(
    g: *const EccxGraph,
    out: *mut *mut EccxSpectrum,
) -> EccxStatus {
    guard(|| {
        let s = metrics::epsilon_spectrum(graph_ref(g)?)?;
        write(out, Box::into_raw(Box::new(EccxSpectrum { inner: s })))
    })
}

#[no_mangle]
pub unsafe extern "C" fn eccx_graph_is_epsilon_irreducible(
    g: *const EccxGraph,
    out: *mut bool,
) -> EccxStatus {
    guard(|| write(out, metrics::is_epsilon_irreducible(graph_ref(g)?)?))
}

/// ε-Wiener index (half the entry sum of the eccentricity matrix).
#[no_mangle]
pub unsafe extern "C" fn eccx_graph_epsilon_wiener(
    g: *const EccxGraph,
    out: *mut i64,
) -> EccxStatus {
    guard(|| write(out, metrics::epsilon_wiener(graph_ref(g)?)?))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_free(s: *mut EccxSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of distinct eigenvalues; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_len(s: *const EccxSpectrum) -> usize {
    s.as_ref().map_or(0, |h| h.inner.pairs().len())
}

/// The `index`-th (value, multiplicity) pair, values descending.
#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_get(
    s: *const EccxSpectrum,
    index: usize,
    value: *mut f64,
    multiplicity: *mut usize,
) -> EccxStatus {
    guard(|| {
        let &(v, m) = spectrum_ref(s)?.pairs().get(index).ok_or_else(|| {
            fail(
                EccxStatus::IndexOutOfRange,
                &format!("no pair at index {index}"),
            )
        })?;
        write(value, v)?;
        write(multiplicity, m)
    })
}

#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_energy(s: *const EccxSpectrum, out: *mut f64) -> EccxStatus {
    guard(|| write(out, linalg::energy(spectrum_ref(s)?)))
}

#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_is_integral(
    s: *const EccxSpectrum,
    tol: f64,
    out: *mut bool,
) -> EccxStatus {
    guard(|| write(out, linalg::is_integral(spectrum_ref(s)?, tol)))
}

/// JSON array of `{"value", "multiplicity"}`; free with [`eccx_string_free`].
#[no_mangle]
pub unsafe extern "C" fn eccx_spectrum_to_json(
    s: *const EccxSpectrum,
    out: *mut *mut c_char,
) -> EccxStatus {
    guard(|| {
        let json = serde_json_string(spectrum_ref(s)?)?;
        put_string(out, json)
    })
}

fn serde_json_string(s: &Spectrum) -> FfiResult<String> {
    serde_json::to_string(s).map_err(|e| fail(EccxStatus::Contract, &e.to_string()))
}

/// Compares the closed-form ε-spectrum named by `theorem` (for example
/// `"sv-join"`) with the computed one for `count` operands.
#[no_mangle]
pub unsafe extern "C" fn eccx_verify(
    theorem: *const c_char,
    operands: *const *const EccxGraph,
    count: usize,
    tol: f64,
    out_pass: *mut bool,
    out_max_deviation: *mut f64,
) -> EccxStatus {
    guard(|| {
        let theorem: Theorem = text(theorem)?.parse()?;
        if operands.is_null() && count > 0 {
            return Err(fail(EccxStatus::NullPointer, "operands is NULL"));
        }
        let handles: &[*const EccxGraph] = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(operands, count)
        };
        let graphs = handles
            .iter()
            .map(|&h| graph_ref(h).cloned())
            .collect::<FfiResult<Vec<_>>>()?;
        let report = theorems::verify(theorem, &graphs, tol)?;
        write(out_pass, report.pass)?;
        write(
            out_max_deviation,
            report.max_deviation.unwrap_or(f64::INFINITY),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_handles_are_reported() {
        let mut out = ptr::null_mut();
        let status = unsafe { eccx_graph_complement(ptr::null(), &mut out) };
        assert_eq!(status, EccxStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(eccx_last_error_message()) };
        assert!(msg.to_str().unwrap().contains("NULL"));
        assert_eq!(unsafe { eccx_graph_order(ptr::null()) }, 0);
        unsafe { eccx_graph_free(ptr::null_mut()) };
    }
}
