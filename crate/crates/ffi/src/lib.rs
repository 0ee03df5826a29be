//! C ABI over the bicover library.
//!
//! Graphs and covers cross the boundary as opaque handles. Every fallible
//! call returns a [`BcStatus`]; on failure the message is kept per thread
//! and read with [`bc_last_error`]. Strings returned by the library are
//! released with [`bc_string_free`], handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bicover::compressed::{bfs_via_cover, spanner_3hop, verify_spanner};
use bicover::io::{cover_to_string, parse_cover, parse_graph, parse_instance};
use bicover::rational::int;
use bicover::segtree::cover_intervals;
use bicover::{validate_cover, BicliqueCover, Checking, Error, Graph};

/// Distance reported for vertices the root cannot reach.
pub const BC_UNREACHABLE: u32 = u32::MAX;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    Input = 4,
    /// The input violates a structural precondition (not capped, crossing
    /// segments of one color, collinear overlap).
    Precondition = 5,
    /// A certificate or soundness check failed.
    Certificate = 6,
    Overflow = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Opaque graph handle.
pub struct BcGraph(Graph);

/// Opaque biclique cover handle.
pub struct BcCover(BicliqueCover);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(BcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => BcStatus::Parse,
            Error::NotCapped { .. } | Error::SameColorIntersection(..) | Error::CollinearOverlap { .. } => {
                BcStatus::Precondition
            }
            Error::ContainsKtt { .. } | Error::ScanTooExpensive(_) | Error::Soundness { .. } => BcStatus::Certificate,
            Error::Overflow(_) => BcStatus::Overflow,
            _ => BcStatus::Input,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure and maps it to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            BcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(BcStatus::Utf8, e.to_string()))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph file.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_parse(text: *const c_char, out: *mut *mut BcGraph) -> BcStatus {
    guard(|| {
        let g = parse_graph(read_str(text)?)?;
        put(out, Box::into_raw(Box::new(BcGraph(g))), "out")
    })
}

/// Graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `edges` holds `2 * m` values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut BcGraph,
) -> BcStatus {
    guard(|| {
        let e = slice(edges, 2 * m, "edges")?;
        let g = Graph::new(n, e.chunks_exact(2).map(|p| (p[0], p[1])), false)?;
        put(out, Box::into_raw(Box::new(BcGraph(g))), "out")
    })
}

/// Brute-force graph of any instance file.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_graph(text: *const c_char, out: *mut *mut BcGraph) -> BcStatus {
    guard(|| {
        let g = parse_instance(read_str(text)?)?.oracle()?;
        put(out, Box::into_raw(Box::new(BcGraph(g))), "out")
    })
}

/// # Safety
/// `g` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_n(g: *const BcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_m(g: *const BcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `g` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_graph_free(g: *mut BcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a cover file.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_parse(text: *const c_char, out: *mut *mut BcCover) -> BcStatus {
    guard(|| {
        let c = parse_cover(read_str(text)?)?;
        put(out, Box::into_raw(Box::new(BcCover(c))), "out")
    })
}

/// Cover of any instance file with the construction for its kind. With
/// `strict`, preconditions are checked first.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_instance_cover(text: *const c_char, strict: bool, out: *mut *mut BcCover) -> BcStatus {
    guard(|| {
        let checking = if strict { Checking::Strict } else { Checking::Fast };
        let c = parse_instance(read_str(text)?)?.default_cover(checking)?;
        put(out, Box::into_raw(Box::new(BcCover(c))), "out")
    })
}

/// Cover of the intersection graph of closed integer intervals
/// `[lo[i], hi[i]]`.
///
/// # Safety
/// `lo` and `hi` hold `n` values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_intervals(
    lo: *const i64,
    hi: *const i64,
    n: usize,
    out: *mut *mut BcCover,
) -> BcStatus {
    guard(|| {
        let (lo, hi) = (slice(lo, n, "lo")?, slice(hi, n, "hi")?);
        let iv: Vec<_> = lo.iter().zip(hi).map(|(&a, &b)| (int(a), int(b))).collect();
        let c = cover_intervals(&iv)?;
        put(out, Box::into_raw(Box::new(BcCover(c))), "out")
    })
}

/// Number of bicliques.
///
/// # Safety
/// `c` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_len(c: *const BcCover) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Sum of `|L| + |R|` over the bicliques.
///
/// # Safety
/// `c` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_size(c: *const BcCover) -> usize {
    c.as_ref().map_or(0, |c| c.0.size())
}

/// Writes the cover file text to `*out`; free it with [`bc_string_free`].
///
/// # Safety
/// `c` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_to_text(c: *const BcCover, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let s = CString::new(cover_to_string(&get(c, "cover")?.0)).expect("cover text has no NUL");
        put(out, s.into_raw(), "out")
    })
}

/// # Safety
/// `c` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_free(c: *mut BcCover) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Sets `*valid` when the cover generates exactly the edges of `g` (and
/// each once, for partitions).
///
/// # Safety
/// `g` and `c` are live handles; `valid` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_cover_validate(g: *const BcGraph, c: *const BcCover, valid: *mut bool) -> BcStatus {
    guard(|| {
        let r = validate_cover(&get(g, "graph")?.0, &get(c, "cover")?.0)?;
        put(valid, r.valid, "valid")
    })
}

/// Hop distances from `root` over the graph the cover generates, written
/// to `dist[0..n]`; unreachable vertices get [`BC_UNREACHABLE`].
///
/// # Safety
/// `c` is a live handle; `dist` has room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn bc_bfs(c: *const BcCover, n: usize, root: usize, dist: *mut u32) -> BcStatus {
    guard(|| {
        let d = bfs_via_cover(n, &get(c, "cover")?.0, root)?;
        if n > 0 && dist.is_null() {
            return Err(null("dist"));
        }
        std::ptr::copy_nonoverlapping(d.as_ptr(), dist, n);
        Ok(())
    })
}

/// Edges of the 3-hop spanner as `2 * len` endpoints. `*len` is always set;
/// when `cap` edges do not fit, nothing is written and the status is
/// `BufferTooSmall`.
///
/// # Safety
/// `c` is a live handle; `edges` has room for `2 * cap` values; `len` is
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bc_spanner(c: *const BcCover, edges: *mut usize, cap: usize, len: *mut usize) -> BcStatus {
    guard(|| {
        let h = spanner_3hop(&get(c, "cover")?.0);
        put(len, h.len(), "len")?;
        if h.len() > cap {
            return Err(Fail(BcStatus::BufferTooSmall, format!("{} edges, room for {cap}", h.len())));
        }
        if !h.is_empty() && edges.is_null() {
            return Err(null("edges"));
        }
        for (i, (u, v)) in h.into_iter().enumerate() {
            edges.add(2 * i).write(u);
            edges.add(2 * i + 1).write(v);
        }
        Ok(())
    })
}

/// Sets `*ok` when every edge of `g` has endpoints within `t` hops in the
/// subgraph given by `m` edges.
///
/// # Safety
/// `g` is a live handle; `edges` holds `2 * m` values; `ok` is writable.
#[no_mangle]
pub unsafe extern "C" fn bc_verify_spanner(
    g: *const BcGraph,
    edges: *const usize,
    m: usize,
    t: usize,
    ok: *mut bool,
) -> BcStatus {
    guard(|| {
        let e: Vec<(usize, usize)> = slice(edges, 2 * m, "edges")?.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        put(ok, verify_spanner(&get(g, "graph")?.0, &e, t)?, "ok")
    })
}
