//! C interface to `roleprism`.
//!
//! Graphs and witnesses are opaque heap handles created by `rp_*_new`-style
//! functions and released with the matching `rp_*_free`. Every fallible
//! function returns an [`RpStatus`]; outputs go through pointer arguments.
//! Strings are copied into caller buffers: the required size including the
//! terminating NUL is always written to `needed`, and
//! [`RpStatus::BufferTooSmall`] is returned if `capacity` is short.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use roleprism::role;
use roleprism::{complementary_prism, construct, decide, format, Assignment, Graph, Side, WitnessError, WitnessTrace};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RpStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidGraph = 3,
    /// The prism has no 3-role assignment.
    NoAssignment = 4,
    Internal = 5,
    BufferTooSmall = 6,
}

/// Side of a matched exception condition.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RpSide {
    None = 0,
    Graph = 1,
    Complement = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RpDecision {
    pub has_assignment: bool,
    /// `None` when `has_assignment` is true.
    pub side: RpSide,
    /// Matched condition 1..=5, or 0.
    pub condition: u8,
}

/// Opaque graph handle.
pub struct RpGraph {
    graph: Graph,
}

/// Opaque witness handle.
pub struct RpWitness {
    trace: WitnessTrace,
}

fn guard(f: impl FnOnce() -> RpStatus) -> RpStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RpStatus::Internal)
}

fn boxed<T>(value: T, out: *mut *mut T) -> RpStatus {
    // SAFETY: callers check `out` for null before reaching here.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    RpStatus::Ok
}

/// Copies `s` plus a NUL into `buf`.
///
/// # Safety
/// `buf` must be null or valid for `capacity` bytes; `needed` must be valid
/// or null.
unsafe fn copy_out(s: &str, buf: *mut c_char, capacity: usize, needed: *mut usize) -> RpStatus {
    let len = s.len() + 1;
    if !needed.is_null() {
        *needed = len;
    }
    if buf.is_null() || capacity < len {
        return RpStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    RpStatus::Ok
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0 v0 u1 v1 ...`).
///
/// # Safety
/// `edges` must be valid for `2 * edge_count` reads (it may be null when
/// `edge_count` is 0). `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut RpGraph,
) -> RpStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        return RpStatus::NullPointer;
    }
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        match Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(graph) => boxed(RpGraph { graph }, out),
            Err(_) => RpStatus::InvalidGraph,
        }
    })
}

/// Parses graph6 or edge-list text (detected from the first line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_parse(text: *const c_char, out: *mut *mut RpGraph) -> RpStatus {
    if text.is_null() || out.is_null() {
        return RpStatus::NullPointer;
    }
    guard(|| {
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return RpStatus::ParseError;
        };
        match format::parse(s, None) {
            Ok(graph) => boxed(RpGraph { graph }, out),
            Err(_) => RpStatus::ParseError,
        }
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_order(g: *const RpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_graph_free(g: *mut RpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Decides whether the prism of `g` has a 3-role assignment.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_decide(g: *const RpGraph, out: *mut RpDecision) -> RpStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return RpStatus::NullPointer;
    };
    guard(|| match decide(&g.graph) {
        Ok(r) => {
            *out = match r.matched {
                None => RpDecision {
                    has_assignment: true,
                    side: RpSide::None,
                    condition: 0,
                },
                Some(m) => RpDecision {
                    has_assignment: false,
                    side: match m.side {
                        Side::Graph => RpSide::Graph,
                        Side::Complement => RpSide::Complement,
                    },
                    condition: m.condition,
                },
            };
            RpStatus::Ok
        }
        Err(_) => RpStatus::InvalidGraph,
    })
}

/// Constructs a verified assignment of the prism of `g`. Returns
/// `RP_STATUS_NO_ASSIGNMENT` and leaves `*out` untouched if none exists.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_new(g: *const RpGraph, out: *mut *mut RpWitness) -> RpStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return RpStatus::NullPointer;
    };
    guard(|| match construct(&g.graph) {
        Ok(trace) => boxed(RpWitness { trace }, out),
        Err(WitnessError::NoAssignment(_)) => RpStatus::NoAssignment,
        Err(WitnessError::Graph(_)) => RpStatus::InvalidGraph,
        Err(_) => RpStatus::Internal,
    })
}

/// Length of the role vector: twice the order of the input graph.
///
/// # Safety
/// `w` must be null or a live witness handle.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_len(w: *const RpWitness) -> usize {
    w.as_ref().map_or(0, |w| w.trace.assignment.len())
}

/// Copies the roles (1..=3) of the prism vertices into `roles`: vertex `i`
/// of the input graph first, its mirror at `n + i`.
///
/// # Safety
/// `w` must be a live witness handle; `roles` must be valid for `capacity`
/// writes.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_roles(w: *const RpWitness, roles: *mut u8, capacity: usize) -> RpStatus {
    let (Some(w), false) = (w.as_ref(), roles.is_null()) else {
        return RpStatus::NullPointer;
    };
    let src = w.trace.assignment.roles();
    if capacity < src.len() {
        return RpStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(src.as_ptr(), roles, src.len());
    RpStatus::Ok
}

/// Whether the oracle produced the witness instead of a construction.
///
/// # Safety
/// `w` must be null or a live witness handle.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_fallback(w: *const RpWitness) -> bool {
    w.as_ref().is_some_and(|w| w.trace.fallback)
}

/// Copies the construction id as a C string.
///
/// # Safety
/// `w` must be a live witness handle; `buf` must be null or valid for
/// `capacity` bytes; `needed` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_construction(
    w: *const RpWitness,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> RpStatus {
    match w.as_ref() {
        Some(w) => copy_out(&w.trace.construction, buf, capacity, needed),
        None => RpStatus::NullPointer,
    }
}

/// Copies the full text trace, as printed by `roleprism witness`.
///
/// # Safety
/// Same as [`rp_witness_construction`].
#[no_mangle]
pub unsafe extern "C" fn rp_witness_trace(
    w: *const RpWitness,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> RpStatus {
    match w.as_ref() {
        Some(w) => copy_out(&w.trace.serialize(), buf, capacity, needed),
        None => RpStatus::NullPointer,
    }
}

/// Releases a witness. Null is ignored.
///
/// # Safety
/// `w` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rp_witness_free(w: *mut RpWitness) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Checks whether `roles` (length `2n`, values 1..=3) is a 3-role assignment
/// of the prism of `g`, against its own quotient.
///
/// # Safety
/// `g` must be a live graph handle; `roles` must be valid for `len` reads;
/// `valid` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn rp_verify(g: *const RpGraph, roles: *const u8, len: usize, valid: *mut bool) -> RpStatus {
    let (Some(g), false, false) = (g.as_ref(), roles.is_null(), valid.is_null()) else {
        return RpStatus::NullPointer;
    };
    guard(|| {
        let Ok(prism) = complementary_prism(&g.graph) else {
            return RpStatus::InvalidGraph;
        };
        let roles = std::slice::from_raw_parts(roles, len).to_vec();
        *valid = Assignment::new(roles, 3)
            .ok()
            .and_then(|a| role::quotient(prism.graph(), &a).ok().map(|q| (a, q)))
            .is_some_and(|(a, q)| role::verify(prism.graph(), &a, &q).is_ok());
        RpStatus::Ok
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rp_status_message(status: RpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        RpStatus::Ok => c"ok",
        RpStatus::NullPointer => c"null pointer argument",
        RpStatus::ParseError => c"graph text could not be parsed",
        RpStatus::InvalidGraph => c"invalid graph",
        RpStatus::NoAssignment => c"the prism has no 3-role assignment",
        RpStatus::Internal => c"internal error",
        RpStatus::BufferTooSmall => c"buffer too small",
    };
    s.as_ptr()
}
