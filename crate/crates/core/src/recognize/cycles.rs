use super::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const CYCLE_CAP: usize = 20;

/// `m = 5 * 3^i` for some `i >= 0`.
pub fn in_t(m: usize) -> bool {
    if m == 0 {
        return false;
    }
    let mut m = m;
    while m.is_multiple_of(3) {
        m /= 3;
    }
    m == 5
}

/// Whether `g` has a (not necessarily induced) cycle whose length lies in
/// the family. Limited to [`CYCLE_CAP`] vertices.
pub fn contains_cycle_in(g: &Graph, spec: &FamilySpec) -> Result<bool> {
    contains_cycle_in_capped(g, spec, CYCLE_CAP)
}

/// As [`contains_cycle_in`] with an explicit vertex cap.
pub fn contains_cycle_in_capped(g: &Graph, spec: &FamilySpec, cap: usize) -> Result<bool> {
    if g.vertex_count() > cap {
        return Err(Error::size(format!(
            "cycle search limited to {cap} vertices, got {}",
            g.vertex_count()
        )));
    }
    // Each cycle is enumerated from its lowest vertex.
    for s in 0..g.vertex_count() {
        let allowed = g_mask_above(g, s);
        if walk(g, s, s, 1u64 << s, 1, allowed, spec) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some cycle through `anchor` has a length in the family. Any
/// vertex count is accepted; the search only follows simple paths from the
/// anchor.
pub fn contains_cycle_through(g: &Graph, anchor: usize, spec: &FamilySpec) -> Result<bool> {
    if anchor >= g.vertex_count() {
        return Err(Error::range(format!("anchor {anchor} out of range")));
    }
    let all = crate::graph::mask_below(g.vertex_count());
    Ok(walk(g, anchor, anchor, 1u64 << anchor, 1, all, spec))
}

fn g_mask_above(g: &Graph, s: usize) -> u64 {
    crate::graph::mask_below(g.vertex_count()) & !crate::graph::mask_below(s + 1)
}

fn walk(g: &Graph, start: usize, at: usize, visited: u64, len: usize, allowed: u64, spec: &FamilySpec) -> bool {
    if len >= 3 && g.has_edge(at, start) && spec.contains(len) {
        return true;
    }
    if let FamilySpec::ExplicitSet(ls) = spec {
        if ls.last().is_some_and(|&max| len >= max) {
            return false;
        }
    }
    for next in bits(g.row(at) & allowed & !visited) {
        if walk(g, start, next, visited | 1 << next, len + 1, allowed, spec) {
            return true;
        }
    }
    false
}
