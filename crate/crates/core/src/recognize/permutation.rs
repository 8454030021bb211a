use crate::error::{Error, Result};
use crate::graph::Graph;

pub const PERMUTATION_CAP: usize = 10;

/// Whether two linear orders on `V` exist with `u ~ v` iff the orders
/// disagree on `{u, v}`.
///
/// The first order is built by depth-first search. It fixes the second
/// order: `u` precedes `v` there iff `u` precedes `v` in the first and they
/// are non-adjacent. The branch dies once that relation has a directed
/// triangle.
pub fn is_permutation_small(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > PERMUTATION_CAP {
        return Err(Error::size(format!(
            "permutation test limited to {PERMUTATION_CAP} vertices, got {n}"
        )));
    }
    let mut order = Vec::with_capacity(n);
    Ok(place(g, &mut order, 0))
}

fn place(g: &Graph, order: &mut Vec<usize>, used: u64) -> bool {
    let n = g.vertex_count();
    if order.len() == n {
        return true;
    }
    for x in 0..n {
        if used >> x & 1 == 1 || !extends_transitively(g, order, x) {
            continue;
        }
        order.push(x);
        if place(g, order, used | 1 << x) {
            return true;
        }
        order.pop();
    }
    false
}

/// For `a` before `b` before `x` in the first order, the derived order is
/// cyclic on the triple exactly in the two patterns rejected here.
fn extends_transitively(g: &Graph, order: &[usize], x: usize) -> bool {
    for (i, &a) in order.iter().enumerate() {
        let ax = g.has_edge(a, x);
        for &b in &order[i + 1..] {
            let ab = g.has_edge(a, b);
            let bx = g.has_edge(b, x);
            if (!ab && !bx && ax) || (ab && bx && !ax) {
                return false;
            }
        }
    }
    true
}
