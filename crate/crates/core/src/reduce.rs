//! Instance-level reductions between sandwich problems, and from colouring,
//! pair colouring and Hamiltonian paths.

use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph, Pair};
use crate::instance::SandwichInstance;
use crate::structure::StructureInstance;

/// `(V, E) -> (V, E, ∅)`.
pub fn colouring_to_sandwich(g: &Graph) -> SandwichInstance {
    SandwichInstance::new(g.vertex_count(), g.edge_iter(), []).expect("graph pairs are valid")
}

/// Forced and forbidden swapped.
pub fn complement_instance(inst: &SandwichInstance) -> SandwichInstance {
    inst.complement()
}

fn extend(
    inst: &SandwichInstance,
    extra: usize,
    forced: impl IntoIterator<Item = (usize, usize)>,
    forbidden: impl IntoIterator<Item = (usize, usize)>,
) -> SandwichInstance {
    let pairs = |s: &std::collections::BTreeSet<Pair>| s.iter().map(|p| (p.lo(), p.hi())).collect::<Vec<_>>();
    let mut e = pairs(inst.forced());
    let mut n = pairs(inst.forbidden());
    e.extend(forced);
    n.extend(forbidden);
    SandwichInstance::new(inst.vertex_count() + extra, e, n).expect("new pairs touch only fresh vertices")
}

/// Adds `p + 1` fresh vertices, forced to every original vertex and
/// pairwise forbidden.
pub fn pq_padding(inst: &SandwichInstance, p: usize) -> SandwichInstance {
    let n = inst.vertex_count();
    let fresh = n..n + p + 1;
    let forced: Vec<_> = fresh.clone().flat_map(|v| (0..n).map(move |u| (u, v))).collect();
    let forbidden: Vec<_> = fresh
        .clone()
        .flat_map(|v| (v + 1..n + p + 1).map(move |w| (v, w)))
        .collect();
    extend(inst, p + 1, forced, forbidden)
}

/// One fresh vertex forced to every original vertex.
pub fn universal_vertex_padding(inst: &SandwichInstance) -> SandwichInstance {
    let n = inst.vertex_count();
    extend(inst, 1, (0..n).map(|u| (u, n)), [])
}

/// A pendant `u_v = n + v` per vertex `v`, forced to `v` only and forbidden
/// to every other vertex, old or new.
pub fn pendant_padding(inst: &SandwichInstance) -> SandwichInstance {
    let n = inst.vertex_count();
    let forced: Vec<_> = (0..n).map(|v| (v, n + v)).collect();
    let mut forbidden = Vec::new();
    for v in 0..n {
        for w in 0..n {
            if w != v {
                forbidden.push((n + v, w));
                if w > v {
                    forbidden.push((n + v, n + w));
                }
            }
        }
    }
    extend(inst, n, forced, forbidden)
}

/// Pair-colouring instance over the three-element template: one variable
/// per vertex pair in [`all_pairs`] order, `T(uv, vw, uw)` for every triple
/// `u < v < w`, `U_N` on forbidden pairs and `U_E` on forced pairs.
pub fn line_bip_to_a(inst: &SandwichInstance) -> Result<StructureInstance> {
    let n = inst.vertex_count();
    // index of pair (u, v), u < v, in all_pairs order
    let idx = |u: usize, v: usize| u * n - u * (u + 1) / 2 + (v - u - 1);
    let mut out = StructureInstance::new(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                out.push("T", vec![idx(u, v), idx(v, w), idx(u, w)])?;
            }
        }
    }
    for (i, p) in all_pairs(n).enumerate() {
        debug_assert_eq!(i, idx(p.lo(), p.hi()));
        if inst.is_forbidden(p) {
            out.push("U_N", vec![i])?;
        } else if inst.is_forced(p) {
            out.push("U_E", vec![i])?;
        }
    }
    Ok(out)
}

/// `k_i = 5 * 3^i`.
pub fn k_seq(i: u32) -> usize {
    5 * 3usize.pow(i)
}

/// Size of the padded graph for an `n`-vertex input: `k_{i+2}` with `i`
/// maximal such that `k_i <= n`, and `i = 0` below 5 vertices.
pub fn ham_target_size(n: usize) -> usize {
    let mut i = 0;
    while k_seq(i + 1) <= n {
        i += 1;
    }
    k_seq(i + 2)
}

/// Appends a fresh path `t - p_1 - ... - p_l - s` so the result has
/// [`ham_target_size`] vertices. `g` has a Hamiltonian `s`-`t` path iff the
/// result has a cycle whose length lies in `T`; such a cycle must run
/// through the new path, whose first vertex is `g.vertex_count()`.
pub fn ham_path_to_cycle_family(g: &Graph, s: usize, t: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if s >= n || t >= n || s == t {
        return Err(Error::range(format!("need distinct endpoints below {n}, got {s} and {t}")));
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let total = ham_target_size(n);
    let mut h = Graph::empty(total)?;
    for (u, v) in g.edge_iter() {
        h.add_edge(u, v)?;
    }
    h.add_edge(t, n)?;
    for p in n..total - 1 {
        h.add_edge(p, p + 1)?;
    }
    h.add_edge(total - 1, s)?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_shapes() {
        let p = pq_padding(&SandwichInstance::free(2), 1);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.forced().len(), 4);
        assert_eq!(p.forbidden().len(), 1);
        let p = pq_padding(&SandwichInstance::free(1), 2);
        assert_eq!((p.vertex_count(), p.forced().len(), p.forbidden().len()), (4, 3, 3));

        let u = universal_vertex_padding(&SandwichInstance::free(3));
        assert_eq!(u, SandwichInstance::new(4, [(0, 3), (1, 3), (2, 3)], []).unwrap());
        let uu = universal_vertex_padding(&u);
        assert_eq!(uu.forced().len(), 3 + 4);

        let inst = SandwichInstance::new(2, [(0, 1)], []).unwrap();
        let pp = pendant_padding(&inst);
        assert_eq!(
            pp,
            SandwichInstance::new(4, [(0, 1), (0, 2), (1, 3)], [(2, 3), (1, 2), (0, 3)]).unwrap()
        );
        assert_eq!(pendant_padding(&SandwichInstance::free(0)), SandwichInstance::free(0));
    }

    #[test]
    fn line_bip_counts() {
        let inst = SandwichInstance::new(3, [(0, 1), (1, 2)], []).unwrap();
        let a = line_bip_to_a(&inst).unwrap();
        assert_eq!(a.var_count, 3);
        assert_eq!(a.constraints.iter().filter(|c| c.symbol == "T").count(), 1);
        assert_eq!(a.constraints.iter().filter(|c| c.symbol == "U_E").count(), 2);
        for n in 0..8 {
            let a = line_bip_to_a(&SandwichInstance::free(n)).unwrap();
            let c3 = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
            assert_eq!(a.constraints.len(), c3);
        }
    }

    #[test]
    fn target_sizes() {
        assert_eq!(ham_target_size(2), 45);
        assert_eq!(ham_target_size(6), 45);
        assert_eq!(ham_target_size(14), 45);
        assert_eq!(ham_target_size(15), 135);
        let h = ham_path_to_cycle_family(&Graph::cycle(6).unwrap(), 0, 1).unwrap();
        assert_eq!(h.vertex_count(), 45);
        assert_eq!(h.edge_count(), 6 + 39 + 1);
    }

    #[test]
    fn ham_errors() {
        assert_eq!(ham_path_to_cycle_family(&Graph::cycle(5).unwrap(), 0, 1), Err(Error::NotBipartite));
        assert!(matches!(ham_path_to_cycle_family(&Graph::path(4).unwrap(), 1, 1), Err(Error::Range(_))));
        assert!(matches!(ham_path_to_cycle_family(&Graph::path(4).unwrap(), 0, 9), Err(Error::Range(_))));
    }
}
