//! Small-scale isomorphism and induced-subgraph search, plus enumeration of
//! graphs up to isomorphism for the test oracles.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const ISO_CAP: usize = 10;

/// Finds an induced copy of `pattern` in `host`: an injective map `phi`
/// with `pattern.has_edge(a, b) == host.has_edge(phi[a], phi[b])`.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    // Map high-degree pattern vertices first; they prune hardest.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&a| std::cmp::Reverse(pattern.degree(a)));
    let mut phi = vec![usize::MAX; k];
    if extend(pattern, host, &order, 0, 0, &mut phi) {
        Some(phi)
    } else {
        None
    }
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    used: u64,
    phi: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let a = order[depth];
    let need = pattern.degree(a);
    for x in 0..host.vertex_count() {
        if used >> x & 1 == 1 || host.degree(x) < need {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&b| pattern.has_edge(a, b) == host.has_edge(x, phi[b]));
        if !consistent {
            continue;
        }
        phi[a] = x;
        if extend(pattern, host, order, depth + 1, used | 1 << x, phi) {
            return true;
        }
    }
    phi[a] = usize::MAX;
    false
}

pub fn contains_induced(pattern: &Graph, host: &Graph) -> bool {
    find_induced(pattern, host).is_some()
}

/// Brute-force isomorphism test for graphs on at most [`ISO_CAP`] vertices.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.vertex_count() > ISO_CAP {
            return Err(Error::size(format!(
                "isomorphism test limited to {ISO_CAP} vertices, got {}",
                g.vertex_count()
            )));
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(find_induced(g1, g2).is_some())
}

type Invariant = (usize, usize, Vec<(usize, usize)>);

fn invariant(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    // (degree, edges among neighbours) per vertex, sorted.
    let mut per: Vec<(usize, usize)> = (0..g.vertex_count())
        .map(|u| {
            let nb = g.row(u);
            let inner: usize = bits(nb).map(|v| (g.row(v) & nb).count_ones() as usize).sum();
            (g.degree(u), inner / 2)
        })
        .collect();
    per.sort_unstable();
    (g.edge_count(), per)
}

/// One representative per isomorphism class among `candidates`, in first
/// occurrence order.
pub fn dedupe_up_to_iso(candidates: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<Invariant, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    for g in candidates {
        let (m, inv) = invariant(&g);
        let key = (g.vertex_count(), m, inv);
        let bucket = buckets.entry(key).or_default();
        let known = bucket
            .iter()
            .any(|&i| find_induced(&reps[i], &g).is_some());
        if !known {
            bucket.push(reps.len());
            reps.push(g);
        }
    }
    reps
}

/// All graphs on exactly `n` vertices up to isomorphism, grown vertex by
/// vertex from the classes on `n - 1` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for k in 1..=n {
        let next = level.iter().flat_map(|g| {
            (0..1u64 << (k - 1)).map(move |nb| {
                let mut rows: Vec<u64> = g.rows().to_vec();
                for v in bits(nb) {
                    rows[v] |= 1 << (k - 1);
                }
                rows.push(nb);
                Graph::from_rows(rows)
            })
        });
        level = dedupe_up_to_iso(next);
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_c5_is_isomorphic() {
        let c5 = Graph::cycle(5).unwrap();
        let relabelled = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic_small(&c5, &relabelled).unwrap());
    }

    #[test]
    fn triangle_plus_isolated_is_not_p4() {
        let k3k1 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert!(!is_isomorphic_small(&k3k1, &Graph::path(4).unwrap()).unwrap());
    }

    #[test]
    fn size_cap() {
        let big = Graph::empty(11).unwrap();
        assert!(matches!(is_isomorphic_small(&big, &big), Err(Error::Size(_))));
    }

    #[test]
    fn known_class_counts() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn induced_p4_in_p5() {
        let p5 = Graph::path(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        let phi = find_induced(&p4, &p5).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    assert_eq!(p4.has_edge(a, b), p5.has_edge(phi[a], phi[b]));
                }
            }
        }
        assert!(!contains_induced(&Graph::cycle(4).unwrap(), &p5));
    }
}
