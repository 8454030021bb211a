use crate::error::{Error, Result};
use crate::graph::{bits, mask_below, Graph};
use crate::iso::{contains_induced, ISO_CAP};

/// Split iff `{2K2, C4, C5}`-free.
pub fn is_split(g: &Graph) -> bool {
    let obstructions = [
        Graph::matching(2).expect("small"),
        Graph::cycle(4).expect("small"),
        Graph::cycle(5).expect("small"),
    ];
    !obstructions.iter().any(|f| contains_induced(f, g))
}

/// Direct search for a clique/independent-set bipartition, for `n <= 10`.
/// Returns the clique side as a bitmask.
pub fn split_partition_search(g: &Graph) -> Result<Option<u64>> {
    let n = g.vertex_count();
    if n > ISO_CAP {
        return Err(Error::size(format!("partition search limited to {ISO_CAP} vertices")));
    }
    let all = mask_below(n);
    for k in 0..=all {
        let clique = bits(k).all(|u| (g.row(u) | 1 << u) & k == k);
        let indep = bits(all & !k).all(|u| g.row(u) & all & !k == 0);
        if clique && indep {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Peels isolated or universal vertices until the graph is empty.
pub fn is_threshold(g: &Graph) -> bool {
    let mut alive = mask_below(g.vertex_count());
    while alive != 0 {
        let peel = bits(alive).find(|&u| {
            let nb = g.row(u) & alive;
            nb == 0 || nb == alive & !(1 << u)
        });
        match peel {
            Some(u) => alive &= !(1 << u),
            None => return false,
        }
    }
    true
}

/// Complete multipartite iff non-adjacency is an equivalence relation, i.e.
/// the complement is a disjoint union of cliques.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let co = g.complement();
    (0..co.vertex_count()).all(|u| {
        let closed = co.row(u) | 1 << u;
        bits(co.row(u)).all(|v| co.row(v) | 1 << v == closed)
    })
}

pub fn is_f_free(g: &Graph, forbidden: &[Graph]) -> Result<bool> {
    if let Some(f) = forbidden.iter().find(|f| f.vertex_count() > ISO_CAP) {
        return Err(Error::size(format!(
            "forbidden pattern on {} vertices exceeds {ISO_CAP}",
            f.vertex_count()
        )));
    }
    Ok(!forbidden.iter().any(|f| contains_induced(f, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::graphs_up_to_iso;
    use crate::recognize::co_p3;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn split_examples() {
        assert!(is_split(&k(3)));
        assert!(!is_split(&Graph::matching(2).unwrap()));
        assert!(!is_split(&Graph::cycle(4).unwrap()));
        assert_eq!(split_partition_search(&Graph::matching(2).unwrap()).unwrap(), None);
        assert_eq!(split_partition_search(&Graph::cycle(4).unwrap()).unwrap(), None);
        assert!(split_partition_search(&k(3)).unwrap().is_some());
    }

    #[test]
    fn split_routes_agree_up_to_seven_vertices() {
        for n in 0..=7 {
            for g in graphs_up_to_iso(n) {
                assert_eq!(
                    is_split(&g),
                    split_partition_search(&g).unwrap().is_some(),
                    "{g:?}"
                );
            }
        }
    }

    /// Threshold oracle: some order of adding isolated/universal vertices
    /// rebuilds the graph exactly.
    fn threshold_by_build_orders(g: &Graph) -> bool {
        fn go(g: &Graph, placed: u64, n: usize) -> bool {
            if placed == mask_below(n) {
                return true;
            }
            bits(mask_below(n) & !placed).any(|v| {
                let nb = g.row(v) & placed;
                (nb == 0 || nb == placed) && go(g, placed | 1 << v, n)
            })
        }
        go(g, 0, g.vertex_count())
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&Graph::star(3).unwrap()));
        assert!(!is_threshold(&Graph::path(4).unwrap()));
        assert!(!is_threshold(&Graph::cycle(4).unwrap()));
        for n in 0..=4 {
            for g in graphs_up_to_iso(n) {
                assert_eq!(is_threshold(&g), threshold_by_build_orders(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn thresholds_are_split() {
        for n in 0..=7 {
            for g in graphs_up_to_iso(n) {
                if is_threshold(&g) {
                    assert!(is_split(&g), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn multipartite_examples_and_obstruction_route() {
        assert!(is_complete_multipartite(&Graph::cycle(4).unwrap()));
        assert!(is_complete_multipartite(&Graph::path(3).unwrap()));
        assert!(!is_complete_multipartite(&Graph::path(4).unwrap()));
        let pattern = [co_p3()];
        for n in 0..=7 {
            for g in graphs_up_to_iso(n) {
                assert_eq!(is_complete_multipartite(&g), is_f_free(&g, &pattern).unwrap());
            }
        }
    }

    #[test]
    fn f_free_examples() {
        assert!(is_f_free(&Graph::cycle(5).unwrap(), &[k(3)]).unwrap());
        assert!(!is_f_free(&k(4), &[k(4)]).unwrap());
        assert!(!is_f_free(&Graph::path(5).unwrap(), &[Graph::path(4).unwrap()]).unwrap());
        assert!(matches!(
            is_f_free(&k(3), &[Graph::empty(11).unwrap()]),
            Err(Error::Size(_))
        ));
    }
}
