use crate::error::{Error, Result};
use crate::graph::{bits, mask_below, Graph};

pub const PERFECT_CAP: usize = 12;

/// Perfect iff neither the graph nor its complement has an odd hole.
pub fn is_perfect_small(g: &Graph) -> Result<bool> {
    if g.vertex_count() > PERFECT_CAP {
        return Err(Error::size(format!(
            "perfection test limited to {PERFECT_CAP} vertices, got {}",
            g.vertex_count()
        )));
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// Whether `g` has an induced cycle of odd length at least 5.
pub fn has_odd_hole(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|s| {
        let above = mask_below(n) & !mask_below(s + 1);
        let mut path = vec![s];
        grow(g, &mut path, above)
    })
}

/// Extends a chordless path starting at `path[0]` by vertices from `allowed`.
fn grow(g: &Graph, path: &mut Vec<usize>, allowed: u64) -> bool {
    let last = *path.last().expect("nonempty");
    let start = path[0];
    let interior: u64 = path[1..].iter().fold(0, |m, &v| m | 1 << v) & !(1 << last);
    let on_path: u64 = path.iter().fold(0, |m, &v| m | 1 << v);
    for x in bits(g.row(last) & allowed & !on_path) {
        if g.row(x) & interior != 0 {
            continue;
        }
        if path.len() > 1 && g.has_edge(x, start) {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                return true;
            }
            // closes a short or even hole; cannot extend past a chord to start
            continue;
        }
        path.push(x);
        let found = grow(g, path, allowed);
        path.pop();
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::graphs_up_to_iso;

    #[test]
    fn perfect_examples() {
        assert!(!is_perfect_small(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!is_perfect_small(&Graph::cycle(7).unwrap().complement()).unwrap());
        assert!(is_perfect_small(&Graph::cycle(6).unwrap()).unwrap());
        assert!(is_perfect_small(&Graph::complete(6).unwrap()).unwrap());
        assert!(is_perfect_small(&Graph::empty(13).unwrap()).is_err());
    }

    #[test]
    fn bipartite_graphs_are_perfect() {
        for n in 0..=7 {
            for g in graphs_up_to_iso(n) {
                if g.is_bipartite() {
                    assert!(is_perfect_small(&g).unwrap(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn complement_invariant() {
        for n in 0..=7 {
            for g in graphs_up_to_iso(n) {
                assert_eq!(
                    is_perfect_small(&g).unwrap(),
                    is_perfect_small(&g.complement()).unwrap()
                );
            }
        }
    }

    #[test]
    fn imperfect_count_on_six_vertices() {
        // Graphs on 6 vertices containing C5 as an induced subgraph (the only
        // odd hole or antihole that fits, as C5 is self-complementary).
        let c5 = Graph::cycle(5).unwrap();
        for g in graphs_up_to_iso(6) {
            let expect = crate::iso::contains_induced(&c5, &g);
            assert_eq!(!is_perfect_small(&g).unwrap(), expect);
        }
    }
}
