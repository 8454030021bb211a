use crate::csp::hom_search;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::SandwichInstance;
use crate::reduce::line_bip_to_a;
use crate::structure::struct_a;

pub const LINE_MULTI_CAP: usize = 10;

/// Line graph of a bipartite graph, decided as a pair colouring into the
/// three-element template with every pair of `g` fixed.
pub fn is_line_of_bipartite(g: &Graph) -> Result<bool> {
    if g.vertex_count() < 2 {
        return Ok(true);
    }
    let inst = line_bip_to_a(&SandwichInstance::from_graph(g))?;
    Ok(hom_search(&inst, &struct_a())?.is_yes())
}

/// Line graph of a bipartite multigraph: contract co-twin classes, then test
/// the simple class.
pub fn is_line_of_bipartite_multi(g: &Graph) -> Result<bool> {
    if g.vertex_count() > LINE_MULTI_CAP {
        return Err(Error::size(format!(
            "multigraph line test limited to {LINE_MULTI_CAP} vertices, got {}",
            g.vertex_count()
        )));
    }
    is_line_of_bipartite(&contract_co_twins(g))
}

/// Keeps the lowest vertex of each class of equal closed neighbourhoods.
pub fn contract_co_twins(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let closed = |u: usize| g.row(u) | 1 << u;
    let keep: Vec<usize> = (0..n)
        .filter(|&u| (0..u).all(|v| closed(v) != closed(u)))
        .collect();
    g.induced_subgraph(&keep).expect("kept vertices are in range")
}

/// Oracle: searches root edges `(row, col)` for every vertex such that two
/// vertices are adjacent iff their roots share a row or a column. Roots
/// must be distinct unless `allow_parallel`.
///
/// Rows and columns are introduced in increasing order, so each root graph
/// is visited once per labelling of its edges.
pub fn line_bip_by_root_enumeration(g: &Graph, allow_parallel: bool) -> bool {
    let n = g.vertex_count();
    let mut roots = Vec::with_capacity(n);
    place_root(g, allow_parallel, &mut roots, 0, 0)
}

fn place_root(
    g: &Graph,
    allow_parallel: bool,
    roots: &mut Vec<(usize, usize)>,
    rows: usize,
    cols: usize,
) -> bool {
    let v = roots.len();
    if v == g.vertex_count() {
        return true;
    }
    for r in 0..=rows {
        for c in 0..=cols {
            let fits = roots.iter().enumerate().all(|(u, &(ru, cu))| {
                let same = ru == r && cu == c;
                if same && !allow_parallel {
                    return false;
                }
                g.has_edge(u, v) == (ru == r || cu == c)
            });
            if !fits {
                continue;
            }
            roots.push((r, c));
            let found = place_root(g, allow_parallel, roots, rows.max(r + 1), cols.max(c + 1));
            roots.pop();
            if found {
                return true;
            }
        }
    }
    false
}
