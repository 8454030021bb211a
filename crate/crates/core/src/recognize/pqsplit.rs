use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_VERTICES};

pub const PQ_CAP: usize = 16;

/// Whether `V` splits into `A` with independence number at most `p` and `B`
/// with clique number at most `q`.
pub fn is_pq_split_small(g: &Graph, p: usize, q: usize) -> Result<bool> {
    if g.vertex_count() > PQ_CAP {
        return Err(Error::size(format!(
            "(p,q)-split test limited to {PQ_CAP} vertices, got {}",
            g.vertex_count()
        )));
    }
    Ok(pq_partition(g, g, p, q)?.is_some())
}

/// Searches a vertex bipartition `(A, B)` with `alpha(a_graph[A]) <= p` and
/// `omega(b_graph[B]) <= q`. Returns the mask of `A`.
///
/// With `a_graph` the allowed graph and `b_graph` the forced graph of a
/// sandwich instance this decides the (p,q)-split sandwich problem: inside
/// `A` every allowed pair may be taken, inside `B` none beyond the forced
/// ones, and pairs across the cut are irrelevant.
pub fn pq_partition(a_graph: &Graph, b_graph: &Graph, p: usize, q: usize) -> Result<Option<u64>> {
    let n = a_graph.vertex_count();
    if b_graph.vertex_count() != n {
        return Err(Error::Invalid("partition graphs differ in size".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::size(format!("{n} vertices")));
    }
    let co_a = a_graph.complement();
    let mut search = Partition {
        co_a: &co_a,
        b: b_graph,
        p,
        q,
    };
    Ok(search.assign(0, 0, 0))
}

struct Partition<'a> {
    co_a: &'a Graph,
    b: &'a Graph,
    p: usize,
    q: usize,
}

impl Partition<'_> {
    fn assign(&mut self, v: usize, a: u64, b: u64) -> Option<u64> {
        if v == self.co_a.vertex_count() {
            return Some(a);
        }
        // Trying B first keeps A small, which is cheaper to verify.
        if !has_clique_with(self.b, v, b, self.q + 1) {
            if let Some(found) = self.assign(v + 1, a, b | 1 << v) {
                return Some(found);
            }
        }
        if !has_clique_with(self.co_a, v, a, self.p + 1) {
            return self.assign(v + 1, a | 1 << v, b);
        }
        None
    }
}

/// Whether `g` has a clique of size `k` containing `v` and otherwise inside
/// `within`.
fn has_clique_with(g: &Graph, v: usize, within: u64, k: usize) -> bool {
    k <= 1 || clique_of_size(g, g.row(v) & within, k - 1)
}

fn clique_of_size(g: &Graph, cand: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    let mut rest = cand;
    for u in bits(cand) {
        rest &= !(1 << u);
        if clique_of_size(g, g.row(u) & rest, k - 1) {
            return true;
        }
    }
    false
}
