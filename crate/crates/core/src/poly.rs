//! Polynomial-time sandwich solvers for complete multipartite, split and
//! threshold graphs.

use crate::certificate::Certificate;
use crate::graph::{bits, mask_below, Graph};
use crate::instance::SandwichInstance;
use crate::twosat::{Lit, TwoSat};

/// Result of the multipartite closure, exposing the rounds for inspection.
#[derive(Debug, Clone)]
pub struct MultipartiteTrace {
    /// Non-adjacency after each round, starting from the forbidden pairs.
    pub rounds: Vec<Graph>,
    pub certificate: Certificate,
}

/// Complete multipartite sandwich.
///
/// In a complete multipartite graph non-adjacency is transitive, so every
/// completion's non-edges contain the transitive closure of the forbidden
/// pairs. The closure is computed round by round; if it meets a forced pair
/// the answer is No, otherwise every pair outside the closure is an edge.
pub fn solve_multipartite(inst: &SandwichInstance) -> Certificate {
    multipartite_trace(inst).certificate
}

pub fn multipartite_trace(inst: &SandwichInstance) -> MultipartiteTrace {
    let n = inst.vertex_count();
    let mut non = Graph::from_pairs(n, inst.forbidden()).expect("validated instance");
    let mut rounds = vec![non.clone()];
    loop {
        let mut next = non.clone();
        for y in 0..n {
            let nb = non.row(y);
            for x in bits(nb) {
                for z in bits(nb & !(1 << x)) {
                    if !next.has_edge(x, z) {
                        next.add_edge(x, z).expect("distinct");
                    }
                }
            }
        }
        if next == non {
            break;
        }
        non = next;
        rounds.push(non.clone());
    }
    let certificate = if inst.forced().iter().any(|p| non.has_edge(p.lo(), p.hi())) {
        Certificate::No
    } else {
        Certificate::from_graph(&non.complement())
    };
    MultipartiteTrace { rounds, certificate }
}

/// Split sandwich as 2-SAT: `x_u` means `u` is on the clique side. A forced
/// pair cannot have both ends independent, a forbidden pair cannot have
/// both ends in the clique.
pub fn solve_split(inst: &SandwichInstance) -> Certificate {
    let n = inst.vertex_count();
    let mut sat = TwoSat::new(n);
    for p in inst.forced() {
        sat.clause(Lit::pos(p.lo()), Lit::pos(p.hi()));
    }
    for p in inst.forbidden() {
        sat.clause(Lit::neg(p.lo()), Lit::neg(p.hi()));
    }
    let Some(x) = sat.solve() else {
        return Certificate::No;
    };
    let mut g = inst.forced_graph().expect("validated instance");
    for u in 0..n {
        for v in u + 1..n {
            if x[u] && x[v] {
                g.add_edge(u, v).expect("distinct");
            }
        }
    }
    Certificate::from_graph(&g)
}

/// Tie-break for [`solve_threshold_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelOrder {
    Lowest,
    Highest,
}

/// Threshold sandwich by peeling: repeatedly remove a vertex with no forced
/// pair into the rest (it can be added back isolated) or no forbidden pair
/// into the rest (added back universal).
///
/// The class is hereditary and every threshold graph has an isolated or
/// universal vertex, so if any completion exists then every remaining
/// sub-instance still has a peelable vertex; the choice never matters.
pub fn solve_threshold(inst: &SandwichInstance) -> Certificate {
    solve_threshold_with(inst, PeelOrder::Lowest)
}

pub fn solve_threshold_with(inst: &SandwichInstance, order: PeelOrder) -> Certificate {
    let n = inst.vertex_count();
    let forced = inst.forced_graph().expect("validated instance");
    let forbidden = Graph::from_pairs(n, inst.forbidden()).expect("validated instance");
    let mut alive = mask_below(n);
    // (vertex, universal?) in removal order
    let mut peel = Vec::with_capacity(n);
    while alive != 0 {
        let pick = |u: &usize| {
            let u = *u;
            if forced.row(u) & alive == 0 {
                Some((u, false))
            } else if forbidden.row(u) & alive == 0 {
                Some((u, true))
            } else {
                None
            }
        };
        let found = match order {
            PeelOrder::Lowest => bits(alive).find_map(|u| pick(&u)),
            PeelOrder::Highest => bits(alive).collect::<Vec<_>>().iter().rev().find_map(pick),
        };
        let Some((u, universal)) = found else {
            return Certificate::No;
        };
        alive &= !(1 << u);
        peel.push((u, universal, alive));
    }
    let mut g = Graph::empty(n).expect("validated instance");
    for (u, universal, rest) in peel {
        if universal {
            for v in bits(rest) {
                g.add_edge(u, v).expect("distinct");
            }
        }
    }
    Certificate::from_graph(&g)
}
