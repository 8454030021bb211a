//! Sandwich instances `(V, E, N)` and their 2-edge-coloured twin `(V, B, R)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph, Pair};

/// A sandwich instance: vertex count plus disjoint forced and forbidden
/// pair sets. Everything not mentioned is undetermined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SandwichInstance {
    n: usize,
    forced: BTreeSet<Pair>,
    forbidden: BTreeSet<Pair>,
}

/// A 2-edge-coloured graph: blue and red are disjoint symmetric relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColouredGraph {
    pub n: usize,
    pub blue: BTreeSet<Pair>,
    pub red: BTreeSet<Pair>,
}

fn normalize<I>(n: usize, raw: I) -> Result<BTreeSet<Pair>>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    raw.into_iter()
        .map(|(u, v)| {
            if u >= n || v >= n {
                return Err(Error::range(format!(
                    "pair ({u},{v}) out of range for {n} vertices"
                )));
            }
            Pair::new(u, v)
        })
        .collect()
}

impl SandwichInstance {
    /// Validates and normalizes raw pair lists. Duplicates are merged.
    pub fn new<F, N>(n: usize, forced: F, forbidden: N) -> Result<Self>
    where
        F: IntoIterator<Item = (usize, usize)>,
        N: IntoIterator<Item = (usize, usize)>,
    {
        let forced = normalize(n, forced)?;
        let forbidden = normalize(n, forbidden)?;
        Self::from_sets(n, forced, forbidden)
    }

    pub fn from_sets(n: usize, forced: BTreeSet<Pair>, forbidden: BTreeSet<Pair>) -> Result<Self> {
        for p in forced.iter().chain(&forbidden) {
            if p.hi() >= n {
                return Err(Error::range(format!("pair {p} out of range for {n} vertices")));
            }
        }
        if let Some(p) = forced.intersection(&forbidden).next() {
            return Err(Error::Overlap(*p));
        }
        Ok(SandwichInstance {
            n,
            forced,
            forbidden,
        })
    }

    /// Instance with no constraints at all.
    pub fn free(n: usize) -> Self {
        SandwichInstance {
            n,
            forced: BTreeSet::new(),
            forbidden: BTreeSet::new(),
        }
    }

    /// The fully determined instance whose only completion is `g`.
    pub fn from_graph(g: &Graph) -> Self {
        SandwichInstance {
            n: g.vertex_count(),
            forced: g.edges().into_iter().collect(),
            forbidden: g.non_edges().into_iter().collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn forced(&self) -> &BTreeSet<Pair> {
        &self.forced
    }

    pub fn forbidden(&self) -> &BTreeSet<Pair> {
        &self.forbidden
    }

    pub fn is_forced(&self, p: Pair) -> bool {
        self.forced.contains(&p)
    }

    pub fn is_forbidden(&self, p: Pair) -> bool {
        self.forbidden.contains(&p)
    }

    /// Pairs in neither set, sorted lexicographically.
    pub fn undetermined_pairs(&self) -> Vec<Pair> {
        all_pairs(self.n)
            .filter(|p| !self.forced.contains(p) && !self.forbidden.contains(p))
            .collect()
    }

    /// Forced and forbidden swapped.
    pub fn complement(&self) -> Self {
        SandwichInstance {
            n: self.n,
            forced: self.forbidden.clone(),
            forbidden: self.forced.clone(),
        }
    }

    /// The forced edges as a graph.
    pub fn forced_graph(&self) -> Result<Graph> {
        Graph::from_pairs(self.n, &self.forced)
    }

    /// The graph of every pair that is not forbidden.
    pub fn allowed_graph(&self) -> Result<Graph> {
        Ok(Graph::from_pairs(self.n, &self.forbidden)?.complement())
    }

    /// The sub-instance induced by the first `k` vertices.
    pub fn prefix(&self, k: usize) -> Self {
        let keep = |p: &&Pair| p.hi() < k;
        SandwichInstance {
            n: k.min(self.n),
            forced: self.forced.iter().filter(keep).copied().collect(),
            forbidden: self.forbidden.iter().filter(keep).copied().collect(),
        }
    }

    pub fn to_coloured(&self) -> ColouredGraph {
        ColouredGraph {
            n: self.n,
            blue: self.forced.clone(),
            red: self.forbidden.clone(),
        }
    }
}

impl ColouredGraph {
    pub fn into_instance(self) -> Result<SandwichInstance> {
        SandwichInstance::from_sets(self.n, self.blue, self.red)
    }
}

impl TryFrom<ColouredGraph> for SandwichInstance {
    type Error = Error;

    fn try_from(g: ColouredGraph) -> Result<Self> {
        g.into_instance()
    }
}

impl From<&SandwichInstance> for ColouredGraph {
    fn from(inst: &SandwichInstance) -> Self {
        inst.to_coloured()
    }
}
