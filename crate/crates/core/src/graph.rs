//! Simple undirected graphs on dense vertex labels `0..n` with one-word
//! adjacency rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold: one adjacency row is one `u64`.
pub const MAX_VERTICES: usize = 64;

/// An unordered pair `{u, v}` with `u != v`, stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair(usize, usize);

impl Pair {
    pub fn new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::range(format!("self-pair {{{u},{u}}}")));
        }
        Ok(Pair(u.min(v), u.max(v)))
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// All pairs `{u, v}` over `0..n`, in lexicographic order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| Pair(u, v)))
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::size(format!(
                "graph on {n} vertices exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_pairs<'a, I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Pair>,
    {
        Graph::from_edges(n, pairs.into_iter().map(|p| (p.lo(), p.hi())))
    }

    /// Builds a graph directly from adjacency rows; rows must be symmetric
    /// and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        debug_assert!(rows.iter().enumerate().all(|(u, r)| r & (1 << u) == 0));
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = mask_below(n);
        for (u, row) in g.adj.iter_mut().enumerate() {
            *row = full & !(1 << u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::range(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Result<Self> {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
    }

    /// `k` disjoint copies of `K2`.
    pub fn matching(k: usize) -> Result<Self> {
        Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edge_iter()
                .chain(other.edge_iter().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::range(format!(
                "pair ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::range(format!("self-pair ({u},{u})")));
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[u])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edge_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !mask_below(u + 1)).map(move |v| (u, v)))
    }

    /// Edges as normalized pairs, sorted lexicographically.
    pub fn edges(&self) -> Vec<Pair> {
        self.edge_iter().map(|(u, v)| Pair(u, v)).collect()
    }

    /// Non-adjacent pairs, sorted lexicographically.
    pub fn non_edges(&self) -> Vec<Pair> {
        all_pairs(self.n)
            .filter(|p| !self.has_edge(p.lo(), p.hi()))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let full = mask_below(self.n);
        Graph {
            n: self.n,
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(u, r)| !r & full & !(1 << u))
                .collect(),
        }
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the order
    /// given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::range(format!("vertex {v} out of range for {} vertices", self.n)));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::range(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
        let mut rows = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// Induced subgraph on a vertex bitmask, keeping label order.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let vs: Vec<usize> = bits(mask & mask_below(self.n)).collect();
        self.induced_subgraph(&vs).expect("mask vertices are in range")
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbours(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        let mut first = true;
        for (u, v) in self.edge_iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// Iterates the set bits of `word`, lowest first.
pub fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}
