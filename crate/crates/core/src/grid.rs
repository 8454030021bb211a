//! Maps of 2-edge-coloured instances into a finite rook's grid: `B` holds
//! between points sharing exactly one coordinate, `R` between points sharing
//! none.

use crate::error::{Error, Result};
use crate::pp::NEQ_SYMBOL;
use crate::structure::StructureInstance;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Blue,
    Red,
    Neq,
}

fn holds(rel: Rel, a: (usize, usize), b: (usize, usize)) -> bool {
    let same = (a.0 == b.0) as u8 + (a.1 == b.1) as u8;
    match rel {
        Rel::Blue => same == 1,
        Rel::Red => same == 0,
        Rel::Neq => same < 2,
    }
}

/// Searches a map of `inst` into the `m x m` grid. Constraints use the
/// symbols `B`, `R` and `!=`.
///
/// Rows and columns are introduced in increasing order, which is no loss
/// since the grid relations are invariant under permuting rows or columns.
/// The next vertex is always one with the fewest consistent positions.
pub fn grid_map(inst: &StructureInstance, m: usize, node_limit: u64) -> Result<Option<Vec<(usize, usize)>>> {
    let n = inst.var_count;
    let mut adj: Vec<Vec<(usize, Rel)>> = vec![Vec::new(); n];
    for c in &inst.constraints {
        let rel = match c.symbol.as_str() {
            "B" => Rel::Blue,
            "R" => Rel::Red,
            s if s == NEQ_SYMBOL => Rel::Neq,
            s => return Err(Error::signature(format!("grid maps take B, R and !=, got {s}"))),
        };
        let [u, v] = c.vars[..] else {
            return Err(Error::signature(format!("{} must be binary", c.symbol)));
        };
        if u >= n || v >= n {
            return Err(Error::range(format!("variable outside 0..{n}")));
        }
        if u == v {
            // no grid relation is reflexive
            return Ok(None);
        }
        adj[u].push((v, rel));
        adj[v].push((u, rel));
    }

    let mut s = Placer {
        adj: &adj,
        m,
        pos: vec![None; n],
        nodes: 0,
        limit: node_limit,
    };
    if s.place(0, 0, 0)? {
        Ok(Some(s.pos.into_iter().map(|p| p.expect("all placed")).collect()))
    } else {
        Ok(None)
    }
}

struct Placer<'a> {
    adj: &'a [Vec<(usize, Rel)>],
    m: usize,
    pos: Vec<Option<(usize, usize)>>,
    nodes: u64,
    limit: u64,
}

impl Placer<'_> {
    fn candidates(&self, v: usize, rows: usize, cols: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..(rows + 1).min(self.m) {
            for c in 0..(cols + 1).min(self.m) {
                let ok = self.adj[v]
                    .iter()
                    .all(|&(u, rel)| self.pos[u].is_none_or(|p| holds(rel, (r, c), p)));
                if ok {
                    out.push((r, c));
                }
            }
        }
        out
    }

    fn place(&mut self, placed: usize, rows: usize, cols: usize) -> Result<bool> {
        if placed == self.pos.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Budget(self.limit));
        }
        // Fewest positions first, preferring vertices tied to placed ones; an
        // unplaceable vertex fails the branch at once.
        let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
        let mut best_key = (usize::MAX, usize::MAX);
        for v in 0..self.pos.len() {
            if self.pos[v].is_some() {
                continue;
            }
            let cands = self.candidates(v, rows, cols);
            if cands.is_empty() {
                return Ok(false);
            }
            let free_nbrs = self.adj[v].iter().filter(|&&(u, _)| self.pos[u].is_none()).count();
            let tied = self.adj[v].len() - free_nbrs;
            let key = (cands.len(), usize::MAX - tied);
            if key < best_key {
                best_key = key;
                best = Some((v, cands));
            }
        }
        let (v, cands) = best.expect("an unplaced vertex exists");
        for (r, c) in cands {
            self.pos[v] = Some((r, c));
            if self.place(placed + 1, rows.max(r + 1), cols.max(c + 1))? {
                return Ok(true);
            }
        }
        self.pos[v] = None;
        Ok(false)
    }
}

/// Checks a claimed grid map against every constraint.
pub fn validate_grid_map(inst: &StructureInstance, map: &[(usize, usize)]) -> bool {
    map.len() == inst.var_count
        && inst.constraints.iter().all(|c| {
            let rel = match c.symbol.as_str() {
                "B" => Rel::Blue,
                "R" => Rel::Red,
                s if s == NEQ_SYMBOL => Rel::Neq,
                _ => return false,
            };
            c.vars.len() == 2 && holds(rel, map[c.vars[0]], map[c.vars[1]])
        })
}
