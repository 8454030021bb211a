//! Ground truth by exhaustive completion enumeration, and a pruned
//! backtracking search that must agree with it.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Pair};
use crate::instance::SandwichInstance;
use crate::recognize::{pq_partition, ClassId};

/// Most undetermined pairs [`oracle_solve`] will enumerate over.
pub const ORACLE_CAP: usize = 25;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Tries every completion in binary counting order over the sorted
/// undetermined pairs, where pair `i` is present iff bit `k-1-i` of the
/// counter is clear. The first completion in the class is returned, which is
/// the lexicographically first when "present" sorts before "absent".
pub fn oracle_solve(inst: &SandwichInstance, cls: &ClassId) -> Result<Certificate> {
    let und = inst.undetermined_pairs();
    let k = und.len();
    if k > ORACLE_CAP {
        return Err(Error::size(format!(
            "{k} undetermined pairs, oracle limited to {ORACLE_CAP}"
        )));
    }
    let base = inst.forced_graph()?;
    for c in 0u64..1 << k {
        let mut rows = base.rows().to_vec();
        for (i, p) in und.iter().enumerate() {
            if c >> (k - 1 - i) & 1 == 0 {
                rows[p.lo()] |= 1 << p.hi();
                rows[p.hi()] |= 1 << p.lo();
            }
        }
        let g = Graph::from_rows(rows);
        if cls.contains(&g)? {
            return Ok(Certificate::from_graph(&g));
        }
    }
    Ok(Certificate::No)
}

/// Backtracking over the undetermined pairs in `(hi, lo)` order, trying
/// "present" first.
///
/// Every class here is hereditary, so once all pairs inside `{0..=w}` are
/// decided the induced prefix must already be in the class. For classes
/// given by finitely many obstructions a branch is also cut as soon as some
/// obstruction has all its edges decided present and all its non-edges
/// decided absent.
///
/// Exhausting `budget` search nodes yields [`Error::Budget`], never `No`.
pub fn search_solve(inst: &SandwichInstance, cls: &ClassId, budget: u64) -> Result<Certificate> {
    let n = inst.vertex_count();
    let mut order = inst.undetermined_pairs();
    order.sort_by_key(|p| (p.hi(), p.lo()));

    // checkpoint[i]: largest w whose prefix is fully decided after order[i].
    let first_open = |from: usize| order.get(from).map_or(n, |p| p.hi());
    let start_done = first_open(0);
    let checkpoint: Vec<Option<usize>> = (0..order.len())
        .map(|i| {
            let next = first_open(i + 1);
            (next > order[i].hi()).then(|| next - 1)
        })
        .collect();

    let present = inst.forced_graph()?;
    let absent = Graph::from_pairs(n, inst.forbidden())?;
    let mut s = Search {
        cls,
        order: &order,
        checkpoint: &checkpoint,
        patterns: cls.obstructions().unwrap_or_default(),
        present,
        absent,
        nodes: 0,
        budget,
    };
    if start_done > 0 && !s.prefix_ok(start_done - 1)? {
        return Ok(Certificate::No);
    }
    if s.patterns.iter().any(|f| trigraph_copy(f, &s.present, &s.absent, None)) {
        return Ok(Certificate::No);
    }
    if s.descend(0)? {
        Ok(Certificate::from_graph(&s.present))
    } else {
        Ok(Certificate::No)
    }
}

struct Search<'a> {
    cls: &'a ClassId,
    order: &'a [Pair],
    checkpoint: &'a [Option<usize>],
    patterns: Vec<Graph>,
    present: Graph,
    absent: Graph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn prefix_ok(&self, w: usize) -> Result<bool> {
        let mask = crate::graph::mask_below(w + 1);
        self.cls.contains(&self.present.induced_by_mask(mask))
    }

    fn descend(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let p = self.order[i];
        for take in [true, false] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget(self.budget));
            }
            if take {
                self.present.add_edge(p.lo(), p.hi())?;
            } else {
                self.absent.add_edge(p.lo(), p.hi())?;
            }
            let mut alive = !self
                .patterns
                .iter()
                .any(|f| trigraph_copy(f, &self.present, &self.absent, Some(p)));
            if alive {
                if let Some(w) = self.checkpoint[i] {
                    alive = self.prefix_ok(w)?;
                }
            }
            if alive && self.descend(i + 1)? {
                return Ok(true);
            }
            if take {
                self.present.remove_edge(p.lo(), p.hi())?;
            } else {
                self.absent.remove_edge(p.lo(), p.hi())?;
            }
        }
        Ok(false)
    }
}

/// Whether `pattern` occurs with every edge in `present` and every
/// non-edge in `absent`. With an anchor, only copies using that pair count.
fn trigraph_copy(pattern: &Graph, present: &Graph, absent: &Graph, anchor: Option<Pair>) -> bool {
    let k = pattern.vertex_count();
    if k > present.vertex_count() {
        return false;
    }
    let mut phi = vec![usize::MAX; k];
    let Some(pair) = anchor else {
        return extend_tri(pattern, present, absent, &mut phi, 0);
    };
    if k < 2 {
        return false;
    }
    let (u, v) = (pair.lo(), pair.hi());
    let want_edge = present.has_edge(u, v);
    for a in 0..k {
        for b in 0..k {
            if a == b || pattern.has_edge(a, b) != want_edge {
                continue;
            }
            phi[a] = u;
            phi[b] = v;
            let used = 1u64 << u | 1 << v;
            if extend_tri(pattern, present, absent, &mut phi, used) {
                return true;
            }
            phi[a] = usize::MAX;
            phi[b] = usize::MAX;
        }
    }
    false
}

fn extend_tri(pattern: &Graph, present: &Graph, absent: &Graph, phi: &mut [usize], used: u64) -> bool {
    let Some(c) = phi.iter().position(|&x| x == usize::MAX) else {
        return true;
    };
    let host_all = crate::graph::mask_below(present.vertex_count());
    for x in bits(host_all & !used) {
        let fits = (0..phi.len()).all(|d| {
            let y = phi[d];
            if y == usize::MAX || d == c {
                return true;
            }
            if pattern.has_edge(c, d) {
                present.has_edge(x, y)
            } else {
                absent.has_edge(x, y)
            }
        });
        if !fits {
            continue;
        }
        phi[c] = x;
        if extend_tri(pattern, present, absent, phi, used | 1 << x) {
            return true;
        }
        phi[c] = usize::MAX;
    }
    false
}

/// Exact (p,q)-split sandwich by partition search: take every allowed pair
/// inside the low-independence side and only forced pairs elsewhere.
pub fn pq_split_sandwich(inst: &SandwichInstance, p: usize, q: usize) -> Result<Certificate> {
    let allowed = inst.allowed_graph()?;
    let forced = inst.forced_graph()?;
    let Some(a) = pq_partition(&allowed, &forced, p, q)? else {
        return Ok(Certificate::No);
    };
    let mut g = forced;
    for u in bits(a) {
        for v in bits(allowed.row(u) & a) {
            g.add_edge(u, v)?;
        }
    }
    Ok(Certificate::from_graph(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::validate;

    fn c4_edges() -> Vec<(usize, usize)> {
        vec![(0, 1), (1, 2), (2, 3), (0, 3)]
    }

    #[test]
    fn oracle_examples() {
        let inst = SandwichInstance::new(4, c4_edges(), [(0, 2), (1, 3)]).unwrap();
        assert_eq!(oracle_solve(&inst, &ClassId::Split).unwrap(), Certificate::No);
        let inst = SandwichInstance::new(4, c4_edges(), []).unwrap();
        let k4 = Graph::complete(4).unwrap().edges();
        assert_eq!(oracle_solve(&inst, &ClassId::Split).unwrap(), Certificate::CompletionYes(k4));
        let one = SandwichInstance::free(1);
        for cls in [ClassId::Split, ClassId::Permutation, ClassId::LineOfBipartite] {
            assert_eq!(oracle_solve(&one, &cls).unwrap(), Certificate::CompletionYes(vec![]));
        }
        assert!(matches!(
            oracle_solve(&SandwichInstance::free(8), &ClassId::Split),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn search_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let inst = SandwichInstance::from_graph(&c5);
        let cls = ClassId::f_free(vec![c5.clone()]).unwrap();
        assert_eq!(search_solve(&inst, &cls, DEFAULT_BUDGET).unwrap(), Certificate::No);

        let ramsey = ClassId::f_free(vec![Graph::complete(3).unwrap(), Graph::empty(3).unwrap()]).unwrap();
        assert_eq!(
            search_solve(&SandwichInstance::free(6), &ramsey, DEFAULT_BUDGET).unwrap(),
            Certificate::No
        );
        assert_eq!(oracle_solve(&SandwichInstance::free(6), &ramsey).unwrap(), Certificate::No);
        let five = SandwichInstance::free(5);
        let cert = search_solve(&five, &ramsey, DEFAULT_BUDGET).unwrap();
        validate(&five, &cert, &ramsey).unwrap();
        let edges = cert.completion().unwrap();
        let g = Graph::from_pairs(5, edges).unwrap();
        assert!(crate::iso::is_isomorphic_small(&g, &c5).unwrap());
    }

    #[test]
    fn budget_is_reported_distinctly() {
        let ramsey = ClassId::f_free(vec![Graph::complete(3).unwrap(), Graph::empty(3).unwrap()]).unwrap();
        assert_eq!(
            search_solve(&SandwichInstance::free(6), &ramsey, 5),
            Err(Error::Budget(5))
        );
    }

    #[test]
    fn search_agrees_with_oracle_on_all_four_vertex_instances() {
        let classes = [
            ClassId::Split,
            ClassId::Threshold,
            ClassId::CompleteMultipartite,
            ClassId::Permutation,
            ClassId::PnKkFree(4, 3),
            ClassId::LineOfBipartite,
        ];
        for inst in crate::gen::all_instances(4) {
            for cls in &classes {
                let a = oracle_solve(&inst, cls).unwrap();
                let b = search_solve(&inst, cls, DEFAULT_BUDGET).unwrap();
                assert_eq!(a.is_yes(), b.is_yes(), "{cls} {inst:?}");
                validate(&inst, &b, cls).unwrap();
            }
        }
    }

    #[test]
    fn pq_sandwich_agrees_with_oracle() {
        for inst in crate::gen::all_instances(4) {
            for (p, q) in [(1, 1), (1, 2), (2, 1)] {
                let cls = ClassId::PqSplit(p, q);
                let a = oracle_solve(&inst, &cls).unwrap();
                let b = pq_split_sandwich(&inst, p, q).unwrap();
                assert_eq!(a.is_yes(), b.is_yes());
                validate(&inst, &b, &cls).unwrap();
            }
        }
    }

    #[test]
    fn determinism() {
        let inst = SandwichInstance::new(5, [(0, 1), (2, 3)], [(1, 2)]).unwrap();
        let a = oracle_solve(&inst, &ClassId::Threshold).unwrap();
        let b = oracle_solve(&inst, &ClassId::Threshold).unwrap();
        assert_eq!(a, b);
    }
}
