//! 2-SAT by strongly connected components of the implication graph.

/// A literal: variable index and polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, positive: false }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    fn negate(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TwoSat {
    vars: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            implications: vec![Vec::new(); 2 * vars],
        }
    }

    /// Adds the clause `a ∨ b`.
    pub fn clause(&mut self, a: Lit, b: Lit) {
        self.implications[a.negate().node()].push(b.node());
        self.implications[b.negate().node()].push(a.node());
    }

    /// A satisfying assignment, or `None`.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan(&self.implications);
        (0..self.vars)
            .map(|v| {
                let (t, f) = (comp[2 * v], comp[2 * v + 1]);
                // Tarjan numbers components in reverse topological order.
                (t != f).then_some(t < f)
            })
            .collect()
    }
}

/// Iterative Tarjan; returns the component index of each node.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(&(v, edge)) = call.last() {
            if edge == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(edge) {
                call.last_mut().expect("nonempty").1 += 1;
                if index[w] == usize::MAX {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn satisfies(clauses: &[(Lit, Lit)], a: &[bool]) -> bool {
        let val = |l: Lit| a[l.var] == l.positive;
        clauses.iter().all(|&(x, y)| val(x) || val(y))
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let vars = rng.random_range(1..6);
            let m = rng.random_range(0..10);
            let lit = |rng: &mut rand_chacha::ChaCha8Rng| Lit {
                var: rng.random_range(0..vars),
                positive: rng.random_bool(0.5),
            };
            let clauses: Vec<(Lit, Lit)> = (0..m).map(|_| (lit(&mut rng), lit(&mut rng))).collect();
            let mut sat = TwoSat::new(vars);
            for &(a, b) in &clauses {
                sat.clause(a, b);
            }
            let brute = (0u32..1 << vars).any(|m| {
                let a: Vec<bool> = (0..vars).map(|v| m >> v & 1 == 1).collect();
                satisfies(&clauses, &a)
            });
            match sat.solve() {
                Some(a) => assert!(satisfies(&clauses, &a)),
                None => assert!(!brute),
            }
        }
    }

    #[test]
    fn contradiction() {
        let mut sat = TwoSat::new(1);
        sat.clause(Lit::pos(0), Lit::pos(0));
        sat.clause(Lit::neg(0), Lit::neg(0));
        assert!(sat.solve().is_none());
    }
}
