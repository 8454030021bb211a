use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::bits;
use crate::structure::{FiniteStructure, StructureInstance};

/// Largest template domain the bitset propagator handles.
pub const HOM_DOMAIN_CAP: usize = 64;

/// Node limit and cooperative cancellation for long searches.
#[derive(Debug, Clone, Default)]
pub struct SearchControl {
    pub node_limit: Option<u64>,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl SearchControl {
    pub fn with_limit(limit: u64) -> Self {
        SearchControl {
            node_limit: Some(limit),
            cancel: None,
        }
    }
}

/// Homomorphism search with no limit.
pub fn hom_search(inst: &StructureInstance, tmpl: &FiniteStructure) -> Result<Certificate> {
    Ok(match hom_search_with(inst, tmpl, &SearchControl::default())? {
        Some(map) => Certificate::HomYes(map),
        None => Certificate::No,
    })
}

/// Backtracking with generalized arc consistency on bitset domains. Picks
/// the unassigned variable with the smallest domain (lowest index on ties)
/// and tries values from the lowest.
pub fn hom_search_with(
    inst: &StructureInstance,
    tmpl: &FiniteStructure,
    control: &SearchControl,
) -> Result<Option<Vec<usize>>> {
    let symbols = inst.resolve(tmpl.signature())?;
    let d = tmpl.domain_size();
    if d > HOM_DOMAIN_CAP {
        return Err(Error::size(format!(
            "template domain {d} exceeds {HOM_DOMAIN_CAP}"
        )));
    }
    let full = crate::graph::mask_below(d);
    let mut cons = Vec::with_capacity(inst.constraints.len());
    for (c, &sym) in inst.constraints.iter().zip(&symbols) {
        // Drop tuples that disagree where a variable repeats.
        let tuples: Vec<Vec<usize>> = tmpl
            .relation(sym)
            .iter()
            .filter(|t| {
                (0..c.vars.len()).all(|i| (0..i).all(|j| c.vars[i] != c.vars[j] || t[i] == t[j]))
            })
            .cloned()
            .collect();
        cons.push(Con {
            vars: c.vars.clone(),
            tuples,
        });
    }
    let mut watch = vec![Vec::new(); inst.var_count];
    for (ci, c) in cons.iter().enumerate() {
        let mut vs = c.vars.clone();
        vs.sort_unstable();
        vs.dedup();
        for v in vs {
            watch[v].push(ci);
        }
    }
    let mut solver = Solver {
        cons,
        watch,
        nodes: 0,
        control,
    };
    let mut dom = vec![full; inst.var_count];
    let all: Vec<usize> = (0..solver.cons.len()).collect();
    if !solver.propagate(&mut dom, all) {
        return Ok(None);
    }
    solver.search(dom)
}

struct Con {
    vars: Vec<usize>,
    tuples: Vec<Vec<usize>>,
}

struct Solver<'a> {
    cons: Vec<Con>,
    watch: Vec<Vec<usize>>,
    nodes: u64,
    control: &'a SearchControl,
}

impl Solver<'_> {
    /// Prunes domains to supported values; false on a wipe-out.
    fn propagate(&self, dom: &mut [u64], initial: Vec<usize>) -> bool {
        let mut queued = vec![false; self.cons.len()];
        let mut queue = std::collections::VecDeque::new();
        for ci in initial {
            if !queued[ci] {
                queued[ci] = true;
                queue.push_back(ci);
            }
        }
        while let Some(ci) = queue.pop_front() {
            queued[ci] = false;
            let c = &self.cons[ci];
            let mut support = vec![0u64; c.vars.len()];
            for t in &c.tuples {
                if c.vars.iter().zip(t).all(|(&v, &x)| dom[v] >> x & 1 == 1) {
                    for (s, &x) in support.iter_mut().zip(t) {
                        *s |= 1 << x;
                    }
                }
            }
            for (i, &v) in c.vars.iter().enumerate() {
                // Repeated variables see the intersection of their supports.
                let narrowed = dom[v] & support[i];
                if narrowed == dom[v] {
                    continue;
                }
                if narrowed == 0 {
                    return false;
                }
                dom[v] = narrowed;
                for &cj in &self.watch[v] {
                    if !queued[cj] && cj != ci {
                        queued[cj] = true;
                        queue.push_back(cj);
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, dom: Vec<u64>) -> Result<Option<Vec<usize>>> {
        let pick = (0..dom.len())
            .filter(|&v| dom[v].count_ones() > 1)
            .min_by_key(|&v| (dom[v].count_ones(), v));
        let Some(v) = pick else {
            return Ok(Some(dom.iter().map(|m| m.trailing_zeros() as usize).collect()));
        };
        for x in bits(dom[v]) {
            self.nodes += 1;
            if let Some(limit) = self.control.node_limit {
                if self.nodes > limit {
                    return Err(Error::Budget(limit));
                }
            }
            if let Some(flag) = &self.control.cancel {
                if flag.load(Ordering::Relaxed) {
                    return Err(Error::Budget(self.nodes));
                }
            }
            let mut next = dom.clone();
            next[v] = 1 << x;
            if self.propagate(&mut next, self.watch[v].clone()) {
                if let Some(map) = self.search(next)? {
                    return Ok(Some(map));
                }
            }
        }
        Ok(None)
    }
}

/// Brute force over all maps, for cross-checks at tiny scale.
pub fn hom_exists_brute(inst: &StructureInstance, tmpl: &FiniteStructure) -> Result<bool> {
    let d = tmpl.domain_size();
    let n = inst.var_count;
    let total = (d as u64).checked_pow(n as u32).filter(|&t| t <= 10_000_000);
    let Some(total) = total else {
        return Err(Error::size(format!("{d}^{n} maps")));
    };
    let mut map = vec![0usize; n];
    for mut code in 0..total {
        for slot in map.iter_mut() {
            *slot = (code % d as u64) as usize;
            code /= d as u64;
        }
        if inst.is_homomorphism(tmpl, &map)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::structure::{clique, struct_a, COLOUR_B};
    use rand::{Rng, SeedableRng};

    #[test]
    fn examples() {
        let tri = StructureInstance::from_graph(&Graph::complete(3).unwrap());
        assert!(hom_search(&tri, &clique(3)).unwrap().is_yes());
        assert_eq!(hom_search(&tri, &clique(2)).unwrap(), Certificate::No);

        let mut inst = StructureInstance::new(3);
        inst.push("T", vec![0, 1, 2]).unwrap();
        for v in 0..3 {
            inst.push("U_E", vec![v]).unwrap();
        }
        assert_eq!(
            hom_search(&inst, &struct_a()).unwrap(),
            Certificate::HomYes(vec![COLOUR_B; 3])
        );
    }

    #[test]
    fn signature_errors() {
        let tri = StructureInstance::from_graph(&Graph::complete(3).unwrap());
        assert!(matches!(hom_search(&tri, &struct_a()), Err(Error::Signature(_))));
    }

    #[test]
    fn limit_is_reported() {
        // K5 into K4 needs search before failing.
        let k5 = StructureInstance::from_graph(&Graph::complete(5).unwrap());
        let r = hom_search_with(&k5, &clique(4), &SearchControl::with_limit(2));
        assert_eq!(r, Err(Error::Budget(2)));
    }

    fn random_template(rng: &mut impl Rng, d: usize) -> FiniteStructure {
        let sig = vec![
            crate::structure::Symbol::new("P", 1),
            crate::structure::Symbol::new("Q", 2),
            crate::structure::Symbol::new("S", 3),
        ];
        let mut t = FiniteStructure::new(d, sig).unwrap();
        for x in 0..d {
            if rng.random_bool(0.6) {
                t.add_tuple("P", vec![x]).unwrap();
            }
            for y in 0..d {
                if rng.random_bool(0.5) {
                    t.add_tuple("Q", vec![x, y]).unwrap();
                }
                for z in 0..d {
                    if rng.random_bool(0.3) {
                        t.add_tuple("S", vec![x, y, z]).unwrap();
                    }
                }
            }
        }
        t
    }

    fn random_instance(rng: &mut impl Rng, n: usize) -> StructureInstance {
        let mut inst = StructureInstance::new(n);
        for _ in 0..rng.random_range(0..8) {
            let (sym, k) = [("P", 1), ("Q", 2), ("S", 3)][rng.random_range(0..3)];
            let vars = (0..k).map(|_| rng.random_range(0..n)).collect();
            inst.push(sym, vars).unwrap();
        }
        inst
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..600 {
            let d = rng.random_range(1..=3);
            let n = rng.random_range(1..=6);
            let t = random_template(&mut rng, d);
            let inst = random_instance(&mut rng, n);
            let cert = hom_search(&inst, &t).unwrap();
            assert_eq!(cert.is_yes(), hom_exists_brute(&inst, &t).unwrap());
            crate::certificate::validate_hom(&inst, &t, &cert).unwrap();
        }
    }
}
