//! Exhaustive and seeded instance generation. Random draws use ChaCha8
//! seeded from a 64-bit integer, so every suite is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph, Pair};
use crate::instance::SandwichInstance;
use crate::structure::{FiniteStructure, Signature};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every instance on `n` vertices: each pair undetermined, forced or
/// forbidden, counted in base 3 with the first pair most significant.
pub fn all_instances(n: usize) -> impl Iterator<Item = SandwichInstance> {
    let pairs: Vec<Pair> = all_pairs(n).collect();
    let total = 3u64.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut forced = std::collections::BTreeSet::new();
        let mut forbidden = std::collections::BTreeSet::new();
        for p in pairs.iter().rev() {
            match code % 3 {
                1 => forced.insert(*p),
                2 => forbidden.insert(*p),
                _ => false,
            };
            code /= 3;
        }
        SandwichInstance::from_sets(n, forced, forbidden).expect("disjoint by construction")
    })
}

/// Each pair forced with probability `p_forced`, else forbidden with
/// probability `p_forbidden`, else undetermined. One uniform draw per pair
/// in lexicographic order.
pub fn random_instance<R: Rng>(rng: &mut R, n: usize, p_forced: f64, p_forbidden: f64) -> Result<SandwichInstance> {
    let ok = |p: f64| (0.0..=1.0).contains(&p);
    if !ok(p_forced) || !ok(p_forbidden) || p_forced + p_forbidden > 1.0 + 1e-12 {
        return Err(Error::range(format!(
            "probabilities {p_forced} and {p_forbidden} must be in [0,1] and sum to at most 1"
        )));
    }
    let mut forced = Vec::new();
    let mut forbidden = Vec::new();
    for p in all_pairs(n) {
        let x: f64 = rng.random();
        if x < p_forced {
            forced.push((p.lo(), p.hi()));
        } else if x < p_forced + p_forbidden {
            forbidden.push((p.lo(), p.hi()));
        }
    }
    SandwichInstance::new(n, forced, forbidden)
}

/// [`random_instance`] from a fresh generator seeded with `seed`.
pub fn gen_instance(n: usize, p_forced: f64, p_forbidden: f64, seed: u64) -> Result<SandwichInstance> {
    random_instance(&mut rng(seed), n, p_forced, p_forbidden)
}

/// `count` instances on `n` vertices whose forced and forbidden densities
/// are themselves drawn per instance, covering sparse and dense cases.
pub fn mixed_instances(n: usize, count: usize, seed: u64) -> Vec<SandwichInstance> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let pf: f64 = r.random_range(0.0..0.6);
            let pn = r.random_range(0.0..(1.0 - pf).min(0.6));
            random_instance(&mut r, n, pf, pn).expect("valid probabilities")
        })
        .collect()
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for q in all_pairs(n) {
        if rng.random_bool(p) {
            g.add_edge(q.lo(), q.hi())?;
        }
    }
    Ok(g)
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random structure over `sig`: every tuple enters its relation with
/// probability `density`.
pub fn random_structure<R: Rng>(rng: &mut R, domain: usize, sig: &Signature, density: f64) -> Result<FiniteStructure> {
    let mut s = FiniteStructure::new(domain, sig.clone())?;
    for sym in sig {
        let total = domain.pow(sym.arity as u32);
        for code in 0..total {
            if rng.random_bool(density) {
                s.add_tuple(&sym.name, crate::csp::decode(code, domain, sym.arity))?;
            }
        }
    }
    Ok(s)
}

/// Every graph on `n` vertices, labelled.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Pair> = all_pairs(n).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_pairs(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p))
            .expect("in range")
    })
}
