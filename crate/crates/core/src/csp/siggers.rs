use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::hom::{hom_search_with, SearchControl};
use super::power::{decode, encode};
use crate::error::{Error, Result};
use crate::structure::{FiniteStructure, StructureInstance};

pub const SIGGERS_DOMAIN_CAP: usize = 4;
const NAIVE_CAP: u64 = 1_000_000;
const COMBINATION_CAP: u64 = 20_000_000;

/// An operation `D^arity -> D`, tabulated in the order of [`encode`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OpTable {
    pub domain: usize,
    pub arity: usize,
    pub values: Vec<usize>,
}

impl OpTable {
    pub fn constant(domain: usize, arity: usize, c: usize) -> Self {
        OpTable {
            domain,
            arity,
            values: vec![c; domain.pow(arity as u32)],
        }
    }

    pub fn projection(domain: usize, arity: usize, coord: usize) -> Self {
        let values = (0..domain.pow(arity as u32))
            .map(|code| decode(code, domain, arity)[coord])
            .collect();
        OpTable { domain, arity, values }
    }

    pub fn apply(&self, args: &[usize]) -> usize {
        self.values[encode(args, self.domain)]
    }
}

/// The two sides of the Siggers identity `f(a,r,e,a) = f(r,a,r,e)`.
fn siggers_sides(d: usize) -> impl Iterator<Item = ([usize; 4], [usize; 4])> {
    (0..d * d * d).map(move |code| {
        let (a, r, e) = (code / (d * d), code / d % d, code % d);
        ([a, r, e, a], [r, a, r, e])
    })
}

/// Searches a 4-ary Siggers polymorphism.
///
/// Cells of `D^4` identified by the identity are merged first. Each merged
/// cell becomes a variable ranging over `D`, and for every relation and
/// every choice of four of its tuples the column-wise cells must map into
/// the relation. That instance is solved against the template itself.
pub fn has_siggers(tmpl: &FiniteStructure) -> Result<Option<OpTable>> {
    has_siggers_with(tmpl, &SearchControl::default())
}

pub fn has_siggers_with(tmpl: &FiniteStructure, control: &SearchControl) -> Result<Option<OpTable>> {
    let d = tmpl.domain_size();
    if d > SIGGERS_DOMAIN_CAP {
        return Err(Error::size(format!(
            "Siggers search limited to domain {SIGGERS_DOMAIN_CAP}, got {d}"
        )));
    }
    let cells = d.pow(4);
    let mut parent: Vec<usize> = (0..cells).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (l, r) in siggers_sides(d) {
        let (a, b) = (find(&mut parent, encode(&l, d)), find(&mut parent, encode(&r, d)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut var_of = vec![usize::MAX; cells];
    let mut vars = 0;
    for c in 0..cells {
        let root = find(&mut parent, c);
        if var_of[root] == usize::MAX {
            var_of[root] = vars;
            vars += 1;
        }
        var_of[c] = var_of[root];
    }

    let mut inst = StructureInstance::new(vars);
    let mut seen = HashSet::new();
    for (idx, sym) in tmpl.signature().iter().enumerate() {
        let rel: Vec<&Vec<usize>> = tmpl.relation(idx).iter().collect();
        check_combinations(rel.len(), 4)?;
        for_each_choice(rel.len(), 4, |pick| {
            let scope: Vec<usize> = (0..sym.arity)
                .map(|pos| {
                    let column: Vec<usize> = pick.iter().map(|&i| rel[i][pos]).collect();
                    var_of[encode(&column, d)]
                })
                .collect();
            if seen.insert((idx, scope.clone())) {
                inst.constraints.push(crate::structure::Constraint::new(sym.name.clone(), scope));
            }
        });
    }
    let Some(map) = hom_search_with(&inst, tmpl, control)? else {
        return Ok(None);
    };
    Ok(Some(OpTable {
        domain: d,
        arity: 4,
        values: (0..cells).map(|c| map[var_of[c]]).collect(),
    }))
}

fn check_combinations(tuples: usize, arity: usize) -> Result<()> {
    match (tuples as u64).checked_pow(arity as u32) {
        Some(t) if t <= COMBINATION_CAP => Ok(()),
        _ => Err(Error::size(format!("{tuples}^{arity} tuple combinations"))),
    }
}

/// Calls `f` with every sequence of `k` indices below `m`.
fn for_each_choice(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if m == 0 && k > 0 {
        return;
    }
    let mut pick = vec![0usize; k];
    'next: loop {
        f(&pick);
        for i in (0..k).rev() {
            pick[i] += 1;
            if pick[i] < m {
                continue 'next;
            }
            pick[i] = 0;
        }
        return;
    }
}

/// Whether `op` preserves every relation, checked directly.
pub fn is_polymorphism(tmpl: &FiniteStructure, op: &OpTable) -> bool {
    if op.domain != tmpl.domain_size() || op.values.len() != op.domain.pow(op.arity as u32) {
        return false;
    }
    if op.values.iter().any(|&v| v >= op.domain) {
        return false;
    }
    tmpl.signature().iter().enumerate().all(|(idx, sym)| {
        let rel = tmpl.relation(idx);
        let rows: Vec<&Vec<usize>> = rel.iter().collect();
        let mut ok = true;
        for_each_choice(rows.len(), op.arity, |pick| {
            if !ok {
                return;
            }
            let image: Vec<usize> = (0..sym.arity)
                .map(|pos| {
                    let args: Vec<usize> = pick.iter().map(|&i| rows[i][pos]).collect();
                    op.apply(&args)
                })
                .collect();
            ok = rel.contains(&image);
        });
        ok
    })
}

/// Re-checks a claimed Siggers table cell by cell: the identity on every
/// `a, r, e` and preservation of every relation.
pub fn validate_siggers(tmpl: &FiniteStructure, op: &OpTable) -> bool {
    op.arity == 4
        && op.domain == tmpl.domain_size()
        && op.values.len() == op.domain.pow(4)
        && siggers_sides(op.domain).all(|(l, r)| op.apply(&l) == op.apply(&r))
        && is_polymorphism(tmpl, op)
}

/// Cell index tuples a relation must map into, with the relation.
type RelationCheck<'a> = (Vec<Vec<usize>>, &'a BTreeSet<Vec<usize>>);

/// Outcome of [`enumerate_polymorphisms_naive`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaiveReport {
    pub count: u64,
    /// The first few tables found, in enumeration order.
    pub samples: Vec<OpTable>,
}

/// Filters every operation table of the given arity; with `siggers` only
/// tables satisfying the Siggers identity are counted.
pub fn enumerate_polymorphisms_naive(tmpl: &FiniteStructure, arity: usize, siggers: bool) -> Result<NaiveReport> {
    let d = tmpl.domain_size();
    if siggers && arity != 4 {
        return Err(Error::Invalid("the Siggers identity is 4-ary".into()));
    }
    let cells = d.checked_pow(arity as u32).unwrap_or(usize::MAX);
    let total = (d as u64).checked_pow(cells as u32).filter(|&t| t <= NAIVE_CAP);
    let Some(total) = total else {
        return Err(Error::size(format!("{d}^({d}^{arity}) tables exceeds {NAIVE_CAP}")));
    };
    // Every column combination each relation contributes, as cell indices.
    let mut checks: Vec<RelationCheck> = Vec::new();
    for (idx, sym) in tmpl.signature().iter().enumerate() {
        let rel = tmpl.relation(idx);
        let rows: Vec<&Vec<usize>> = rel.iter().collect();
        check_combinations(rows.len(), arity)?;
        let mut combos = Vec::new();
        for_each_choice(rows.len(), arity, |pick| {
            combos.push(
                (0..sym.arity)
                    .map(|pos| {
                        let args: Vec<usize> = pick.iter().map(|&i| rows[i][pos]).collect();
                        encode(&args, d)
                    })
                    .collect::<Vec<usize>>(),
            );
        });
        checks.push((combos, rel));
    }
    let identity: Vec<(usize, usize)> = if siggers {
        siggers_sides(d).map(|(l, r)| (encode(&l, d), encode(&r, d))).collect()
    } else {
        Vec::new()
    };

    let mut report = NaiveReport {
        count: 0,
        samples: Vec::new(),
    };
    let mut values = vec![0usize; cells];
    for mut code in 0..total {
        for v in values.iter_mut() {
            *v = (code % d as u64) as usize;
            code /= d as u64;
        }
        if identity.iter().any(|&(l, r)| values[l] != values[r]) {
            continue;
        }
        let preserves = checks.iter().all(|(combos, rel)| {
            combos.iter().all(|cellv| {
                let image: Vec<usize> = cellv.iter().map(|&c| values[c]).collect();
                rel.contains(&image)
            })
        });
        if preserves {
            report.count += 1;
            if report.samples.len() < 4 {
                report.samples.push(OpTable {
                    domain: d,
                    arity,
                    values: values.clone(),
                });
            }
        }
    }
    Ok(report)
}
