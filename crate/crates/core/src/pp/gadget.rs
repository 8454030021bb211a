use std::collections::BTreeSet;

use super::builtins::grid_disequality;
use super::construction::PPConstruction;
use super::formula::{Compiled, PPFormula};
use crate::error::{Error, Result};
use crate::graph::Pair;
use crate::instance::SandwichInstance;
use crate::structure::{find_symbol, Constraint, StructureInstance};

/// Symbol name of a native disequality constraint.
pub const NEQ_SYMBOL: &str = "!=";

struct Builder<'a> {
    con: &'a PPConstruction,
    parent: Vec<usize>,
    constraints: Vec<Constraint>,
    neq: Option<Compiled>,
}

impl Builder<'_> {
    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Copies the formula's atoms with its free variables bound to `free`
    /// and fresh variables for the witnesses.
    fn instantiate(&mut self, f: &Compiled, free: &[usize]) -> Result<()> {
        let mut vars = free.to_vec();
        for _ in f.free..f.vars {
            vars.push(self.fresh());
        }
        for (sym, args) in &f.atoms {
            let name = self.con.source[*sym].name.clone();
            self.constraints.push(Constraint::new(name, args.iter().map(|&a| vars[a]).collect()));
        }
        for &(a, b) in &f.eqs {
            self.union(vars[a], vars[b]);
        }
        for &(a, b) in &f.neqs {
            let (x, y) = (vars[a], vars[b]);
            match self.neq.take() {
                Some(g) => {
                    let r = self.instantiate(&g, &[x, y]).and_then(|_| self.instantiate(&g, &[y, x]));
                    self.neq = Some(g);
                    r?;
                }
                None => self.constraints.push(Constraint::new(NEQ_SYMBOL, vec![x, y])),
            }
        }
        Ok(())
    }
}

/// Replaces each constraint of `inst` by the atoms of its defining formula.
///
/// Every target variable becomes `d` source variables. With an equivalence
/// formula each occurrence of a variable gets its own copy and consecutive
/// copies are linked by the formula; otherwise all occurrences share one
/// copy. Variables of the result are numbered so that target variable `x`
/// owns `x * d .. x * d + d` when no equalities merge them.
pub fn gadget_reduce(con: &PPConstruction, inst: &StructureInstance) -> Result<StructureInstance> {
    con.validate()?;
    let symbols = inst.resolve(&con.target)?;
    let neq = match &con.neq_gadget {
        Some(g) => Some(g.compile(&con.source)?),
        None => None,
    };
    let has_neqs = |f: &PPFormula| !f.neqs.is_empty();
    let any_neq = con.defs.iter().chain(&con.domain).chain(&con.equiv).any(has_neqs);
    if any_neq && neq.is_none() && find_symbol(&con.source, NEQ_SYMBOL).is_none() {
        return Err(Error::signature(
            "disequality needs a gadget or a native != in the source signature",
        ));
    }
    let defs = con.defs.iter().map(|f| f.compile(&con.source)).collect::<Result<Vec<_>>>()?;
    let domain = con.domain.as_ref().map(|f| f.compile(&con.source)).transpose()?;
    let equiv = con.equiv.as_ref().map(|f| f.compile(&con.source)).transpose()?;

    let d = con.dim;
    let mut b = Builder {
        con,
        parent: Vec::new(),
        constraints: Vec::new(),
        neq,
    };

    // copies[x] lists the copies of target variable x, one per occurrence
    let mut occurrences = vec![0usize; inst.var_count];
    if equiv.is_some() {
        for c in &inst.constraints {
            for &v in &c.vars {
                occurrences[v] += 1;
            }
        }
    }
    let mut copies: Vec<Vec<Vec<usize>>> = Vec::with_capacity(inst.var_count);
    for &occ in &occurrences {
        let list = (0..occ.max(1)).map(|_| (0..d).map(|_| b.fresh()).collect()).collect();
        copies.push(list);
    }

    if let Some(f) = &domain {
        for list in copies.clone() {
            for copy in list {
                b.instantiate(f, &copy)?;
            }
        }
    }
    if let Some(f) = &equiv {
        for list in copies.clone() {
            for w in list.windows(2) {
                b.instantiate(f, &[w[0].clone(), w[1].clone()].concat())?;
            }
        }
    }
    let mut used = vec![0usize; inst.var_count];
    for (c, &sym) in inst.constraints.iter().zip(&symbols) {
        let mut free = Vec::with_capacity(c.vars.len() * d);
        for &v in &c.vars {
            free.extend_from_slice(&copies[v][used[v]]);
            if equiv.is_some() {
                used[v] += 1;
            }
        }
        b.instantiate(&defs[sym], &free)?;
    }

    // compact union-find roots in order of first variable
    let total = b.parent.len();
    let mut id = vec![usize::MAX; total];
    let mut count = 0;
    for v in 0..total {
        let r = b.find(v);
        if id[r] == usize::MAX {
            id[r] = count;
            count += 1;
        }
    }
    let mut out = StructureInstance::new(count);
    for c in std::mem::take(&mut b.constraints) {
        let vars = c.vars.iter().map(|&v| id[b.find(v)]).collect();
        out.constraints.push(Constraint::new(c.symbol, vars));
    }
    Ok(out)
}

/// Result of [`gadget_to_sandwich`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetSandwich {
    Instance(SandwichInstance),
    /// The gadget output already contradicts itself: a coloured loop or a
    /// pair that is both blue and red. Every class rejects it.
    Infeasible(String),
}

impl GadgetSandwich {
    pub fn instance(&self) -> Option<&SandwichInstance> {
        match self {
            GadgetSandwich::Instance(i) => Some(i),
            GadgetSandwich::Infeasible(_) => None,
        }
    }
}

/// [`gadget_reduce`] for constructions over `{B, R}`, read back as a
/// sandwich instance with blue forced and red forbidden. Disequalities use
/// the construction's gadget, or `∃w B(w,x) ∧ R(w,y)` in both orientations
/// when it has none.
pub fn gadget_to_sandwich(con: &PPConstruction, inst: &StructureInstance) -> Result<GadgetSandwich> {
    for s in &con.source {
        let ok = s.arity == 2 && (s.name == "B" || s.name == "R");
        if !ok {
            return Err(Error::signature(format!(
                "source symbol {}/{} is not a pair colour",
                s.name, s.arity
            )));
        }
    }
    let mut con = con.clone();
    if con.neq_gadget.is_none() {
        let g = grid_disequality();
        if g.validate(&con.source).is_err() {
            return Err(Error::signature("disequality gadget needs both B and R"));
        }
        con.neq_gadget = Some(g);
    }
    let out = gadget_reduce(&con, inst)?;
    let mut blue = BTreeSet::new();
    let mut red = BTreeSet::new();
    for c in &out.constraints {
        let (u, v) = (c.vars[0], c.vars[1]);
        if u == v {
            return Ok(GadgetSandwich::Infeasible(format!("{} loop on vertex {}", c.symbol, u + 1)));
        }
        let p = Pair::new(u, v)?;
        if c.symbol == "B" {
            blue.insert(p);
        } else {
            red.insert(p);
        }
    }
    if let Some(p) = blue.intersection(&red).next() {
        return Ok(GadgetSandwich::Infeasible(format!("pair {p} is both blue and red")));
    }
    Ok(GadgetSandwich::Instance(SandwichInstance::from_sets(out.var_count, blue, red)?))
}
