use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{find_symbol, FiniteStructure, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub symbol: String,
    pub args: Vec<String>,
}

/// `∃ exist . (atoms ∧ eqs ∧ neqs)` with the listed free variables.
/// Disequalities are an extension beyond plain pp-formulas; they are
/// evaluated natively or replaced by a gadget, see
/// [`super::PPConstruction::neq_gadget`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPFormula {
    pub free: Vec<String>,
    pub exist: Vec<String>,
    pub atoms: Vec<Atom>,
    pub eqs: Vec<(String, String)>,
    pub neqs: Vec<(String, String)>,
}

impl PPFormula {
    pub fn new(free: &[&str], exist: &[&str]) -> Self {
        PPFormula {
            free: free.iter().map(|s| s.to_string()).collect(),
            exist: exist.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn atom(mut self, symbol: &str, args: &[&str]) -> Self {
        self.atoms.push(Atom {
            symbol: symbol.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn eq(mut self, a: &str, b: &str) -> Self {
        self.eqs.push((a.to_string(), b.to_string()));
        self
    }

    pub fn neq(mut self, a: &str, b: &str) -> Self {
        self.neqs.push((a.to_string(), b.to_string()));
        self
    }

    pub fn var_count(&self) -> usize {
        self.free.len() + self.exist.len()
    }

    /// Variables numbered free first, then existential.
    pub(crate) fn compile(&self, sig: &[Symbol]) -> Result<Compiled> {
        let mut index = HashMap::new();
        for (i, v) in self.free.iter().chain(&self.exist).enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::Invalid(format!("variable {v} declared twice")));
            }
        }
        let var = |v: &String| {
            index
                .get(v.as_str())
                .copied()
                .ok_or_else(|| Error::Invalid(format!("undeclared variable {v}")))
        };
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for a in &self.atoms {
            let sym = find_symbol(sig, &a.symbol)
                .ok_or_else(|| Error::signature(format!("symbol {} not in source signature", a.symbol)))?;
            if sig[sym].arity != a.args.len() {
                return Err(Error::signature(format!(
                    "{} takes {} arguments, got {}",
                    a.symbol,
                    sig[sym].arity,
                    a.args.len()
                )));
            }
            let args = a.args.iter().map(var).collect::<Result<Vec<_>>>()?;
            atoms.push((sym, args));
        }
        let pairs = |list: &[(String, String)]| -> Result<Vec<(usize, usize)>> {
            list.iter().map(|(a, b)| Ok((var(a)?, var(b)?))).collect()
        };
        Ok(Compiled {
            free: self.free.len(),
            vars: self.var_count(),
            atoms,
            eqs: pairs(&self.eqs)?,
            neqs: pairs(&self.neqs)?,
        })
    }

    /// Checks the formula is well formed over `sig`.
    pub fn validate(&self, sig: &[Symbol]) -> Result<()> {
        self.compile(sig).map(|_| ())
    }

    /// Whether some witness assignment satisfies the formula in `tmpl` with
    /// the free variables set to `free_values`.
    pub fn holds(&self, tmpl: &FiniteStructure, free_values: &[usize]) -> Result<bool> {
        let c = self.compile(tmpl.signature())?;
        if free_values.len() != c.free {
            return Err(Error::Invalid(format!(
                "{} free values for {} free variables",
                free_values.len(),
                c.free
            )));
        }
        Ok(c.evaluator(tmpl).holds(free_values))
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    pub free: usize,
    pub vars: usize,
    pub atoms: Vec<(usize, Vec<usize>)>,
    pub eqs: Vec<(usize, usize)>,
    pub neqs: Vec<(usize, usize)>,
}

impl Compiled {
    pub fn evaluator<'a>(&'a self, tmpl: &'a FiniteStructure) -> Evaluator<'a> {
        // Each check runs as soon as its last variable is assigned.
        let mut checks = vec![Vec::new(); self.vars.max(1)];
        let last = |vs: &[usize]| vs.iter().copied().max().unwrap_or(0).max(self.free.saturating_sub(1));
        for (i, (_, args)) in self.atoms.iter().enumerate() {
            checks[last(args)].push(Check::Atom(i));
        }
        for &(a, b) in &self.eqs {
            checks[last(&[a, b])].push(Check::Eq(a, b));
        }
        for &(a, b) in &self.neqs {
            checks[last(&[a, b])].push(Check::Neq(a, b));
        }
        Evaluator {
            c: self,
            tmpl,
            checks,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Check {
    Atom(usize),
    Eq(usize, usize),
    Neq(usize, usize),
}

pub(crate) struct Evaluator<'a> {
    c: &'a Compiled,
    tmpl: &'a FiniteStructure,
    checks: Vec<Vec<Check>>,
}

impl Evaluator<'_> {
    pub fn holds(&self, free_values: &[usize]) -> bool {
        if self.c.vars == 0 {
            return self.checks[0].iter().all(|&ch| self.check(ch, &[]));
        }
        let mut assign = vec![0usize; self.c.vars];
        assign[..self.c.free].copy_from_slice(free_values);
        if self.c.free > 0 && !self.checks[self.c.free - 1].iter().all(|&ch| self.check(ch, &assign)) {
            return false;
        }
        self.extend(&mut assign, self.c.free)
    }

    fn extend(&self, assign: &mut [usize], v: usize) -> bool {
        if v == self.c.vars {
            return true;
        }
        for x in 0..self.tmpl.domain_size() {
            assign[v] = x;
            if self.checks[v].iter().all(|&ch| self.check(ch, assign)) && self.extend(assign, v + 1) {
                return true;
            }
        }
        false
    }

    fn check(&self, ch: Check, assign: &[usize]) -> bool {
        match ch {
            Check::Atom(i) => {
                let (sym, args) = &self.c.atoms[i];
                let t: Vec<usize> = args.iter().map(|&a| assign[a]).collect();
                self.tmpl.relation(*sym).contains(&t)
            }
            Check::Eq(a, b) => assign[a] == assign[b],
            Check::Neq(a, b) => assign[a] != assign[b],
        }
    }
}
