use serde::{Deserialize, Serialize};

use super::formula::PPFormula;
use crate::error::{Error, Result};
use crate::structure::{find_symbol, Signature};

/// A `d`-dimensional pp-construction of a target signature in a source
/// signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPConstruction {
    pub dim: usize,
    pub source: Signature,
    pub target: Signature,
    /// One formula per target symbol, in target order, with `arity * dim`
    /// free variables.
    pub defs: Vec<PPFormula>,
    /// Domain formula with `dim` free variables; every `d`-tuple when absent.
    pub domain: Option<PPFormula>,
    /// Quotient relation with `2 * dim` free variables.
    pub equiv: Option<PPFormula>,
    /// How instance-level reductions realize a disequality `x != y`: this
    /// formula with 2 free variables is instantiated in both orientations.
    /// Without it a disequality becomes a native `!=` constraint.
    pub neq_gadget: Option<PPFormula>,
}

impl PPConstruction {
    pub fn new(dim: usize, source: Signature, target: Signature, defs: Vec<PPFormula>) -> Result<Self> {
        let con = PPConstruction {
            dim,
            source,
            target,
            defs,
            domain: None,
            equiv: None,
            neq_gadget: None,
        };
        con.validate()?;
        Ok(con)
    }

    pub fn with_domain(mut self, f: PPFormula) -> Result<Self> {
        self.domain = Some(f);
        self.validate()?;
        Ok(self)
    }

    pub fn with_equiv(mut self, f: PPFormula) -> Result<Self> {
        self.equiv = Some(f);
        self.validate()?;
        Ok(self)
    }

    pub fn with_neq_gadget(mut self, f: PPFormula) -> Result<Self> {
        self.neq_gadget = Some(f);
        self.validate()?;
        Ok(self)
    }

    pub fn def(&self, symbol: &str) -> Option<&PPFormula> {
        find_symbol(&self.target, symbol).map(|i| &self.defs[i])
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::range("dimension must be positive"));
        }
        if self.defs.len() != self.target.len() {
            return Err(Error::signature(format!(
                "{} definitions for {} target symbols",
                self.defs.len(),
                self.target.len()
            )));
        }
        let free_count = |f: &PPFormula, want: usize, what: &str| {
            if f.free.len() == want {
                f.validate(&self.source)
            } else {
                Err(Error::signature(format!(
                    "{what} has {} free variables, expected {want}",
                    f.free.len()
                )))
            }
        };
        for (sym, f) in self.target.iter().zip(&self.defs) {
            free_count(f, sym.arity * self.dim, &format!("definition of {}", sym.name))?;
        }
        if let Some(f) = &self.domain {
            free_count(f, self.dim, "domain formula")?;
        }
        if let Some(f) = &self.equiv {
            free_count(f, 2 * self.dim, "equivalence formula")?;
        }
        if let Some(f) = &self.neq_gadget {
            free_count(f, 2, "disequality gadget")?;
        }
        Ok(())
    }
}
