use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};
use crate::instance::SandwichInstance;
use crate::recognize::{pq_partition, ClassId};
use crate::structure::{FiniteStructure, StructureInstance};

/// Answer of any solver in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Certificate {
    /// A completion `E'` of a sandwich instance, sorted.
    CompletionYes(Vec<Pair>),
    /// A homomorphism, indexed by variable.
    HomYes(Vec<usize>),
    No,
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        !matches!(self, Certificate::No)
    }

    pub fn completion(&self) -> Option<&[Pair]> {
        match self {
            Certificate::CompletionYes(e) => Some(e),
            _ => None,
        }
    }

    pub fn map(&self) -> Option<&[usize]> {
        match self {
            Certificate::HomYes(m) => Some(m),
            _ => None,
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        Certificate::CompletionYes(g.edges())
    }
}

/// The generic completion check: `forced ⊆ E'`, `E' ∩ forbidden = ∅`, and the
/// class (when given) accepts `(V, E')`.
pub fn validate_completion(inst: &SandwichInstance, edges: &[Pair], cls: Option<&ClassId>) -> Result<()> {
    let g = Graph::from_pairs(inst.vertex_count(), edges)?;
    if let Some(p) = inst.forced().iter().find(|p| !g.has_edge(p.lo(), p.hi())) {
        return Err(Error::Invalid(format!("forced pair {p} missing from completion")));
    }
    if let Some(p) = inst.forbidden().iter().find(|p| g.has_edge(p.lo(), p.hi())) {
        return Err(Error::Invalid(format!("forbidden pair {p} present in completion")));
    }
    if let Some(cls) = cls {
        // the (p,q)-split recognizer is capped; validation uses the exact
        // partition search at any size
        let member = match cls {
            ClassId::PqSplit(p, q) => pq_partition(&g, &g, *p, *q)?.is_some(),
            _ => cls.contains(&g)?,
        };
        if !member {
            return Err(Error::Invalid(format!("completion is not in class {cls}")));
        }
    }
    Ok(())
}

/// Checks a sandwich certificate. `No` always passes; it is not a witness.
pub fn validate(inst: &SandwichInstance, cert: &Certificate, cls: &ClassId) -> Result<()> {
    match cert {
        Certificate::CompletionYes(e) => validate_completion(inst, e, Some(cls)),
        Certificate::HomYes(_) => Err(Error::Invalid("homomorphism given for a sandwich instance".into())),
        Certificate::No => Ok(()),
    }
}

/// Checks a CSP certificate.
pub fn validate_hom(inst: &StructureInstance, tmpl: &FiniteStructure, cert: &Certificate) -> Result<()> {
    match cert {
        Certificate::HomYes(m) => {
            if inst.is_homomorphism(tmpl, m)? {
                Ok(())
            } else {
                Err(Error::Invalid("map violates a constraint".into()))
            }
        }
        Certificate::CompletionYes(_) => Err(Error::Invalid("completion given for a CSP instance".into())),
        Certificate::No => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(list: &[(usize, usize)]) -> Vec<Pair> {
        list.iter().map(|&(u, v)| Pair::new(u, v).unwrap()).collect()
    }

    #[test]
    fn completion_checks() {
        let inst = SandwichInstance::new(3, [(0, 1)], [(0, 2)]).unwrap();
        assert!(validate_completion(&inst, &pairs(&[(0, 1)]), None).is_ok());
        assert!(validate_completion(&inst, &pairs(&[(1, 2)]), None).is_err());
        assert!(validate_completion(&inst, &pairs(&[(0, 1), (0, 2)]), None).is_err());
        let cert = Certificate::CompletionYes(pairs(&[(0, 1), (1, 2)]));
        assert!(validate(&inst, &cert, &ClassId::CompleteMultipartite).is_ok());
        let bad = Certificate::CompletionYes(pairs(&[(0, 1)]));
        assert!(validate(&inst, &bad, &ClassId::CompleteMultipartite).is_err());
    }
}
