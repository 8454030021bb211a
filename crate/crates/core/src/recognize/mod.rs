//! Membership tests for every graph class the toolkit handles. These are the
//! ground truth the oracle and every solver are judged against.
//!
//! Convention: the empty graph and `K1` belong to every class here, including
//! the line-graph classes.

mod basic;
mod cycles;
mod linebip;
mod perfect;
mod permutation;
mod pqsplit;

use std::fmt;

pub use basic::{
    is_complete_multipartite, is_f_free, is_split, is_threshold, split_partition_search,
};
pub use cycles::{contains_cycle_in, contains_cycle_in_capped, contains_cycle_through, in_t, CYCLE_CAP};
pub use linebip::{
    contract_co_twins, is_line_of_bipartite, is_line_of_bipartite_multi, line_bip_by_root_enumeration,
    LINE_MULTI_CAP,
};
pub use perfect::{has_odd_hole, is_perfect_small, PERFECT_CAP};
pub use permutation::{is_permutation_small, PERMUTATION_CAP};
pub use pqsplit::{is_pq_split_small, pq_partition, PQ_CAP};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle-length family for the `C_n`-subgraph-free classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    ExplicitSet(Vec<usize>),
    /// `{5, 15, 45, ...} = {5 * 3^i}`.
    GeometricT,
}

impl FamilySpec {
    pub fn explicit(lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Invalid("empty cycle-length family".into()));
        }
        if let Some(&l) = lengths.iter().find(|&&l| l < 5) {
            return Err(Error::range(format!("cycle length {l} below 5")));
        }
        let mut lengths = lengths;
        lengths.sort_unstable();
        lengths.dedup();
        Ok(FamilySpec::ExplicitSet(lengths))
    }

    pub fn contains(&self, len: usize) -> bool {
        match self {
            FamilySpec::ExplicitSet(ls) => ls.binary_search(&len).is_ok(),
            FamilySpec::GeometricT => in_t(len),
        }
    }

    fn parse(text: &str) -> Result<Self> {
        if text == "T" {
            return Ok(FamilySpec::GeometricT);
        }
        let lengths = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad cycle length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::explicit(lengths)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::GeometricT => write!(f, "T"),
            FamilySpec::ExplicitSet(ls) => {
                let parts: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassId {
    Split,
    Threshold,
    CompleteMultipartite,
    /// Induced-subgraph-free for every listed pattern.
    FFree(Vec<Graph>),
    /// Perfect and `K_k`-free.
    PerfectKkFree(usize),
    PqSplit(usize, usize),
    LineOfBipartite,
    LineOfBipartiteMulti,
    Permutation,
    /// No cycle subgraph (not necessarily induced) with length in the family.
    CycleFamilyFree(FamilySpec),
    /// `{P_n, K_k}`-free.
    PnKkFree(usize, usize),
}

impl ClassId {
    /// Parses a textual class name. `load` resolves the file names of an
    /// `ffree:` list.
    pub fn parse_with<L>(name: &str, load: L) -> Result<Self>
    where
        L: Fn(&str) -> Result<Graph>,
    {
        let (head, arg) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        let nums = |a: Option<&str>, want: usize| -> Result<Vec<usize>> {
            let a = a.ok_or_else(|| Error::Invalid(format!("class {head} needs parameters")))?;
            let v = a
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Invalid(format!("bad parameters in {name}")))?;
            if v.len() != want || v.contains(&0) {
                return Err(Error::Invalid(format!(
                    "class {head} needs {want} positive parameter(s)"
                )));
            }
            Ok(v)
        };
        let cls = match head {
            "split" => ClassId::Split,
            "threshold" => ClassId::Threshold,
            "multipartite" => ClassId::CompleteMultipartite,
            "line-bip" => ClassId::LineOfBipartite,
            "line-bip-multi" => ClassId::LineOfBipartiteMulti,
            "permutation" => ClassId::Permutation,
            "perfect-kfree" => ClassId::PerfectKkFree(nums(arg, 1)?[0]),
            "pqsplit" => {
                let v = nums(arg, 2)?;
                ClassId::PqSplit(v[0], v[1])
            }
            "pnkk" => {
                let v = nums(arg, 2)?;
                ClassId::PnKkFree(v[0], v[1])
            }
            "cyclefam" => ClassId::CycleFamilyFree(FamilySpec::parse(
                arg.ok_or_else(|| Error::Invalid("cyclefam needs a family".into()))?,
            )?),
            "ffree" => {
                let files = arg.ok_or_else(|| Error::Invalid("ffree needs a file list".into()))?;
                let graphs = files
                    .split(',')
                    .map(|f| load(f.trim()))
                    .collect::<Result<Vec<_>>>()?;
                ClassId::f_free(graphs)?
            }
            _ => return Err(Error::Invalid(format!("unknown class {name}"))),
        };
        Ok(cls)
    }

    pub fn parse(name: &str) -> Result<Self> {
        ClassId::parse_with(name, |f| {
            Err(Error::Invalid(format!("cannot load pattern file {f} here")))
        })
    }

    pub fn f_free(patterns: Vec<Graph>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Invalid("ffree needs at least one pattern".into()));
        }
        Ok(ClassId::FFree(patterns))
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        match self {
            ClassId::Split => Ok(is_split(g)),
            ClassId::Threshold => Ok(is_threshold(g)),
            ClassId::CompleteMultipartite => Ok(is_complete_multipartite(g)),
            ClassId::FFree(patterns) => is_f_free(g, patterns),
            ClassId::PerfectKkFree(k) => {
                Ok(!crate::iso::contains_induced(&Graph::complete(*k)?, g) && is_perfect_small(g)?)
            }
            ClassId::PqSplit(p, q) => is_pq_split_small(g, *p, *q),
            ClassId::LineOfBipartite => is_line_of_bipartite(g),
            ClassId::LineOfBipartiteMulti => is_line_of_bipartite_multi(g),
            ClassId::Permutation => is_permutation_small(g),
            ClassId::CycleFamilyFree(spec) => Ok(!contains_cycle_in(g, spec)?),
            ClassId::PnKkFree(n, k) => is_f_free(g, &[Graph::path(*n)?, Graph::complete(*k)?]),
        }
    }

    /// A finite set of forbidden induced subgraphs characterizing the class,
    /// when one is known and used here.
    pub fn obstructions(&self) -> Option<Vec<Graph>> {
        let two_k2 = || Graph::matching(2).expect("small");
        let c4 = || Graph::cycle(4).expect("small");
        match self {
            ClassId::Split => Some(vec![two_k2(), c4(), Graph::cycle(5).expect("small")]),
            ClassId::Threshold => Some(vec![two_k2(), c4(), Graph::path(4).expect("small")]),
            ClassId::CompleteMultipartite => Some(vec![co_p3()]),
            ClassId::FFree(patterns) => Some(patterns.clone()),
            ClassId::PnKkFree(n, k) => Some(vec![Graph::path(*n).ok()?, Graph::complete(*k).ok()?]),
            _ => None,
        }
    }

    /// Whether a dedicated polynomial-time sandwich solver exists.
    pub fn has_poly_solver(&self) -> bool {
        matches!(
            self,
            ClassId::Split | ClassId::Threshold | ClassId::CompleteMultipartite | ClassId::PqSplit(1, 1)
        )
    }
}

/// `K2 + K1`, the complement of `P3`.
pub fn co_p3() -> Graph {
    Graph::from_edges(3, [(0, 1)]).expect("small")
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Split => write!(f, "split"),
            ClassId::Threshold => write!(f, "threshold"),
            ClassId::CompleteMultipartite => write!(f, "multipartite"),
            ClassId::FFree(ps) => write!(f, "ffree:<{} patterns>", ps.len()),
            ClassId::PerfectKkFree(k) => write!(f, "perfect-kfree:{k}"),
            ClassId::PqSplit(p, q) => write!(f, "pqsplit:{p},{q}"),
            ClassId::LineOfBipartite => write!(f, "line-bip"),
            ClassId::LineOfBipartiteMulti => write!(f, "line-bip-multi"),
            ClassId::Permutation => write!(f, "permutation"),
            ClassId::CycleFamilyFree(s) => write!(f, "cyclefam:{s}"),
            ClassId::PnKkFree(n, k) => write!(f, "pnkk:{n},{k}"),
        }
    }
}
