//! Solver dispatch shared by the command line and the C interface.

use std::fmt;
use std::str::FromStr;

use crate::certificate::{validate, Certificate};
use crate::error::{Error, Result};
use crate::instance::SandwichInstance;
use crate::oracle::{oracle_solve, pq_split_sandwich, search_solve};
use crate::poly::{solve_multipartite, solve_split, solve_threshold};
use crate::recognize::ClassId;

/// Up to this many undetermined pairs `auto` prefers the oracle to the
/// pruned search.
pub const AUTO_ORACLE_PAIRS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Poly,
    Search,
    Oracle,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "poly" => Ok(Method::Poly),
            "search" => Ok(Method::Search),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Invalid(format!("unknown method {s}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Poly => "poly",
            Method::Search => "search",
            Method::Oracle => "oracle",
        })
    }
}

/// The dedicated solver for classes with one.
pub fn solve_poly(inst: &SandwichInstance, cls: &ClassId) -> Result<Certificate> {
    match cls {
        ClassId::Split | ClassId::PqSplit(1, 1) => Ok(solve_split(inst)),
        ClassId::Threshold => Ok(solve_threshold(inst)),
        ClassId::CompleteMultipartite => Ok(solve_multipartite(inst)),
        _ => Err(Error::Invalid(format!("no polynomial solver for class {cls}"))),
    }
}

/// Solves with `method` and validates any completion before returning it.
///
/// `auto` uses the dedicated solver when there is one, the partition search
/// for (p,q)-split, the oracle up to [`AUTO_ORACLE_PAIRS`] undetermined
/// pairs and the pruned search beyond.
pub fn solve(inst: &SandwichInstance, cls: &ClassId, method: Method, budget: u64) -> Result<(Certificate, Method)> {
    let method = match method {
        Method::Auto if cls.has_poly_solver() => Method::Poly,
        Method::Auto if inst.undetermined_pairs().len() <= AUTO_ORACLE_PAIRS => Method::Oracle,
        Method::Auto => Method::Search,
        m => m,
    };
    let cert = match (method, cls) {
        (Method::Poly, _) => solve_poly(inst, cls)?,
        (Method::Search, ClassId::PqSplit(p, q)) => pq_split_sandwich(inst, *p, *q)?,
        (Method::Search, _) => search_solve(inst, cls, budget)?,
        (Method::Oracle, _) => oracle_solve(inst, cls)?,
        (Method::Auto, _) => unreachable!("resolved above"),
    };
    validate(inst, &cert, cls)?;
    Ok((cert, method))
}
