//! Oracle agreement suites: every instance on 4 vertices plus seeded random
//! instances on larger vertex counts, solved by the fast solver and by the
//! oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{validate, Certificate};
use crate::error::Result;
use crate::format::emit_instance;
use crate::gen::{all_instances, mixed_instances};
use crate::instance::SandwichInstance;
use crate::oracle::{oracle_solve, pq_split_sandwich, search_solve};
use crate::recognize::ClassId;
use crate::solve::solve_poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossConfig {
    /// Vertex count of the exhaustive part; 0 skips it.
    pub exhaustive_n: usize,
    pub random_sizes: Vec<usize>,
    pub random_count: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for CrossConfig {
    fn default() -> Self {
        CrossConfig {
            exhaustive_n: 4,
            random_sizes: vec![5, 6, 7],
            random_count: 500,
            seed: 0,
            budget: crate::oracle::DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub instance: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub class: String,
    pub solver: String,
    pub exhaustive: usize,
    pub random: usize,
    pub yes: usize,
    pub no: usize,
    pub discrepancies: usize,
    /// YES certificates from either side that fail validation.
    pub invalid_certificates: usize,
    pub first_discrepancy: Option<Discrepancy>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.discrepancies == 0 && self.invalid_certificates == 0
    }
}

fn verdict(c: &Certificate) -> &'static str {
    if c.is_yes() {
        "YES"
    } else {
        "NO"
    }
}

/// The fast side of a crosscheck: the dedicated solver when there is one,
/// the partition search for (p,q)-split and the pruned search otherwise.
pub fn fast_solve(inst: &SandwichInstance, cls: &ClassId, budget: u64) -> Result<(Certificate, &'static str)> {
    if cls.has_poly_solver() {
        return Ok((solve_poly(inst, cls)?, "poly"));
    }
    match cls {
        ClassId::PqSplit(p, q) => Ok((pq_split_sandwich(inst, *p, *q)?, "partition")),
        _ => Ok((search_solve(inst, cls, budget)?, "search")),
    }
}

/// The instances a crosscheck runs on, in report order.
pub fn suite(cfg: &CrossConfig) -> Vec<SandwichInstance> {
    let mut out: Vec<SandwichInstance> = if cfg.exhaustive_n > 0 {
        all_instances(cfg.exhaustive_n).collect()
    } else {
        Vec::new()
    };
    for (i, &n) in cfg.random_sizes.iter().enumerate() {
        out.extend(mixed_instances(n, cfg.random_count, cfg.seed.wrapping_add(i as u64)));
    }
    out
}

/// Runs the suite in parallel; results are collected in suite order, so the
/// report does not depend on scheduling.
pub fn crosscheck(cls: &ClassId, cfg: &CrossConfig) -> Result<CrossReport> {
    let instances = suite(cfg);
    let exhaustive = if cfg.exhaustive_n > 0 {
        3usize.pow((cfg.exhaustive_n * (cfg.exhaustive_n - 1) / 2) as u32)
    } else {
        0
    };
    let outcomes: Vec<Result<(Certificate, Certificate, bool, &'static str)>> = instances
        .par_iter()
        .map(|inst| {
            let (fast, name) = fast_solve(inst, cls, cfg.budget)?;
            let oracle = oracle_solve(inst, cls)?;
            let valid = validate(inst, &fast, cls).is_ok() && validate(inst, &oracle, cls).is_ok();
            Ok((fast, oracle, valid, name))
        })
        .collect();

    let mut report = CrossReport {
        class: cls.to_string(),
        solver: String::new(),
        exhaustive,
        random: instances.len() - exhaustive,
        yes: 0,
        no: 0,
        discrepancies: 0,
        invalid_certificates: 0,
        first_discrepancy: None,
    };
    for (inst, outcome) in instances.iter().zip(outcomes) {
        let (fast, oracle, valid, name) = outcome?;
        report.solver = name.to_string();
        if oracle.is_yes() {
            report.yes += 1;
        } else {
            report.no += 1;
        }
        if !valid {
            report.invalid_certificates += 1;
        }
        if fast.is_yes() != oracle.is_yes() {
            report.discrepancies += 1;
            report.first_discrepancy.get_or_insert_with(|| Discrepancy {
                instance: emit_instance(inst),
                fast: verdict(&fast).into(),
                oracle: verdict(&oracle).into(),
            });
        }
    }
    Ok(report)
}
