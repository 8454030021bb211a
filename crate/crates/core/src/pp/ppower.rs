use super::construction::PPConstruction;
use crate::csp::decode;
use crate::error::{Error, Result};
use crate::structure::FiniteStructure;

/// Limit on `|D|^d` before the domain formula is applied.
pub const PPOWER_DOMAIN_CAP: usize = 10_000;
const PPOWER_TUPLE_CAP: u64 = 5_000_000;

/// The pp-power of `tmpl` under `con`.
///
/// Elements are the `d`-tuples satisfying the domain formula, numbered in
/// lexicographic order. With an equivalence formula the result is the
/// quotient, classes numbered by their smallest member.
pub fn pp_power(tmpl: &FiniteStructure, con: &PPConstruction) -> Result<FiniteStructure> {
    con.validate()?;
    for sym in &con.source {
        match tmpl.symbol_index(&sym.name) {
            Some(i) if tmpl.signature()[i].arity == sym.arity => {}
            _ => {
                return Err(Error::signature(format!(
                    "template lacks source symbol {}/{}",
                    sym.name, sym.arity
                )))
            }
        }
    }
    let d = con.dim;
    let base = tmpl.domain_size();
    let raw = base
        .checked_pow(d as u32)
        .filter(|&r| r <= PPOWER_DOMAIN_CAP)
        .ok_or_else(|| Error::size(format!("{base}^{d} tuples exceeds {PPOWER_DOMAIN_CAP}")))?;

    let sig = tmpl.signature();
    let mut elements: Vec<Vec<usize>> = (0..raw).map(|c| decode(c, base, d)).collect();
    if let Some(f) = &con.domain {
        let c = f.compile(sig)?;
        let ev = c.evaluator(tmpl);
        elements.retain(|t| ev.holds(t));
    }

    // class[i] is the quotient element of elements[i]
    let (class, classes) = match &con.equiv {
        None => ((0..elements.len()).collect::<Vec<_>>(), elements.len()),
        Some(f) => {
            let c = f.compile(sig)?;
            let ev = c.evaluator(tmpl);
            let m = elements.len();
            let mut rel = vec![false; m * m];
            for i in 0..m {
                for j in 0..m {
                    rel[i * m + j] = ev.holds(&[elements[i].clone(), elements[j].clone()].concat());
                }
            }
            check_equivalence(&rel, m)?;
            let mut class = vec![usize::MAX; m];
            let mut next = 0;
            for i in 0..m {
                if class[i] == usize::MAX {
                    for j in i..m {
                        if rel[i * m + j] {
                            class[j] = next;
                        }
                    }
                    next += 1;
                }
            }
            (class, next)
        }
    };

    if classes == 0 {
        return Err(Error::Invalid("the domain formula holds for no tuple".into()));
    }
    let mut out = FiniteStructure::new(classes, con.target.clone())?;
    for (sym, f) in con.target.iter().zip(&con.defs) {
        let c = f.compile(sig)?;
        let ev = c.evaluator(tmpl);
        let m = elements.len();
        let total = (m as u64).checked_pow(sym.arity as u32).filter(|&t| t <= PPOWER_TUPLE_CAP);
        let Some(total) = total else {
            return Err(Error::size(format!(
                "{m}^{} candidate tuples for {}",
                sym.arity, sym.name
            )));
        };
        for code in 0..total as usize {
            let pick = decode(code, m, sym.arity);
            let free: Vec<usize> = pick.iter().flat_map(|&i| elements[i].iter().copied()).collect();
            if ev.holds(&free) {
                out.add_tuple(&sym.name, pick.iter().map(|&i| class[i]).collect())?;
            }
        }
    }
    Ok(out)
}

fn check_equivalence(rel: &[bool], m: usize) -> Result<()> {
    let bad = |what: &str| Err(Error::Invalid(format!("equivalence formula is not {what}")));
    for i in 0..m {
        if !rel[i * m + i] {
            return bad("reflexive");
        }
        for j in 0..m {
            if rel[i * m + j] != rel[j * m + i] {
                return bad("symmetric");
            }
            if rel[i * m + j] && (0..m).any(|k| rel[j * m + k] && !rel[i * m + k]) {
                return bad("transitive");
            }
        }
    }
    Ok(())
}
