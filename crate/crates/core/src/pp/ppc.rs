//! Text format for pp-constructions.
//!
//! ```text
//! ppc 1 E/2 E/2
//! def E free x y exist z w
//! atom E x z
//! atom E z w
//! atom E w y
//! ```
//!
//! Signatures are comma-separated `name/arity` lists. Besides `def` blocks a
//! file may hold one `domain`, `equiv` and `neqgadget` block each, with the
//! same `free ... exist ...` header and body lines `atom`, `eq` and `neq`.

use std::fmt::Write;

use super::construction::PPConstruction;
use super::formula::PPFormula;
use crate::error::{Error, Result};
use crate::structure::{Signature, Symbol};

fn parse_signature(line: usize, text: &str) -> Result<Signature> {
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let (name, arity) = item
                .split_once('/')
                .ok_or_else(|| Error::parse(line, format!("expected name/arity, got {item}")))?;
            let arity = arity
                .parse()
                .map_err(|_| Error::parse(line, format!("bad arity in {item}")))?;
            Ok(Symbol::new(name, arity))
        })
        .collect()
}

fn emit_signature(sig: &[Symbol]) -> String {
    if sig.is_empty() {
        return "-".into();
    }
    sig.iter().map(|s| format!("{}/{}", s.name, s.arity)).collect::<Vec<_>>().join(",")
}

enum Slot {
    Def(String),
    Domain,
    Equiv,
    NeqGadget,
}

pub fn parse_ppc(text: &str) -> Result<PPConstruction> {
    let mut header: Option<(usize, Signature, Signature)> = None;
    let mut blocks: Vec<(Slot, PPFormula)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tok: Vec<&str> = content.split_whitespace().collect();
        let Some(&kw) = tok.first() else { continue };
        match kw {
            "ppc" => {
                if header.is_some() {
                    return Err(Error::parse(line, "duplicate ppc header"));
                }
                let [_, d, src, tgt] = tok[..] else {
                    return Err(Error::parse(line, "expected: ppc <d> <source> <target>"));
                };
                let d = d.parse().map_err(|_| Error::parse(line, format!("bad dimension {d}")))?;
                header = Some((d, parse_signature(line, src)?, parse_signature(line, tgt)?));
            }
            "def" | "domain" | "equiv" | "neqgadget" => {
                if header.is_none() {
                    return Err(Error::parse(line, "block before ppc header"));
                }
                let (slot, rest) = if kw == "def" {
                    let name = tok.get(1).ok_or_else(|| Error::parse(line, "def needs a symbol"))?;
                    (Slot::Def(name.to_string()), &tok[2..])
                } else {
                    let slot = match kw {
                        "domain" => Slot::Domain,
                        "equiv" => Slot::Equiv,
                        _ => Slot::NeqGadget,
                    };
                    (slot, &tok[1..])
                };
                blocks.push((slot, parse_block_header(line, rest)?));
            }
            "atom" | "eq" | "neq" => {
                let Some((_, f)) = blocks.last_mut() else {
                    return Err(Error::parse(line, format!("{kw} outside a block")));
                };
                match kw {
                    "atom" => {
                        if tok.len() < 2 {
                            return Err(Error::parse(line, "atom needs a symbol"));
                        }
                        *f = std::mem::take(f).atom(tok[1], &tok[2..]);
                    }
                    _ => {
                        let [_, a, b] = tok[..] else {
                            return Err(Error::parse(line, format!("{kw} takes two variables")));
                        };
                        *f = if kw == "eq" {
                            std::mem::take(f).eq(a, b)
                        } else {
                            std::mem::take(f).neq(a, b)
                        };
                    }
                }
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other}"))),
        }
    }
    let (dim, source, target) = header.ok_or_else(|| Error::parse(1, "missing ppc header"))?;
    let mut defs: Vec<Option<PPFormula>> = vec![None; target.len()];
    let (mut domain, mut equiv, mut neq_gadget) = (None, None, None);
    for (slot, f) in blocks {
        let target_slot = match slot {
            Slot::Def(name) => {
                let idx = target
                    .iter()
                    .position(|s| s.name == name)
                    .ok_or_else(|| Error::signature(format!("def for unknown target symbol {name}")))?;
                &mut defs[idx]
            }
            Slot::Domain => &mut domain,
            Slot::Equiv => &mut equiv,
            Slot::NeqGadget => &mut neq_gadget,
        };
        if target_slot.replace(f).is_some() {
            return Err(Error::Invalid("block defined twice".into()));
        }
    }
    let defs = defs
        .into_iter()
        .zip(&target)
        .map(|(f, s)| f.ok_or_else(|| Error::signature(format!("no def for target symbol {}", s.name))))
        .collect::<Result<Vec<_>>>()?;
    let con = PPConstruction {
        dim,
        source,
        target,
        defs,
        domain,
        equiv,
        neq_gadget,
    };
    con.validate()?;
    Ok(con)
}

fn parse_block_header(line: usize, tok: &[&str]) -> Result<PPFormula> {
    if tok.first() != Some(&"free") {
        return Err(Error::parse(line, "block header must start with free"));
    }
    let split = tok.iter().position(|&t| t == "exist").unwrap_or(tok.len());
    let free = &tok[1..split];
    let exist = if split < tok.len() { &tok[split + 1..] } else { &[][..] };
    Ok(PPFormula::new(free, exist))
}

fn emit_block(out: &mut String, head: &str, f: &PPFormula) {
    let _ = write!(out, "{head} free {}", f.free.join(" "));
    if !f.exist.is_empty() {
        let _ = write!(out, " exist {}", f.exist.join(" "));
    }
    out.push('\n');
    for a in &f.atoms {
        let _ = writeln!(out, "atom {} {}", a.symbol, a.args.join(" "));
    }
    for (a, b) in &f.eqs {
        let _ = writeln!(out, "eq {a} {b}");
    }
    for (a, b) in &f.neqs {
        let _ = writeln!(out, "neq {a} {b}");
    }
}

pub fn emit_ppc(con: &PPConstruction) -> String {
    let mut out = format!(
        "ppc {} {} {}\n",
        con.dim,
        emit_signature(&con.source),
        emit_signature(&con.target)
    );
    for (s, f) in con.target.iter().zip(&con.defs) {
        emit_block(&mut out, &format!("def {}", s.name), f);
    }
    if let Some(f) = &con.domain {
        emit_block(&mut out, "domain", f);
    }
    if let Some(f) = &con.equiv {
        emit_block(&mut out, "equiv", f);
    }
    if let Some(f) = &con.neq_gadget {
        emit_block(&mut out, "neqgadget", f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pp::builtins::BuiltinConstruction;

    #[test]
    fn builtins_round_trip() {
        for b in BuiltinConstruction::ALL {
            let con = b.build();
            let text = emit_ppc(&con);
            assert_eq!(parse_ppc(&text).unwrap(), con, "{}", b.name());
        }
    }

    #[test]
    fn parses_module_doc_example() {
        let con = parse_ppc(
            "# length-3 walks\nppc 1 E/2 E/2\ndef E free x y exist z w\natom E x z\natom E z w\natom E w y\n",
        )
        .unwrap();
        assert_eq!(con, crate::pp::builtins::c5_to_k5());
    }

    #[test]
    fn errors_carry_lines() {
        assert!(matches!(parse_ppc("ppc 1 E/2 E/2\nfoo\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ppc("atom E x y\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ppc("ppc 1 E/2 E/2\n"), Err(Error::Signature(_))));
        assert!(parse_ppc("ppc 1 E/2 E/2\ndef E free x\n").is_err());
    }
}
