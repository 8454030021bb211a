//! Line-oriented text formats. Vertices and variables are 1-based on disk,
//! structure domain elements 0-based; `#` starts a comment.
//!
//! ```text
//! p swi 3      p gr 4       p fst 2          p sti 3
//! e 1 2        e 1 2        r E 2            c E 1 2
//! f 1 3        e 2 3        t E 0 1          c E 2 3
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::SandwichInstance;
use crate::structure::{FiniteStructure, StructureInstance, Symbol};

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let tok: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
                (!tok.is_empty()).then_some((i + 1, tok))
            })
            .collect();
        Lines { lines }
    }

    /// Reads `p <kind> <count>` from the first line.
    fn header(&self, kind: &str) -> Result<usize> {
        let Some((line, tok)) = self.lines.first() else {
            return Err(Error::parse(1, format!("missing header p {kind}")));
        };
        match tok[..] {
            ["p", k, count] if k == kind => number(*line, count),
            _ => Err(Error::parse(*line, format!("expected header p {kind} <count>"))),
        }
    }

    fn body(&self) -> impl Iterator<Item = &(usize, Vec<&'a str>)> {
        self.lines.iter().skip(1)
    }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a number, got {tok}")))
}

/// A 1-based label below or at `n`, returned 0-based.
fn label(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = number(line, tok)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("label {v} outside 1..{n}")));
    }
    Ok(v - 1)
}

fn pair(line: usize, tok: &[&str], n: usize) -> Result<(usize, usize)> {
    match tok {
        [_, u, v] => Ok((label(line, u, n)?, label(line, v, n)?)),
        _ => Err(Error::parse(line, format!("{} takes two vertices", tok[0]))),
    }
}

pub fn parse_instance(text: &str) -> Result<SandwichInstance> {
    let lines = Lines::new(text);
    let n = lines.header("swi")?;
    let mut forced = Vec::new();
    let mut forbidden = Vec::new();
    for (line, tok) in lines.body() {
        let p = pair(*line, tok, n)?;
        if p.0 == p.1 {
            return Err(Error::range(format!("self-pair on vertex {} at line {line}", p.0 + 1)));
        }
        match tok[0] {
            "e" => forced.push(p),
            "f" => forbidden.push(p),
            other => return Err(Error::parse(*line, format!("unknown line type {other}"))),
        }
    }
    SandwichInstance::new(n, forced, forbidden)
}

pub fn emit_instance(inst: &SandwichInstance) -> String {
    let mut out = format!("p swi {}\n", inst.vertex_count());
    for p in inst.forced() {
        let _ = writeln!(out, "e {} {}", p.lo() + 1, p.hi() + 1);
    }
    for p in inst.forbidden() {
        let _ = writeln!(out, "f {} {}", p.lo() + 1, p.hi() + 1);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = Lines::new(text);
    let n = lines.header("gr")?;
    let mut g = Graph::empty(n)?;
    for (line, tok) in lines.body() {
        if tok[0] != "e" {
            return Err(Error::parse(*line, format!("unknown line type {}", tok[0])));
        }
        let (u, v) = pair(*line, tok, n)?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p gr {}\n", g.vertex_count());
    for (u, v) in g.edge_iter() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_structure(text: &str) -> Result<FiniteStructure> {
    let lines = Lines::new(text);
    let d = lines.header("fst")?;
    let mut sig = Vec::new();
    let mut tuples = Vec::new();
    for (line, tok) in lines.body() {
        match tok[0] {
            "r" => {
                let [_, name, arity] = tok[..] else {
                    return Err(Error::parse(*line, "expected r <name> <arity>"));
                };
                if sig.iter().any(|s: &Symbol| s.name == name) {
                    return Err(Error::parse(*line, format!("symbol {name} declared twice")));
                }
                sig.push(Symbol::new(name, number(*line, arity)?));
            }
            "t" => {
                let name = tok.get(1).ok_or_else(|| Error::parse(*line, "expected t <name> ..."))?;
                let t = tok[2..].iter().map(|x| number(*line, x)).collect::<Result<Vec<_>>>()?;
                tuples.push((*line, name.to_string(), t));
            }
            other => return Err(Error::parse(*line, format!("unknown line type {other}"))),
        }
    }
    let mut s = FiniteStructure::new(d, sig)?;
    for (line, name, t) in tuples {
        s.add_tuple(&name, t).map_err(|e| Error::parse(line, e.to_string()))?;
    }
    Ok(s)
}

pub fn emit_structure(s: &FiniteStructure) -> String {
    let mut out = format!("p fst {}\n", s.domain_size());
    for sym in s.signature() {
        let _ = writeln!(out, "r {} {}", sym.name, sym.arity);
    }
    for (i, sym) in s.signature().iter().enumerate() {
        for t in s.relation(i) {
            let _ = write!(out, "t {}", sym.name);
            for x in t {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_structure_instance(text: &str) -> Result<StructureInstance> {
    let lines = Lines::new(text);
    let n = lines.header("sti")?;
    let mut inst = StructureInstance::new(n);
    for (line, tok) in lines.body() {
        if tok[0] != "c" || tok.len() < 2 {
            return Err(Error::parse(*line, "expected c <symbol> <variables>"));
        }
        let vars = tok[2..].iter().map(|x| label(*line, x, n)).collect::<Result<Vec<_>>>()?;
        inst.push(tok[1], vars)?;
    }
    Ok(inst)
}

pub fn emit_structure_instance(inst: &StructureInstance) -> String {
    let mut out = format!("p sti {}\n", inst.var_count);
    for c in &inst.constraints {
        let _ = write!(out, "c {}", c.symbol);
        for v in &c.vars {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}
