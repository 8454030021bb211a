//! Finite relational structures (CSP templates) and instances over a
//! signature.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relation symbol with its arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

impl Symbol {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Symbol {
            name: name.into(),
            arity,
        }
    }
}

pub type Signature = Vec<Symbol>;

pub(crate) fn find_symbol(sig: &[Symbol], name: &str) -> Option<usize> {
    sig.iter().position(|s| s.name == name)
}

/// A finite relational structure on domain `0..domain_size`. Relations are
/// indexed in signature order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteStructure {
    domain_size: usize,
    signature: Signature,
    relations: Vec<BTreeSet<Vec<usize>>>,
}

impl FiniteStructure {
    pub fn new(domain_size: usize, signature: Signature) -> Result<Self> {
        if domain_size == 0 {
            return Err(Error::range("structure domain must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for s in &signature {
            if !seen.insert(s.name.as_str()) {
                return Err(Error::signature(format!("symbol {} declared twice", s.name)));
            }
        }
        let relations = vec![BTreeSet::new(); signature.len()];
        Ok(FiniteStructure {
            domain_size,
            signature,
            relations,
        })
    }

    pub fn add_tuple(&mut self, symbol: &str, tuple: Vec<usize>) -> Result<()> {
        let idx = find_symbol(&self.signature, symbol)
            .ok_or_else(|| Error::signature(format!("unknown symbol {symbol}")))?;
        if tuple.len() != self.signature[idx].arity {
            return Err(Error::signature(format!(
                "tuple of length {} for {symbol} of arity {}",
                tuple.len(),
                self.signature[idx].arity
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&d| d >= self.domain_size) {
            return Err(Error::range(format!(
                "element {bad} outside domain of size {}",
                self.domain_size
            )));
        }
        self.relations[idx].insert(tuple);
        Ok(())
    }

    pub fn with_tuples<I>(mut self, symbol: &str, tuples: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        for t in tuples {
            self.add_tuple(symbol, t)?;
        }
        Ok(self)
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn signature(&self) -> &[Symbol] {
        &self.signature
    }

    pub fn relation(&self, idx: usize) -> &BTreeSet<Vec<usize>> {
        &self.relations[idx]
    }

    pub fn relation_by_name(&self, name: &str) -> Option<&BTreeSet<Vec<usize>>> {
        find_symbol(&self.signature, name).map(|i| &self.relations[i])
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        find_symbol(&self.signature, name)
    }

    /// A graph viewed as a structure with one symmetric binary relation `E`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut s = FiniteStructure::new(g.vertex_count().max(1), vec![Symbol::new("E", 2)])
            .expect("single symbol");
        if g.vertex_count() == 0 {
            // the empty graph has no structure counterpart; callers never
            // rely on it, but keep the signature intact
            return s;
        }
        for (u, v) in g.edge_iter() {
            s.relations[0].insert(vec![u, v]);
            s.relations[0].insert(vec![v, u]);
        }
        s
    }

    /// Reads a binary relation back as a simple graph, ignoring loops and
    /// direction.
    pub fn binary_as_graph(&self, symbol: &str) -> Result<Graph> {
        let rel = self
            .relation_by_name(symbol)
            .ok_or_else(|| Error::signature(format!("unknown symbol {symbol}")))?;
        let mut g = Graph::empty(self.domain_size)?;
        for t in rel {
            if t.len() != 2 {
                return Err(Error::signature(format!("{symbol} is not binary")));
            }
            if t[0] != t[1] {
                g.add_edge(t[0], t[1])?;
            }
        }
        Ok(g)
    }
}

/// A CSP instance: variables `0..var_count` and constraints naming template
/// symbols. Unary colour constraints are ordinary arity-1 constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureInstance {
    pub var_count: usize,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constraint {
    pub symbol: String,
    pub vars: Vec<usize>,
}

impl Constraint {
    pub fn new(symbol: impl Into<String>, vars: Vec<usize>) -> Self {
        Constraint {
            symbol: symbol.into(),
            vars,
        }
    }
}

impl StructureInstance {
    pub fn new(var_count: usize) -> Self {
        StructureInstance {
            var_count,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, symbol: impl Into<String>, vars: Vec<usize>) -> Result<()> {
        if let Some(&v) = vars.iter().find(|&&v| v >= self.var_count) {
            return Err(Error::range(format!(
                "variable {v} outside 0..{}",
                self.var_count
            )));
        }
        self.constraints.push(Constraint::new(symbol, vars));
        Ok(())
    }

    /// One `E(u, v)` constraint per edge.
    pub fn from_graph(g: &Graph) -> Self {
        StructureInstance {
            var_count: g.vertex_count(),
            constraints: g
                .edge_iter()
                .map(|(u, v)| Constraint::new("E", vec![u, v]))
                .collect(),
        }
    }

    /// Checks every constraint against `sig`, returning symbol indices.
    pub fn resolve(&self, sig: &[Symbol]) -> Result<Vec<usize>> {
        self.constraints
            .iter()
            .map(|c| {
                let idx = find_symbol(sig, &c.symbol).ok_or_else(|| {
                    Error::signature(format!("symbol {} not in template signature", c.symbol))
                })?;
                if sig[idx].arity != c.vars.len() {
                    return Err(Error::signature(format!(
                        "{} used with {} arguments, arity is {}",
                        c.symbol,
                        c.vars.len(),
                        sig[idx].arity
                    )));
                }
                if let Some(&v) = c.vars.iter().find(|&&v| v >= self.var_count) {
                    return Err(Error::range(format!("variable {v} outside 0..{}", self.var_count)));
                }
                Ok(idx)
            })
            .collect()
    }

    /// True iff `map` sends every constraint tuple into its relation.
    pub fn is_homomorphism(&self, tmpl: &FiniteStructure, map: &[usize]) -> Result<bool> {
        let idx = self.resolve(tmpl.signature())?;
        if map.len() != self.var_count || map.iter().any(|&d| d >= tmpl.domain_size()) {
            return Ok(false);
        }
        Ok(self.constraints.iter().zip(idx).all(|(c, i)| {
            let image: Vec<usize> = c.vars.iter().map(|&v| map[v]).collect();
            tmpl.relation(i).contains(&image)
        }))
    }
}

/// Named templates used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinTemplate {
    /// Pair colouring template on `{b, g, r} = {0, 1, 2}`.
    StructA,
    /// Two-element template encoding split sandwiches as 2-SAT.
    StructK,
    OneInThree,
    Clique(usize),
}

pub const COLOUR_B: usize = 0;
pub const COLOUR_G: usize = 1;
pub const COLOUR_R: usize = 2;

impl BuiltinTemplate {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "structA" | "A" => Ok(BuiltinTemplate::StructA),
            "structK" | "K" => Ok(BuiltinTemplate::StructK),
            "1in3" | "one-in-three" => Ok(BuiltinTemplate::OneInThree),
            _ => match name.strip_prefix("clique:") {
                Some(k) => k
                    .parse()
                    .map(BuiltinTemplate::Clique)
                    .map_err(|_| Error::Invalid(format!("bad clique size in {name}"))),
                None => Err(Error::Invalid(format!("unknown template {name}"))),
            },
        }
    }

    pub fn build(self) -> FiniteStructure {
        match self {
            BuiltinTemplate::StructA => struct_a(),
            BuiltinTemplate::StructK => struct_k(),
            BuiltinTemplate::OneInThree => one_in_three(),
            BuiltinTemplate::Clique(k) => clique(k),
        }
    }
}

/// All orderings of a triple.
fn permutations3(t: [usize; 3]) -> impl Iterator<Item = Vec<usize>> {
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    ORDERS.into_iter().map(move |o| vec![t[o[0]], t[o[1]], t[o[2]]])
}

/// Domain `{b, g, r}`; `U_N = {r}`, `U_E = {b, g}`, and `T` the symmetric
/// closure of `{bbb, ggg, rrr, brr, grr, bgr}`.
pub fn struct_a() -> FiniteStructure {
    let (b, g, r) = (COLOUR_B, COLOUR_G, COLOUR_R);
    let t = [[b, b, b], [g, g, g], [r, r, r], [b, r, r], [g, r, r], [b, g, r]]
        .into_iter()
        .flat_map(permutations3);
    FiniteStructure::new(
        3,
        vec![Symbol::new("U_N", 1), Symbol::new("U_E", 1), Symbol::new("T", 3)],
    )
    .and_then(|s| s.with_tuples("U_N", [vec![r]]))
    .and_then(|s| s.with_tuples("U_E", [vec![b], vec![g]]))
    .and_then(|s| s.with_tuples("T", t))
    .expect("well-formed builtin")
}

/// Two-element template: blue everywhere except `(0,0)`, red everywhere
/// except `(1,1)`.
pub fn struct_k() -> FiniteStructure {
    FiniteStructure::new(2, vec![Symbol::new("B", 2), Symbol::new("R", 2)])
        .and_then(|s| s.with_tuples("B", [vec![0, 1], vec![1, 0], vec![1, 1]]))
        .and_then(|s| s.with_tuples("R", [vec![0, 0], vec![0, 1], vec![1, 0]]))
        .expect("well-formed builtin")
}

pub fn one_in_three() -> FiniteStructure {
    FiniteStructure::new(2, vec![Symbol::new("R", 3)])
        .and_then(|s| s.with_tuples("R", [vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]))
        .expect("well-formed builtin")
}

pub fn clique(k: usize) -> FiniteStructure {
    let mut s = FiniteStructure::new(k.max(1), vec![Symbol::new("E", 2)]).expect("single symbol");
    for u in 0..k {
        for v in 0..k {
            if u != v {
                s.add_tuple("E", vec![u, v]).expect("in range");
            }
        }
    }
    s
}
