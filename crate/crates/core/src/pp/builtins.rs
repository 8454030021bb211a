use super::construction::PPConstruction;
use super::formula::PPFormula;
use crate::error::{Error, Result};
use crate::structure::{struct_a, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinConstruction {
    /// `E(x, y) := ∃z,w E(x,z) ∧ E(z,w) ∧ E(w,y)`.
    C5ToK5,
    /// Blue triangle for the 1-in-3 relation, with the six-vertex quotient
    /// gadget.
    Split12ToOneInThree,
    /// Two-witness betweenness gadget for permutation graphs.
    BetweennessToPermutation,
    /// Two-dimensional construction of the pair colouring template from
    /// the 2-edge-coloured grid.
    GrToStructA,
}

impl BuiltinConstruction {
    pub const ALL: [BuiltinConstruction; 4] = [
        BuiltinConstruction::C5ToK5,
        BuiltinConstruction::Split12ToOneInThree,
        BuiltinConstruction::BetweennessToPermutation,
        BuiltinConstruction::GrToStructA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinConstruction::C5ToK5 => "c5k5",
            BuiltinConstruction::Split12ToOneInThree => "split12-1in3",
            BuiltinConstruction::BetweennessToPermutation => "betweenness-perm",
            BuiltinConstruction::GrToStructA => "gr-structa",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name() == name)
            .ok_or_else(|| Error::Invalid(format!("unknown builtin construction {name}")))
    }

    pub fn build(self) -> PPConstruction {
        match self {
            BuiltinConstruction::C5ToK5 => c5_to_k5(),
            BuiltinConstruction::Split12ToOneInThree => split12_to_one_in_three(),
            BuiltinConstruction::BetweennessToPermutation => betweenness_to_permutation(),
            BuiltinConstruction::GrToStructA => gr_to_struct_a(),
        }
    }
}

fn blue_red() -> Vec<Symbol> {
    vec![Symbol::new("B", 2), Symbol::new("R", 2)]
}

pub fn c5_to_k5() -> PPConstruction {
    let e = PPFormula::new(&["x", "y"], &["z", "w"])
        .atom("E", &["x", "z"])
        .atom("E", &["z", "w"])
        .atom("E", &["w", "y"]);
    PPConstruction::new(1, vec![Symbol::new("E", 2)], vec![Symbol::new("E", 2)], vec![e])
        .expect("well-formed builtin")
}

/// `x ~ y` holds iff `x` and `y` lie on the same side of the split.
pub fn split_equivalence() -> PPFormula {
    PPFormula::new(&["x", "y"], &["z", "w1", "w2", "w3"])
        .atom("R", &["x", "z"])
        .atom("R", &["z", "y"])
        .atom("B", &["x", "w1"])
        .atom("B", &["x", "w2"])
        .atom("B", &["y", "w2"])
        .atom("B", &["y", "w3"])
        .atom("B", &["w1", "w2"])
        .atom("B", &["w2", "w3"])
        .atom("B", &["z", "w1"])
        .atom("B", &["z", "w2"])
        .atom("B", &["z", "w3"])
}

pub fn split12_to_one_in_three() -> PPConstruction {
    let r = PPFormula::new(&["x", "y", "z"], &[])
        .atom("B", &["x", "y"])
        .atom("B", &["y", "z"])
        .atom("B", &["x", "z"]);
    PPConstruction::new(1, blue_red(), vec![Symbol::new("R", 3)], vec![r])
        .and_then(|c| c.with_equiv(split_equivalence()))
        .expect("well-formed builtin")
}

pub fn betweenness_to_permutation() -> PPConstruction {
    let r = PPFormula::new(&["x", "y", "z"], &["w1", "w2"])
        .atom("B", &["x", "w1"])
        .atom("B", &["w1", "y"])
        .atom("B", &["y", "w2"])
        .atom("B", &["w2", "z"])
        .atom("R", &["x", "y"])
        .atom("R", &["x", "w2"])
        .atom("R", &["x", "z"])
        .atom("R", &["w1", "w2"])
        .atom("R", &["w1", "z"])
        .atom("R", &["y", "z"]);
    PPConstruction::new(1, blue_red(), vec![Symbol::new("Betw", 3)], vec![r])
        .expect("well-formed builtin")
}

/// `∃w B(w,x) ∧ R(w,y)`, which defines `x != y` in the grid.
pub fn grid_disequality() -> PPFormula {
    PPFormula::new(&["x", "y"], &["w"])
        .atom("B", &["w", "x"])
        .atom("R", &["w", "y"])
}

/// Appends the atoms of `gamma(p1, p2, q1, q2)` with fresh witnesses named
/// after `tag`: both pairs vertical, both horizontal, or both non-adjacent.
fn push_gamma(f: &mut PPFormula, tag: &str, p1: &str, p2: &str, q1: &str, q2: &str) {
    let w: Vec<String> = (1..=4).map(|i| format!("{tag}w{i}")).collect();
    f.exist.extend(w.iter().cloned());
    let (w1, w2, w3, w4) = (w[0].as_str(), w[1].as_str(), w[2].as_str(), w[3].as_str());
    let mut g = std::mem::take(f)
        .atom("B", &[w1, w2])
        .atom("B", &[w2, w4])
        .atom("B", &[w4, w3])
        .atom("B", &[w3, w1])
        .atom("B", &[p1, w1])
        .atom("B", &[p2, w1])
        .atom("R", &[p1, w2])
        .atom("R", &[p2, w3])
        .atom("B", &[q1, w4])
        .atom("B", &[q2, w4])
        .atom("R", &[q1, w2])
        .atom("R", &[q2, w3])
        .neq(p1, p2)
        .neq(q1, q2)
        .neq(w2, w3);
    std::mem::swap(f, &mut g);
}

pub fn gr_to_struct_a() -> PPConstruction {
    let domain = PPFormula::new(&["x", "y"], &[]).neq("x", "y");
    let u_n = PPFormula::new(&["x", "y"], &[]).atom("R", &["x", "y"]);
    let u_e = PPFormula::new(&["x", "y"], &[]).atom("B", &["x", "y"]);
    let mut t = PPFormula::new(&["x1", "y1", "x2", "y2", "x3", "y3"], &["u", "v", "w"]);
    push_gamma(&mut t, "a", "x1", "y1", "u", "v");
    push_gamma(&mut t, "b", "x2", "y2", "v", "w");
    push_gamma(&mut t, "c", "x3", "y3", "w", "u");
    PPConstruction::new(2, blue_red(), struct_a().signature().to_vec(), vec![u_n, u_e, t])
        .and_then(|c| c.with_domain(domain))
        .and_then(|c| c.with_neq_gadget(grid_disequality()))
        .expect("well-formed builtin")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for b in BuiltinConstruction::ALL {
            assert_eq!(BuiltinConstruction::parse(b.name()).unwrap(), b);
            b.build().validate().unwrap();
        }
        assert!(BuiltinConstruction::parse("nope").is_err());
    }

    #[test]
    fn gr_t_formula_shape() {
        let c = gr_to_struct_a();
        let t = c.def("T").unwrap();
        assert_eq!(t.free.len(), 6);
        assert_eq!(t.exist.len(), 3 + 3 * 4);
        assert_eq!(t.atoms.len(), 3 * 12);
        assert_eq!(t.neqs.len(), 3 * 3);
    }

    #[test]
    fn split_equivalence_atoms() {
        let f = split_equivalence();
        assert_eq!(f.exist, ["z", "w1", "w2", "w3"]);
        assert_eq!(f.atoms.len(), 11);
        assert_eq!(f.atoms.iter().filter(|a| a.symbol == "R").count(), 2);
    }
}
