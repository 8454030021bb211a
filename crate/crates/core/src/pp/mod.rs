//! Primitive positive formulas, pp-powers and gadget reductions.

mod builtins;
mod construction;
mod formula;
mod gadget;
mod ppc;
mod ppower;

pub use builtins::{
    betweenness_to_permutation, c5_to_k5, gr_to_struct_a, grid_disequality, split12_to_one_in_three,
    split_equivalence, BuiltinConstruction,
};
pub use construction::PPConstruction;
pub use formula::{Atom, PPFormula};
pub use gadget::{gadget_reduce, gadget_to_sandwich, GadgetSandwich, NEQ_SYMBOL};
pub use ppc::{emit_ppc, parse_ppc};
pub use ppower::{pp_power, PPOWER_DOMAIN_CAP};
