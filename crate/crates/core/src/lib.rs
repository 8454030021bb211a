//! Graph sandwich problems treated as constraint satisfaction problems.
//!
//! A sandwich instance fixes some pairs of a vertex set as edges (forced),
//! some as non-edges (forbidden), and leaves the rest open; the question is
//! whether the open pairs can be decided so the graph lands in a class.
//! The crate has recognizers for the classes, polynomial solvers where they
//! exist, an exhaustive oracle with a pruned search next to it, finite
//! template CSP machinery (homomorphisms, pp-powers, Siggers polymorphisms)
//! and the instance reductions between all of these.

pub mod certificate;
pub mod crosscheck;
pub mod csp;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod grid;
pub mod instance;
pub mod iso;
pub mod oracle;
pub mod poly;
pub mod pp;
pub mod recognize;
pub mod reduce;
pub mod solve;
pub mod structure;
pub mod twosat;

pub use certificate::{validate, validate_completion, validate_hom, Certificate};
pub use error::{Error, Result};
pub use graph::{Graph, Pair};
pub use instance::{ColouredGraph, SandwichInstance};
pub use recognize::{ClassId, FamilySpec};
pub use solve::{solve, Method};
pub use structure::{FiniteStructure, StructureInstance, Symbol};
