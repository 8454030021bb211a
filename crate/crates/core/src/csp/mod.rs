//! Finite-template CSP: homomorphism search, direct powers and polymorphism
//! search.

mod hom;
mod power;
mod siggers;

pub use hom::{hom_exists_brute, hom_search, hom_search_with, SearchControl, HOM_DOMAIN_CAP};
pub use power::{decode, encode, structure_power, POWER_DOMAIN_CAP};
pub use siggers::{
    enumerate_polymorphisms_naive, has_siggers, has_siggers_with, is_polymorphism, validate_siggers,
    NaiveReport, OpTable, SIGGERS_DOMAIN_CAP,
};
