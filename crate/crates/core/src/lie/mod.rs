//! Root data for the simple Lie algebras of type A, B, C, D, E6 and E7.

mod alcove;
mod cartan;
mod character;
mod roots;
mod types;

pub use alcove::{
    alcove_labels, check_admissible, smallest_admissible_prime, verify_generators,
    GeneratorCheck, GeneratorReport,
};
pub use cartan::CartanData;
pub use character::MAX_CHARACTER_DIMENSION;
pub use roots::{coxeter_table, m_bound, Root, RootSystem, Weight};
pub use types::{Family, LieType};

use serde::Serialize;

/// Static data for one Lie type, as written by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct LieSummary {
    pub lie_type: LieType,
    pub cartan: CartanData,
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    pub alpha0: Root,
    pub coxeter_number: i64,
    pub m_bound: i64,
    pub sign_w0: i64,
}

impl LieSummary {
    pub fn new(t: LieType) -> Self {
        let s = RootSystem::get(t);
        Self {
            lie_type: t,
            cartan: s.cartan().clone(),
            positive_roots: s.positive_roots().to_vec(),
            rho: s.rho(),
            alpha0: s.alpha0().clone(),
            coxeter_number: s.coxeter_number(),
            m_bound: s.m_bound(),
            sign_w0: s.sign_w0(),
        }
    }
}
