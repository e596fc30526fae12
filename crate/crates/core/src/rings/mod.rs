//! Exact rings: `Z[v, v^-1]`, `Z[zeta_n]` and `Z[zeta_n, 1/r]`.

pub mod cyclotomic;
pub mod laurent;
pub mod localized;
pub mod quantum;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, is_prime, Cyclotomic};
pub use laurent::LaurentPoly;
pub use localized::LocalizedCyclotomic;
pub use quantum::{quantum_binomial, quantum_factorial, quantum_int, quantum_int_at_root};
