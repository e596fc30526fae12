//! Exact modular data for the semisimple quotient categories of quantum
//! groups at an odd prime root of unity, and integral 3-manifold invariants
//! computed from surgery presentations.

pub mod error;
pub mod fusion;
pub mod lie;
pub mod modular;
pub mod report;
pub mod rings;
pub mod sl2;
pub mod surgery;
pub mod verify;
mod serde_int;

pub use error::{Error, Result};
