//! Quantum dimensions, twists, the S-matrix, global dimension, the square
//! root `D` and the Kirby scalars `F_+-`, `kappa`.

mod data;
mod dims;
mod linalg;
mod roots_of_unity;

pub use data::ModularData;
pub use dims::{
    qdim, qdim_by_character, twist, twist_exponent, verify_wall_vanishing, wall_weights, weyl_denominator,
};
pub use linalg::determinant;
pub use roots_of_unity::{gauss_sum, sqrt_sign_r_power, zeta_order};
