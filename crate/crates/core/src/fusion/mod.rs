//! Fusion rules of the semisimple quotient: Klimyk sums folded into the
//! alcove by the affine Weyl group, with wall weights discarded.

mod fold;
mod table;

pub use table::{fusion, FusionEntry, FusionTable};
