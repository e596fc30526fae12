//! Closed 3-manifold invariants from surgery on disjoint framed unknots and
//! Hopf links, with the evenness predicate and integrality checks.

mod invariant;
mod presentation;
mod suite;

pub use invariant::{
    check_integrality, colored_bracket, in_z_xi, invariant, kirby_sum, kirby_sum_by_pieces, lens_sweep,
    IntegralityReport,
};
pub use presentation::{congruence_diagonal, LinkingData, Piece, SurgeryFile, SurgeryPresentation};
pub use suite::{presentation_sweep, verify_surgery};
