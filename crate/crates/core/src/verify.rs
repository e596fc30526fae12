//! Every verification suite for one admissible `(t, r)`.

use crate::error::Result;
use crate::fusion::FusionTable;
use crate::lie::{check_admissible, verify_generators, LieType, RootSystem};
use crate::modular::{verify_wall_vanishing, ModularData};
use crate::report::Report;
use crate::sl2::verify_rank_one;
use crate::surgery::verify_surgery;
use std::sync::Arc;

/// Generator placement, wall vanishing, fusion axioms, modular data, the
/// global dimension identities, surgery invariants and the rank-one
/// structure up to `n = r`.
pub fn verify_all(t: LieType, r: u64, fusion: Option<Arc<FusionTable>>) -> Result<Vec<Report>> {
    check_admissible(t, r)?;
    let sys = RootSystem::get(t);
    let mut out = Vec::new();

    let gens = verify_generators(t, r);
    let mut rep = Report::new(format!("tensor generators in the closed alcove ({t}, r = {r})"));
    for c in &gens.checks {
        rep.push(
            format!("{} {}", c.description, c.weight),
            c.passed,
            format!("{} = {} (expected {}), shifted = {}", c.quantity, c.value, c.expected, c.shifted_alpha0),
        );
    }
    out.push(rep);
    out.push(verify_wall_vanishing(&sys, r)?);

    let fusion = match fusion {
        Some(f) => f,
        None => Arc::new(FusionTable::new(t, r)?),
    };
    let mut rep = Report::new(format!("fusion rules ({t}, r = {r})"));
    let axioms = fusion.verify();
    rep.push(
        "unit, commutativity, duality, associativity",
        axioms.is_ok(),
        match &axioms {
            Ok(()) => format!("{} labels", fusion.len()),
            Err(e) => e.to_string(),
        },
    );
    out.push(rep);

    let md = ModularData::from_fusion(fusion)?;
    out.push(md.verify_qdim_homomorphism());
    out.push(md.verify_modular());
    out.push(md.verify_dimension_identities(true));
    out.push(verify_surgery(&md)?);
    out.push(verify_rank_one(r as usize, r));
    Ok(out)
}
