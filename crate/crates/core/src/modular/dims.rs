use crate::error::{Error, Result};
use crate::lie::{RootSystem, Weight};
use crate::report::Report;
use crate::rings::Cyclotomic;

/// `xi^a - xi^-a`.
fn antisym(r: u64, a: i64) -> Cyclotomic {
    &Cyclotomic::zeta_pow(r, a) - &Cyclotomic::zeta_pow(r, -a)
}

/// `delta(K_{2 rho}) = prod_{alpha > 0} (xi^{(rho|alpha)} - xi^{-(rho|alpha)})`.
pub fn weyl_denominator(sys: &RootSystem, r: u64) -> Cyclotomic {
    let rho = sys.rho();
    sys.positive_roots()
        .iter()
        .map(|b| antisym(r, sys.pairing_root(&rho, b)))
        .fold(Cyclotomic::one(r), |a, b| &a * &b)
}

/// Quantum dimension at `xi` from the Weyl product
/// `prod_{alpha > 0} [(lambda + rho | alpha)] / [(rho | alpha)]`, divided exactly.
pub fn qdim(sys: &RootSystem, lambda: &Weight, r: u64) -> Result<Cyclotomic> {
    if !lambda.is_dominant() {
        return Err(Error::InvalidParameters(format!("{lambda} is not dominant")));
    }
    let shifted = lambda + &sys.rho();
    let num = sys
        .positive_roots()
        .iter()
        .map(|b| antisym(r, sys.pairing_root(&shifted, b)))
        .fold(Cyclotomic::one(r), |a, b| &a * &b);
    num.div_exact_or_err(&weyl_denominator(sys, r), "qdim")
}

/// Quantum dimension as the trace of `K_{2 rho}`: `sum_mu m(mu) xi^{(2 rho | mu)}`.
pub fn qdim_by_character(sys: &RootSystem, lambda: &Weight, r: u64) -> Result<Cyclotomic> {
    let two_rho = sys
        .root_lattice_coords(&sys.rho().scale(2))
        .expect("2 rho is in the root lattice");
    let mut out = Cyclotomic::zero(r);
    for (mu, m) in sys.weight_multiplicities(lambda)? {
        let e = sys.pairing_root(&mu, &two_rho);
        out = &out + &Cyclotomic::zeta_pow(r, e).scale(&num_bigint::BigInt::from(m));
    }
    Ok(out)
}

/// `(lambda | lambda + 2 rho)`, the exponent of the ribbon twist; requires
/// `lambda` in the root lattice.
pub fn twist_exponent(sys: &RootSystem, lambda: &Weight) -> Result<i64> {
    let k = sys
        .root_lattice_coords(lambda)
        .ok_or_else(|| Error::NotInRootLattice(lambda.0.clone()))?;
    Ok(sys.pairing_root(&(lambda + &sys.rho().scale(2)), &k))
}

/// `theta_lambda = xi^{(lambda | lambda + 2 rho)}`.
pub fn twist(sys: &RootSystem, lambda: &Weight, r: u64) -> Result<Cyclotomic> {
    Ok(Cyclotomic::zeta_pow(r, twist_exponent(sys, lambda)?))
}

/// Dominant root-lattice weights on the affine wall `(lambda + rho | alpha_0) = r`.
pub fn wall_weights(sys: &RootSystem, r: u64) -> Vec<Weight> {
    sys.dominant_alcove_weights(r + 1)
        .into_iter()
        .filter(|x| sys.shifted_alpha0(x) == r as i64 && sys.in_root_lattice(x))
        .collect()
}

/// `qdim` vanishes on every wall weight.
pub fn verify_wall_vanishing(sys: &RootSystem, r: u64) -> Result<Report> {
    let mut rep = Report::new(format!("wall vanishing ({}, r = {r})", sys.lie_type()));
    let walls = wall_weights(sys, r);
    let mut bad = Vec::new();
    for w in &walls {
        if !qdim(sys, w, r)?.is_zero() {
            bad.push(w.to_string());
        }
    }
    rep.push(
        "qdim = 0 on the affine wall",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} wall weights", walls.len())
        } else {
            format!("nonzero at {}", bad.join(", "))
        },
    );
    Ok(rep)
}
