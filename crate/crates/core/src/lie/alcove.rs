use super::roots::{m_bound, RootSystem, Weight};
use super::types::{Family, LieType};
use crate::error::{Error, Result};
use crate::rings::is_prime;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

/// Rejects `(t, r)` unless `r` is an odd prime with `r > m(t)`.
pub fn check_admissible(t: LieType, r: u64) -> Result<()> {
    if !is_prime(r) {
        return Err(Error::InvalidParameters(format!("r = {r} is not prime")));
    }
    if r == 2 {
        return Err(Error::InvalidParameters("r = 2 is not odd".into()));
    }
    let m = m_bound(t);
    if (r as i64) <= m {
        return Err(Error::InvalidParameters(format!(
            "r = {r} does not exceed m({t}) = {m}"
        )));
    }
    Ok(())
}

impl RootSystem {
    /// Dominant weights `x` with `(x + rho | alpha_0) < r`, in lexicographic order.
    pub fn dominant_alcove_weights(&self, r: u64) -> Vec<Weight> {
        let l = self.rank();
        let r = r as i64;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let zero = Weight::zero(l);
        if self.shifted_alpha0(&zero) < r {
            seen.insert(zero.clone());
            queue.push_back(zero);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..l {
                let mut y = x.clone();
                y.0[i] += 1;
                if self.shifted_alpha0(&y) < r && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Simple-object labels: dominant root-lattice weights in the open alcove,
    /// sorted lexicographically (so the zero weight comes first).
    pub fn alcove_labels(&self, r: u64) -> Vec<Weight> {
        self.dominant_alcove_weights(r)
            .into_iter()
            .filter(|x| self.in_root_lattice(x))
            .collect()
    }

    /// True iff `(x + rho | alpha_0) = r` or `(x + rho | alpha_i) = 0` for some `i`.
    pub fn is_on_wall(&self, x: &Weight, r: u64) -> bool {
        self.shifted_alpha0(x) == r as i64 || (0..self.rank()).any(|i| self.shifted_simple(x, i) == 0)
    }

    /// True iff `x` is dominant and `(x + rho | alpha_0) < r`.
    pub fn in_open_alcove(&self, x: &Weight, r: u64) -> bool {
        x.is_dominant() && self.shifted_alpha0(x) < r as i64
    }
}

/// Labels for an admissible `(t, r)`.
pub fn alcove_labels(t: LieType, r: u64) -> Result<Vec<Weight>> {
    check_admissible(t, r)?;
    Ok(RootSystem::get(t).alcove_labels(r))
}

/// One generating weight checked against the closed alcove.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCheck {
    pub description: String,
    pub weight: Weight,
    /// The computed pairing (see `quantity`).
    pub value: i64,
    /// The closed-form value the pairing must equal.
    pub expected: i64,
    pub quantity: &'static str,
    /// `(weight + rho | alpha_0)`, which must not exceed `r`.
    pub shifted_alpha0: i64,
    pub in_closed_alcove: bool,
    pub in_root_lattice: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorReport {
    pub lie_type: LieType,
    pub r: u64,
    pub checks: Vec<GeneratorCheck>,
    pub passed: bool,
}

impl GeneratorReport {
    pub fn failures(&self) -> impl Iterator<Item = &GeneratorCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks that the weights generating the tensor category of type `t` lie in
/// the closed alcove at level `r` and have their closed-form pairings with
/// `alpha_0`. Any prime `r` is accepted, so the report also shows exactly
/// which inequality fails below the admissible range.
pub fn verify_generators(t: LieType, r: u64) -> GeneratorReport {
    let sys = RootSystem::get(t);
    let l = t.rank();
    let li = l as i64;
    let h1 = sys.coxeter_number() - 1;
    // (i, n, closed form of (n lambda_i + rho | alpha_0)), zero-based i.
    let mut gens: Vec<(usize, i64, i64)> = Vec::new();
    let mut basis_check = false;
    match t.family() {
        Family::A => gens.extend((0..l).map(|i| (i, 1, li + 1))),
        Family::B => {
            gens.extend((0..l - 1).map(|i| (i, 1, 2 * li + 1)));
            gens.push((l - 1, 2, 2 * li + 1));
            basis_check = true;
        }
        Family::C => gens.extend((1..=li).map(|n| (0, n, n + 2 * li - 1))),
        Family::D => {
            for i in [0, l - 2, l - 1] {
                gens.extend((1..=li - 3).map(|n| (i, n, n + 2 * li - 3)));
            }
        }
        Family::E if l == 6 => {
            for i in [0, 5] {
                gens.extend((1..=3).map(|n| (i, n, n + 11)));
            }
        }
        Family::E => gens.extend((1..=4).map(|n| (6, n, n + 17))),
    }
    let checks: Vec<GeneratorCheck> = gens
        .into_iter()
        .map(|(i, n, closed)| {
            let w = Weight::fundamental(l, i, n);
            let shifted = sys.shifted_alpha0(&w);
            let in_closed_alcove = w.is_dominant() && shifted <= r as i64;
            let in_root_lattice = sys.in_root_lattice(&w);
            let (quantity, value, expected) = if basis_check {
                ("(mu | alpha_0)", shifted - h1, 2)
            } else {
                ("(mu + rho | alpha_0)", shifted, closed)
            };
            let passed = value == expected
                && shifted == closed
                && in_closed_alcove
                && (!basis_check || in_root_lattice);
            let description = if n == 1 {
                format!("lambda_{}", i + 1)
            } else {
                format!("{n} lambda_{}", i + 1)
            };
            GeneratorCheck {
                description,
                weight: w,
                value,
                expected,
                quantity,
                shifted_alpha0: shifted,
                in_closed_alcove,
                in_root_lattice,
                passed,
            }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    GeneratorReport {
        lie_type: t,
        r,
        checks,
        passed,
    }
}

/// The smallest prime exceeding `m(t)`.
pub fn smallest_admissible_prime(t: LieType) -> u64 {
    let mut r = (m_bound(t) + 1) as u64;
    while check_admissible(t, r).is_err() {
        r += 1;
    }
    r
}
