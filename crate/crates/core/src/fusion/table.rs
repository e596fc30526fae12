use crate::error::{Error, Result};
use crate::lie::{check_admissible, LieType, RootSystem, Weight};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// `N_{lambda mu}^nu` by the Kac-Walton sum over the weights `beta` of `V_mu`:
/// `sum_beta m(beta) * sign * [affine_fold(lambda + beta) = nu]`.
fn fold_character(
    sys: &RootSystem,
    lambda: &Weight,
    character: &BTreeMap<Weight, u64>,
    r: u64,
) -> Result<BTreeMap<Weight, i64>> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (beta, m) in character {
        if let Some((sign, nu)) = sys.affine_fold(&(lambda + beta), r)? {
            *out.entry(nu).or_insert(0) += sign * *m as i64;
        }
    }
    out.retain(|_, n| *n != 0);
    Ok(out)
}

fn nonnegative(raw: BTreeMap<Weight, i64>, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    raw.into_iter()
        .map(|(nu, n)| {
            u64::try_from(n).map(|n| (nu.clone(), n)).map_err(|_| {
                Error::Verification(format!("negative multiplicity {n} of {nu} in {lambda} x {mu}"))
            })
        })
        .collect()
}

/// Decomposition of `V_lambda (x) V_mu` in the semisimple quotient at level
/// `r`, summing over the character of the smaller factor.
pub fn fusion(t: LieType, lambda: &Weight, mu: &Weight, r: u64) -> Result<BTreeMap<Weight, u64>> {
    let sys = RootSystem::get(t);
    for x in [lambda, mu] {
        if !(sys.in_open_alcove(x, r) && sys.in_root_lattice(x)) {
            return Err(Error::NotALabel(x.to_string()));
        }
    }
    let (big, small) = if sys.weyl_dimension(lambda) >= sys.weyl_dimension(mu) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let ch = sys.weight_multiplicities(small)?;
    nonnegative(fold_character(&sys, big, &ch, r)?, lambda, mu)
}

/// The fusion rules of the quotient category for an admissible `(t, r)`.
/// Construction checks unit, commutativity, associativity, duality and
/// closure, and fails rather than return an inconsistent table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    lie_type: LieType,
    r: u64,
    labels: Vec<Weight>,
    index: HashMap<Weight, usize>,
    dual: Vec<usize>,
    /// `n[(i * len + j) * len + k] = N_{ij}^k`.
    n: Vec<u32>,
}

/// One nonzero fusion coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionEntry {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub n: u32,
}

#[derive(Serialize, Deserialize)]
struct RawFusionTable {
    lie_type: LieType,
    r: u64,
    labels: Vec<Weight>,
    entries: Vec<FusionEntry>,
}

impl FusionTable {
    pub fn new(t: LieType, r: u64) -> Result<Self> {
        check_admissible(t, r)?;
        let sys = RootSystem::get(t);
        let labels = sys.alcove_labels(r);
        let len = labels.len();
        let index: HashMap<Weight, usize> =
            labels.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let characters: Vec<Arc<BTreeMap<Weight, u64>>> = labels
            .par_iter()
            .map(|w| sys.weight_multiplicities(w).map(Arc::new))
            .collect::<Result<_>>()?;
        let dims: Vec<_> = labels.iter().map(|w| sys.weyl_dimension(w)).collect();
        let pairs: Vec<(usize, usize)> = (0..len).flat_map(|i| (i..len).map(move |j| (i, j))).collect();
        let rows: Vec<((usize, usize), BTreeMap<Weight, u64>)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (big, small) = if dims[i] >= dims[j] { (i, j) } else { (j, i) };
                let raw = fold_character(&sys, &labels[big], &characters[small], r)?;
                Ok(((i, j), nonnegative(raw, &labels[i], &labels[j])?))
            })
            .collect::<Result<_>>()?;
        let mut n = vec![0u32; len * len * len];
        for ((i, j), row) in rows {
            for (nu, m) in row {
                let k = *index
                    .get(&nu)
                    .ok_or_else(|| Error::Verification(format!("{nu} is not a label")))?;
                let m = u32::try_from(m).map_err(|_| Error::ResourceGuard("fusion coefficient overflow".into()))?;
                n[(i * len + j) * len + k] = m;
                n[(j * len + i) * len + k] = m;
            }
        }
        let dual = labels
            .iter()
            .map(|w| {
                index
                    .get(&sys.dual_weight(w))
                    .copied()
                    .ok_or_else(|| Error::Verification(format!("dual of {w} is not a label")))
            })
            .collect::<Result<_>>()?;
        let table = Self {
            lie_type: t,
            r,
            labels,
            index,
            dual,
            n,
        };
        table.verify()?;
        Ok(table)
    }

    /// Rebuilds a table from its nonzero entries and re-runs every check.
    pub fn from_entries(t: LieType, r: u64, entries: &[FusionEntry]) -> Result<Self> {
        check_admissible(t, r)?;
        let sys = RootSystem::get(t);
        let labels = sys.alcove_labels(r);
        let len = labels.len();
        let index: HashMap<Weight, usize> =
            labels.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut n = vec![0u32; len * len * len];
        let find = |w: &Weight| index.get(w).copied().ok_or_else(|| Error::NotALabel(w.to_string()));
        for e in entries {
            let (i, j, k) = (find(&e.lambda)?, find(&e.mu)?, find(&e.nu)?);
            n[(i * len + j) * len + k] = e.n;
        }
        let dual = labels
            .iter()
            .map(|w| find(&sys.dual_weight(w)))
            .collect::<Result<_>>()?;
        let table = Self {
            lie_type: t,
            r,
            labels,
            index,
            dual,
            n,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `N_{ij}^k` by label index.
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        let len = self.len();
        self.n[(i * len + j) * len + k]
    }

    /// Index of the dual label `-w_0(lambda_i)`.
    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// The decomposition of `lambda_i (x) lambda_j` as `(k, N_{ij}^k)` pairs.
    pub fn product(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.len())
            .map(move |k| (k, self.get(i, j, k)))
            .filter(|&(_, m)| m != 0)
    }

    pub fn entries(&self) -> Vec<FusionEntry> {
        let len = self.len();
        let mut out = Vec::new();
        for i in 0..len {
            for j in 0..len {
                for (k, m) in self.product(i, j) {
                    out.push(FusionEntry {
                        lambda: self.labels[i].clone(),
                        mu: self.labels[j].clone(),
                        nu: self.labels[k].clone(),
                        n: m,
                    });
                }
            }
        }
        out
    }

    /// Checks the unit, commutativity, duality and associativity axioms.
    pub fn verify(&self) -> Result<()> {
        let len = self.len();
        let fail = |msg: String| Err(Error::Verification(msg));
        if len == 0 || !self.labels[0].is_zero() {
            return fail("the zero weight must be the first label".into());
        }
        for i in 0..len {
            for k in 0..len {
                if self.get(0, i, k) != (i == k) as u32 {
                    return fail(format!("unit fails at {} -> {}", self.labels[i], self.labels[k]));
                }
            }
            if self.dual[self.dual[i]] != i {
                return fail(format!("dual is not an involution at {}", self.labels[i]));
            }
            for j in 0..len {
                for k in 0..len {
                    if self.get(i, j, k) != self.get(j, i, k) {
                        return fail(format!(
                            "N is not commutative at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
                let expected = (j == self.dual[i]) as u32;
                if self.get(i, j, 0) != expected {
                    return fail(format!(
                        "N_(lambda mu)^0 = {} for lambda = {}, mu = {}",
                        self.get(i, j, 0),
                        self.labels[i],
                        self.labels[j]
                    ));
                }
            }
        }
        // (a x b) x c = a x (b x c), coefficient by coefficient.
        let bad = (0..len).into_par_iter().find_map_any(|a| {
            for b in 0..len {
                for c in 0..len {
                    for s in 0..len {
                        let left: u64 = (0..len)
                            .map(|d| self.get(a, b, d) as u64 * self.get(d, c, s) as u64)
                            .sum();
                        let right: u64 = (0..len)
                            .map(|d| self.get(b, c, d) as u64 * self.get(a, d, s) as u64)
                            .sum();
                        if left != right {
                            return Some((a, b, c, s));
                        }
                    }
                }
            }
            None
        });
        if let Some((a, b, c, s)) = bad {
            return fail(format!(
                "associativity fails for ({}, {}, {}) at {}",
                self.labels[a], self.labels[b], self.labels[c], self.labels[s]
            ));
        }
        Ok(())
    }
}

impl Serialize for FusionTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawFusionTable {
            lie_type: self.lie_type,
            r: self.r,
            labels: self.labels.clone(),
            entries: self.entries(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FusionTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFusionTable::deserialize(d)?;
        let table = Self::from_entries(raw.lie_type, raw.r, &raw.entries).map_err(serde::de::Error::custom)?;
        if table.labels != raw.labels {
            return Err(serde::de::Error::custom("label list does not match (type, r)"));
        }
        Ok(table)
    }
}
