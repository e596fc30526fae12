use super::cartan::CartanData;
use super::types::{Family, LieType};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

/// A weight in fundamental-weight coordinates: `sum_i coords[i] * lambda_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `n * lambda_i` (zero-based `i`).
    pub fn fundamental(rank: usize, i: usize, n: i64) -> Self {
        let mut c = vec![0; rank];
        c[i] = n;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A root in simple-root coordinates: `sum_i coords[i] * alpha_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root{:?}", self.0)
    }
}

/// Cartan data together with the positive roots, `rho` and the highest
/// short root `alpha_0`. Immutable once built.
#[derive(Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: CartanData,
    positive: Vec<Root>,
    positive_weights: Vec<Weight>,
    alpha0: Root,
    alpha0_weight: Weight,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let cartan = CartanData::new(lie_type);
        let positive = closure(&cartan);
        let positive_weights = positive
            .iter()
            .map(|b| Weight(cartan.to_fundamental_coords(&b.0)))
            .collect();
        let alpha0 = highest_short_root(&cartan, &positive)
            .unwrap_or_else(|| panic!("{lie_type}: highest short root is not unique"));
        let alpha0_weight = Weight(cartan.to_fundamental_coords(&alpha0.0));
        let sys = Self {
            lie_type,
            cartan,
            positive,
            positive_weights,
            alpha0,
            alpha0_weight,
        };
        assert_eq!(
            sys.pairing_root(&sys.rho(), &sys.alpha0) + 1,
            coxeter_table(lie_type),
            "{lie_type}: (rho|alpha_0) + 1 disagrees with the Coxeter number"
        );
        sys
    }

    /// Shared, lazily built instance for `t`.
    pub fn get(t: LieType) -> Arc<Self> {
        static CACHE: OnceLock<RwLock<HashMap<LieType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.read().unwrap().get(&t) {
            return s.clone();
        }
        let s = Arc::new(Self::new(t));
        cache.write().unwrap().entry(t).or_insert(s).clone()
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    /// Positive roots, sorted by height then coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots in fundamental-weight coordinates, aligned with
    /// [`Self::positive_roots`].
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    pub fn root_weight(&self, beta: &Root) -> Weight {
        Weight(self.cartan.to_fundamental_coords(&beta.0))
    }

    /// `alpha_i` in fundamental-weight coordinates (column `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        self.root_weight(&Root::simple(self.rank(), i))
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn alpha0(&self) -> &Root {
        &self.alpha0
    }

    pub fn alpha0_weight(&self) -> &Weight {
        &self.alpha0_weight
    }

    pub fn pairing(&self, x: &Weight, y: &Weight) -> Ratio<i64> {
        self.cartan.pairing(&x.0, &y.0)
    }

    pub fn pairing_root(&self, x: &Weight, beta: &Root) -> i64 {
        self.cartan.pairing_with_root(&x.0, &beta.0)
    }

    /// `(x + rho | alpha_0)`.
    pub fn shifted_alpha0(&self, x: &Weight) -> i64 {
        self.pairing_root(x, &self.alpha0) + self.pairing_root(&self.rho(), &self.alpha0)
    }

    /// `(x + rho | alpha_i)`.
    pub fn shifted_simple(&self, x: &Weight, i: usize) -> i64 {
        self.cartan.d[i] * (x.0[i] + 1)
    }

    pub fn root_lattice_coords(&self, x: &Weight) -> Option<Root> {
        self.cartan.root_lattice_coords(&x.0).map(Root)
    }

    pub fn in_root_lattice(&self, x: &Weight) -> bool {
        self.root_lattice_coords(x).is_some()
    }

    /// `h`, computed as `(rho | alpha_0) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.pairing_root(&self.rho(), &self.alpha0) + 1
    }

    /// `m(g)`: primes `r > m(g)` are admissible.
    pub fn m_bound(&self) -> i64 {
        m_bound(self.lie_type)
    }

    /// `sn(w_0) = (-1)^{|Phi_+|}`.
    pub fn sign_w0(&self) -> i64 {
        if self.positive.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn coxeter_table(t: LieType) -> i64 {
    let l = t.rank() as i64;
    match t.family() {
        Family::A => l + 1,
        Family::B | Family::C => 2 * l,
        Family::D => 2 * l - 2,
        Family::E => {
            if l == 6 {
                12
            } else {
                18
            }
        }
    }
}

pub fn m_bound(t: LieType) -> i64 {
    let l = t.rank() as i64;
    match t.family() {
        Family::A => l + 1,
        Family::B => 2 * l,
        Family::C => 3 * l - 1,
        Family::D => 3 * l - 6,
        Family::E => {
            if l == 6 {
                14
            } else {
                21
            }
        }
    }
}

/// Positive roots by closure from the simple roots: for positive `beta` and
/// simple `alpha_i`, `beta + alpha_i` is a root iff `p - <beta, alpha_i^v> > 0`
/// where `p` is the length of the `alpha_i`-string below `beta`.
fn closure(c: &CartanData) -> Vec<Root> {
    let l = c.rank();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..l).map(|i| Root::simple(l, i).0).collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            let pair = c.to_fundamental_coords(beta);
            for i in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
    roots
}

fn highest_short_root(c: &CartanData, positive: &[Root]) -> Option<Root> {
    let short: Vec<&Root> = positive
        .iter()
        .filter(|b| c.pairing_with_root(&c.to_fundamental_coords(&b.0), &b.0) == 2)
        .collect();
    let maximal: Vec<&&Root> = short
        .iter()
        .filter(|a| short.iter().all(|b| a.0.iter().zip(&b.0).all(|(x, y)| x >= y)))
        .collect();
    match maximal.as_slice() {
        [a] => Some((**a).clone()),
        _ => None,
    }
}
