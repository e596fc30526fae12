use super::roots::{RootSystem, Weight};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, HashSet};

/// Largest character (by dimension) that `weight_multiplicities` will expand.
pub const MAX_CHARACTER_DIMENSION: u64 = 2_000_000;

impl RootSystem {
    /// Classical dimension of `V_lambda` from the Weyl product
    /// `prod_{alpha > 0} (lambda + rho | alpha) / (rho | alpha)`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> BigInt {
        let shifted = lambda + &self.rho();
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for beta in self.positive_roots() {
            num *= self.pairing_root(&shifted, beta);
            den *= self.pairing_root(&self.rho(), beta);
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "Weyl dimension is not an integer");
        q
    }

    /// Dominant conjugate of `x` under the linear Weyl action.
    pub fn dominant_conjugate(&self, x: &Weight) -> Weight {
        let mut x = x.clone();
        while let Some(i) = x.0.iter().position(|&c| c < 0) {
            let k = x.0[i];
            x = &x - &self.simple_root_weight(i).scale(k);
        }
        x
    }

    /// The Weyl orbit of a dominant weight, by closure under simple reflections.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let l = self.rank();
        let simple: Vec<Weight> = (0..l).map(|i| self.simple_root_weight(i)).collect();
        let mut seen: HashSet<Weight> = HashSet::from([mu.clone()]);
        let mut stack = vec![mu.clone()];
        while let Some(x) = stack.pop() {
            for (i, a) in simple.iter().enumerate() {
                if x.0[i] != 0 {
                    let y = &x - &a.scale(x.0[i]);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
        }
        let mut v: Vec<Weight> = seen.into_iter().collect();
        v.sort();
        v
    }

    /// Dominant weights `mu <= lambda`, found by subtracting positive roots
    /// (every dominant `mu < lambda` is reachable through dominant weights).
    /// Sorted by increasing depth `height(lambda - mu)`.
    fn dominant_weights_below(&self, lambda: &Weight) -> Vec<(Weight, i64)> {
        let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut stack = vec![lambda.clone()];
        while let Some(x) = stack.pop() {
            for a in self.positive_root_weights() {
                let y = &x - a;
                if y.is_dominant() && seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        let mut v: Vec<(Weight, i64)> = seen
            .into_iter()
            .map(|mu| {
                let depth = self
                    .root_lattice_coords(&(lambda - &mu))
                    .expect("same root-lattice coset")
                    .height();
                (mu, depth)
            })
            .collect();
        v.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// Multiplicities of the dominant weights of `V_lambda` by Freudenthal's
    /// recursion, written with integer pairings only:
    /// `m(mu) (lambda - mu | lambda + mu + 2 rho) = 2 sum_{alpha>0, k>=1} (mu + k alpha | alpha) m(mu + k alpha)`.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> BTreeMap<Weight, u64> {
        assert!(lambda.is_dominant());
        let two_rho = self.rho().scale(2);
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        for (mu, depth) in self.dominant_weights_below(lambda) {
            if depth == 0 {
                mult.insert(mu, 1);
                continue;
            }
            let diff = self
                .root_lattice_coords(&(lambda - &mu))
                .expect("same root-lattice coset");
            let gap = self.cartan().pairing_with_root(&(&(lambda + &mu) + &two_rho).0, &diff.0);
            let mut total: i64 = 0;
            for (beta, bw) in self.positive_roots().iter().zip(self.positive_root_weights()) {
                let mu_beta = self.pairing_root(&mu, beta);
                let beta_beta = self.pairing_root(bw, beta);
                let mut y = &mu + bw;
                let mut k = 1;
                loop {
                    let m = mult.get(&self.dominant_conjugate(&y)).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    total += (mu_beta + k * beta_beta) * m as i64;
                    y = &y + bw;
                    k += 1;
                }
            }
            let (q, r) = (2 * total).div_rem(&gap);
            assert!(r == 0 && q > 0, "Freudenthal recursion failed at {mu}");
            mult.insert(mu, q as u64);
        }
        mult
    }

    /// Full character of `V_lambda`: every weight with its multiplicity.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
        if !lambda.is_dominant() {
            return Err(Error::InvalidParameters(format!("{lambda} is not dominant")));
        }
        let dim = self.weyl_dimension(lambda);
        if dim.to_u64().is_none_or(|d| d > MAX_CHARACTER_DIMENSION) {
            return Err(Error::ResourceGuard(format!(
                "dim V_{lambda} = {dim} exceeds {MAX_CHARACTER_DIMENSION}"
            )));
        }
        let mut out = BTreeMap::new();
        for (mu, m) in self.dominant_multiplicities(lambda) {
            for w in self.orbit(&mu) {
                out.insert(w, m);
            }
        }
        Ok(out)
    }
}
