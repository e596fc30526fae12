use crate::error::{Error, Result};
use crate::lie::{RootSystem, Weight};

/// Upper bound on affine reflections in one fold.
const AFFINE_FOLD_CAP: usize = 100_000;

impl RootSystem {
    /// Moves `x` into the dominant chamber with simple dot-reflections
    /// `s_i . x = x - (x_i + 1) alpha_i`, returning the sign `(-1)^{#reflections}`.
    /// `None` when some `(x + rho | alpha_i)` vanishes along the way.
    pub fn finite_fold(&self, x: &Weight) -> Option<(i64, Weight)> {
        let mut x = x.clone();
        let mut sign = 1;
        loop {
            if x.0.contains(&-1) {
                return None;
            }
            match x.0.iter().position(|&c| c < -1) {
                Some(i) => {
                    let k = x.0[i] + 1;
                    x = &x - &self.simple_root_weight(i).scale(k);
                    sign = -sign;
                }
                None => return Some((sign, x)),
            }
        }
    }

    /// Folds `x` into the open alcove with the dot action of the affine Weyl
    /// group at level `r`. `None` when `x` is fixed by a reflection, i.e. lands
    /// on `(y + rho | alpha_i) = 0` or `(y + rho | alpha_0) = r`.
    pub fn affine_fold(&self, x: &Weight, r: u64) -> Result<Option<(i64, Weight)>> {
        let r = r as i64;
        let mut x = x.clone();
        let mut sign = 1;
        for _ in 0..AFFINE_FOLD_CAP {
            let Some((s, y)) = self.finite_fold(&x) else {
                return Ok(None);
            };
            sign *= s;
            let t = self.shifted_alpha0(&y);
            if t < r {
                return Ok(Some((sign, y)));
            }
            if t == r {
                return Ok(None);
            }
            x = &y + &self.alpha0_weight().scale(r - t);
            sign = -sign;
        }
        Err(Error::IterationCap("affine_fold"))
    }

    /// `-w_0(lambda)`: the dominant conjugate of `-lambda`.
    pub fn dual_weight(&self, lambda: &Weight) -> Weight {
        self.dominant_conjugate(&-lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;
    use proptest::prelude::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn finite_fold_examples() {
        let a1 = RootSystem::new(LieType::a(1));
        assert_eq!(a1.finite_fold(&w(&[3])), Some((1, w(&[3]))));
        assert_eq!(a1.finite_fold(&w(&[-2])), Some((-1, w(&[0]))));
        assert_eq!(a1.finite_fold(&w(&[-1])), None);
    }

    #[test]
    fn affine_fold_examples() {
        let a1 = RootSystem::new(LieType::a(1));
        assert_eq!(a1.affine_fold(&w(&[2]), 5).unwrap(), Some((1, w(&[2]))));
        assert_eq!(a1.affine_fold(&w(&[4]), 5).unwrap(), None);
        assert_eq!(a1.affine_fold(&w(&[6]), 5).unwrap(), Some((-1, w(&[2]))));
        // x + rho = -11: translate by 10, then reflect through 0.
        assert_eq!(a1.affine_fold(&w(&[-12]), 5).unwrap(), Some((-1, w(&[0]))));
    }

    #[test]
    fn duals() {
        let a2 = RootSystem::new(LieType::a(2));
        assert_eq!(a2.dual_weight(&w(&[3, 0])), w(&[0, 3]));
        assert_eq!(a2.dual_weight(&w(&[4, 1])), w(&[1, 4]));
        let a1 = RootSystem::new(LieType::a(1));
        assert_eq!(a1.dual_weight(&w(&[4])), w(&[4]));
        let d4 = RootSystem::new(LieType::d(4));
        assert_eq!(d4.dual_weight(&w(&[1, 0, 2, 3])), w(&[1, 0, 2, 3]));
        let d5 = RootSystem::new(LieType::d(5));
        assert_eq!(d5.dual_weight(&w(&[1, 0, 0, 2, 3])), w(&[1, 0, 0, 3, 2]));
        let e6 = RootSystem::new(LieType::e(6));
        assert_eq!(e6.dual_weight(&w(&[1, 2, 3, 4, 5, 6])), w(&[6, 2, 5, 4, 3, 1]));
    }

    fn case() -> impl Strategy<Value = (LieType, u64, Vec<i64>)> {
        prop_oneof![
            proptest::collection::vec(-30i64..30, 1).prop_map(|c| (LieType::a(1), 7, c)),
            proptest::collection::vec(-20i64..20, 2).prop_map(|c| (LieType::a(2), 7, c)),
            proptest::collection::vec(-20i64..20, 2).prop_map(|c| (LieType::b(2), 11, c)),
            proptest::collection::vec(-10i64..10, 3).prop_map(|c| (LieType::c(3), 11, c)),
            proptest::collection::vec(-10i64..10, 4).prop_map(|c| (LieType::d(4), 11, c)),
        ]
    }

    proptest! {
        // The folded weight lies in the open alcove, and re-folding is the identity.
        #[test]
        fn affine_fold_lands_in_alcove((t, r, c) in case()) {
            let s = RootSystem::get(t);
            let x = Weight(c);
            if let Some((_, y)) = s.affine_fold(&x, r).unwrap() {
                prop_assert!(s.in_open_alcove(&y, r));
                prop_assert_eq!(s.affine_fold(&y, r).unwrap(), Some((1, y.clone())));
            }
        }

        // The dot action by r * alpha_0 translations does not change the fold.
        #[test]
        fn fold_is_translation_invariant((t, r, c) in case(), k in -2i64..3) {
            let s = RootSystem::get(t);
            let x = Weight(c);
            let shift = s.alpha0_weight().scale(k * r as i64);
            prop_assert_eq!(s.affine_fold(&x, r).unwrap(), s.affine_fold(&(&x + &shift), r).unwrap());
        }
    }
}
