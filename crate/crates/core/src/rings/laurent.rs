//! Laurent polynomials in one formal variable `v` with integer coefficients.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::Cyclotomic;

/// An element of `Z[v, v^-1]`, stored as a sparse exponent → coefficient map
/// with no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly {
    #[serde(with = "crate::serde_int::map")]
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Returns `(c, e)` when the polynomial is a single term `c v^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    /// Units of `Z[v, v^-1]` are exactly `±v^k`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Substitutes `v -> v^k` (so `v_i = v^{d_i}` is `subs_power(d_i)`).
    pub fn subs_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        self.subs_power(-1)
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self` in
    /// `Z[v, v^-1]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroInput("LaurentPoly::div_exact"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Work with ordinary polynomials: strip the lowest powers of v.
        let dmin = d.min_exp().unwrap();
        let dmax = d.max_exp().unwrap();
        let lead = d.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top - dmax < rem.min_exp().unwrap() - dmin {
                return Err(Error::InexactDivision("LaurentPoly::div_exact"));
            }
            let c = rem.coeff(top);
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision("LaurentPoly::div_exact"));
            }
            let e = top - dmax;
            let t = Self::monomial(q.clone(), e);
            rem = &rem - &(&t * d);
            quot.add_term(e, q);
        }
        Ok(quot)
    }

    /// Image under `v -> zeta_n^step` in `Z[zeta_n]`.
    pub fn eval_root(&self, order: u64, step: i64) -> Cyclotomic {
        let mut out = Cyclotomic::zero(order);
        for (e, c) in self.terms() {
            out = &out + &Cyclotomic::zeta_pow(order, e * step).scale(c);
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{a}v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{a}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, e)
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = &v(1) - &v(1);
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn exact_division() {
        // (v^2 - v^-2) / (v - v^-1) = v + v^-1
        let num = &v(2) - &v(-2);
        let den = &v(1) - &v(-1);
        assert_eq!(num.div_exact(&den).unwrap(), &v(1) + &v(-1));
    }

    #[test]
    fn inexact_division_is_reported() {
        let num = &v(2) + &LaurentPoly::one();
        let den = &v(1) + &LaurentPoly::one();
        assert_eq!(
            num.div_exact(&den),
            Err(Error::InexactDivision("LaurentPoly::div_exact"))
        );
        let two = LaurentPoly::from(2);
        assert!(LaurentPoly::one().div_exact(&two).is_err());
    }

    #[test]
    fn units() {
        assert!(v(-3).is_unit());
        assert!((-v(5)).is_unit());
        assert!(!LaurentPoly::from(2).is_unit());
        assert!(!(&v(1) + &v(-1)).is_unit());
    }

    #[test]
    fn display() {
        let p = &(&v(2) - &LaurentPoly::from(3)) + &v(-1);
        assert_eq!(p.to_string(), "v^2 - 3 + v^-1");
    }

    #[test]
    fn json_shape() {
        let p = &v(1) + &v(-1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":1,"1":1}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
