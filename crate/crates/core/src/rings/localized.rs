//! Elements of `Z[zeta, 1/r]` written as `numerator / r^k`.

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `numerator / r^rpow`, kept normalized: either `rpow == 0` or `r` does not
/// divide the numerator in `Z[zeta]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalizedCyclotomic {
    prime: u64,
    numerator: Cyclotomic,
    rpow: u32,
}

impl LocalizedCyclotomic {
    pub fn new(numerator: Cyclotomic, prime: u64, rpow: u32) -> Self {
        Self {
            prime,
            numerator,
            rpow,
        }
        .normalize()
    }

    pub fn integral(x: Cyclotomic, prime: u64) -> Self {
        Self::new(x, prime, 0)
    }

    pub fn one(order: u64, prime: u64) -> Self {
        Self::integral(Cyclotomic::one(order), prime)
    }

    pub fn numerator(&self) -> &Cyclotomic {
        &self.numerator
    }

    pub fn rpow(&self) -> u32 {
        self.rpow
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn order(&self) -> u64 {
        self.numerator.order()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rpow == 0 && self.numerator.is_one()
    }

    /// Cancels factors of `r` while the numerator is divisible by `r`.
    /// In the power basis, `r | x` in `Z[zeta]` iff `r` divides every coefficient.
    pub fn normalize(mut self) -> Self {
        if self.numerator.is_zero() {
            self.rpow = 0;
            return self;
        }
        let r = BigInt::from(self.prime);
        while self.rpow > 0 {
            match self.numerator.div_int(&r) {
                Some(q) => {
                    self.numerator = q;
                    self.rpow -= 1;
                }
                None => break,
            }
        }
        self
    }

    /// True iff the value lies in `Z[zeta]`.
    pub fn is_integral(&self) -> bool {
        self.rpow == 0
    }

    pub fn as_integral(&self) -> Option<&Cyclotomic> {
        self.is_integral().then_some(&self.numerator)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.prime, other.prime, "localization prime mismatch");
    }

    fn lift(&self, k: u32) -> Cyclotomic {
        debug_assert!(k >= self.rpow);
        let f = BigInt::from(self.prime).pow(k - self.rpow);
        self.numerator.scale(&f)
    }

    /// Multiplicative inverse in `Z[zeta, 1/r]`, if it exists there.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("LocalizedCyclotomic::inverse"));
        }
        let cof = self.numerator.conjugate_cofactor();
        let n = (&self.numerator * &cof)
            .as_integer()
            .cloned()
            .expect("norm is rational");
        let r = BigInt::from(self.prime);
        let mut m = n.abs();
        let mut j = 0u32;
        while !m.is_one() {
            let (q, rem) = m.div_rem(&r);
            if !rem.is_zero() {
                return Ok(None);
            }
            m = q;
            j += 1;
        }
        let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
        let num = cof.scale(&(sign * r.pow(self.rpow)));
        Ok(Some(Self::new(num, self.prime, j)))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 {
            self.inverse()?
                .ok_or_else(|| Error::Verification(format!("{self} is not invertible in Z[zeta, 1/r]")))?
        } else {
            self.clone()
        };
        let e = n.unsigned_abs();
        Ok(Self::new(
            base.numerator.pow(e),
            self.prime,
            base.rpow * e as u32,
        ))
    }

    pub fn galois(&self, k: i64) -> Result<Self> {
        Ok(Self::new(self.numerator.galois(k)?, self.prime, self.rpow))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.numerator.conj(), self.prime, self.rpow)
    }

    pub fn embed(&self, target: u64) -> Result<Self> {
        Ok(Self::new(self.numerator.embed(target)?, self.prime, self.rpow))
    }

    pub fn scale_cyclotomic(&self, x: &Cyclotomic) -> Self {
        Self::new(&self.numerator * x, self.prime, self.rpow)
    }
}

impl fmt::Debug for LocalizedCyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LocalizedCyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rpow == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}^{}", self.numerator, self.prime, self.rpow)
        }
    }
}

impl<'a> Add<&'a LocalizedCyclotomic> for &'a LocalizedCyclotomic {
    type Output = LocalizedCyclotomic;
    fn add(self, rhs: &LocalizedCyclotomic) -> LocalizedCyclotomic {
        self.check(rhs);
        let k = self.rpow.max(rhs.rpow);
        LocalizedCyclotomic::new(&self.lift(k) + &rhs.lift(k), self.prime, k)
    }
}

impl<'a> Sub<&'a LocalizedCyclotomic> for &'a LocalizedCyclotomic {
    type Output = LocalizedCyclotomic;
    fn sub(self, rhs: &LocalizedCyclotomic) -> LocalizedCyclotomic {
        self.check(rhs);
        let k = self.rpow.max(rhs.rpow);
        LocalizedCyclotomic::new(&self.lift(k) - &rhs.lift(k), self.prime, k)
    }
}

impl<'a> Mul<&'a LocalizedCyclotomic> for &'a LocalizedCyclotomic {
    type Output = LocalizedCyclotomic;
    fn mul(self, rhs: &LocalizedCyclotomic) -> LocalizedCyclotomic {
        self.check(rhs);
        LocalizedCyclotomic::new(
            &self.numerator * &rhs.numerator,
            self.prime,
            self.rpow + rhs.rpow,
        )
    }
}

impl Neg for &LocalizedCyclotomic {
    type Output = LocalizedCyclotomic;
    fn neg(self) -> LocalizedCyclotomic {
        LocalizedCyclotomic::new(-&self.numerator, self.prime, self.rpow)
    }
}
