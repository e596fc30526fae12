//! Elements of the cyclotomic integers `Z[zeta_n]` in the power basis
//! `1, zeta, ..., zeta^{phi(n)-1}`, reduced modulo the n-th cyclotomic
//! polynomial. Equality is coefficient equality.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

/// Precomputed data for one cyclotomic order.
#[derive(Debug)]
struct Context {
    phi: usize,
    /// Coefficients of the cyclotomic polynomial, lowest degree first (monic).
    poly: Vec<i64>,
    /// `powers[k]` is the reduced representation of `zeta^k`, `0 <= k < n`.
    powers: Vec<Vec<i64>>,
}

static CONTEXTS: OnceLock<RwLock<HashMap<u64, Arc<Context>>>> = OnceLock::new();

fn context(order: u64) -> Arc<Context> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = CONTEXTS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(ctx) = cache.read().unwrap().get(&order) {
        return ctx.clone();
    }
    let poly = cyclotomic_polynomial(order);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by x and reduce the overflow coefficient with the monic polynomial
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    let ctx = Arc::new(Context { phi, poly, powers });
    cache.write().unwrap().insert(order, ctx.clone());
    ctx
}

/// `Phi_n(x)` by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn poly_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for j in 0..=dd {
            rem[k + j] -= c * den[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCyclotomic")]
pub struct Cyclotomic {
    order: u64,
    #[serde(with = "crate::serde_int::vec")]
    coeffs: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawCyclotomic {
    order: u64,
    #[serde(with = "crate::serde_int::vec")]
    coeffs: Vec<BigInt>,
}

impl TryFrom<RawCyclotomic> for Cyclotomic {
    type Error = Error;
    fn try_from(raw: RawCyclotomic) -> Result<Self> {
        if raw.order < 1 {
            return Err(Error::InvalidParameters("cyclotomic order must be positive".into()));
        }
        Cyclotomic::from_reduced(raw.order, raw.coeffs)
    }
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        let phi = context(order).phi;
        Self {
            order,
            coeffs: vec![BigInt::zero(); phi],
        }
    }

    pub fn from_int(order: u64, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c.into();
        z
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(order, 1)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        let ctx = context(order);
        let idx = k.rem_euclid(order as i64) as usize;
        Self {
            order,
            coeffs: ctx.powers[idx].iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Builds an element from coefficients of powers of zeta (any length);
    /// the result is reduced.
    pub fn from_power_coeffs<C: Into<BigInt>>(order: u64, cs: impl IntoIterator<Item = C>) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in cs.into_iter().enumerate() {
            let c: BigInt = c.into();
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(order, k as i64).scale(&c);
            }
        }
        out
    }

    /// Validates a raw coefficient vector already in the reduced basis.
    pub fn from_reduced(order: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != context(order).phi {
            return Err(Error::InvalidParameters(format!(
                "expected {} coefficients for order {order}, got {}",
                context(order).phi,
                coeffs.len()
            )));
        }
        Ok(Self { order, coeffs })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, if all are divisible.
    pub fn div_int(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch: {} vs {}",
            self.order, other.order
        );
    }

    /// The automorphism `zeta -> zeta^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime(k, self.order));
        }
        let mut out = Self::zero(self.order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(self.order, j as i64 * k).scale(c);
            }
        }
        Ok(out)
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    fn units(&self) -> impl Iterator<Item = i64> {
        let n = self.order as i64;
        (1..=n).filter(move |k| k.gcd(&n) == 1)
    }

    /// Product of all conjugates except the identity, so that
    /// `self * self.conjugate_cofactor() == N(self)`.
    pub fn conjugate_cofactor(&self) -> Self {
        self.units()
            .filter(|&k| k != 1)
            .map(|k| self.galois(k).unwrap())
            .fold(Self::one(self.order), |a, b| &a * &b)
    }

    /// Field norm down to `Q`, i.e. the product of all Galois conjugates.
    pub fn norm(&self) -> BigInt {
        let prod = self * &self.conjugate_cofactor();
        prod.as_integer()
            .cloned()
            .expect("norm of a cyclotomic integer is a rational integer")
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroInput("is_unit"));
        }
        Ok(self.norm().abs().is_one())
    }

    /// Exact quotient in `Z[zeta]`; `None` when the quotient is not integral.
    ///
    /// `a / b = a * b' / N(b)` where `b'` is the product of the other
    /// conjugates of `b`, so the rational solution is computed exactly and
    /// accepted iff every coordinate is an integer.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        self.check_order(d);
        if d.is_zero() {
            return Err(Error::ZeroInput("Cyclotomic::div_exact"));
        }
        if self.is_zero() {
            return Ok(Some(Self::zero(self.order)));
        }
        if let Some(c) = d.as_integer() {
            return Ok(self.div_int(c));
        }
        let cof = d.conjugate_cofactor();
        let n = (d * &cof)
            .as_integer()
            .cloned()
            .expect("norm is rational");
        Ok((self * &cof).div_int(&n))
    }

    /// Like [`div_exact`](Self::div_exact) but an inexact quotient is an error.
    pub fn div_exact_or_err(&self, d: &Self, what: &'static str) -> Result<Self> {
        self.div_exact(d)?.ok_or(Error::InexactDivision(what))
    }

    /// Image under `Z[zeta_n] -> Z[zeta_m]`, `zeta_n -> zeta_m^{m/n}`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch(self.order, target));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as i64;
        let mut out = Self::zero(target);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(target, j as i64 * step).scale(c);
            }
        }
        Ok(out)
    }

    /// Largest `t` with `(1 - zeta)^t | self`; the order must be prime.
    pub fn valuation_one_minus_zeta(&self) -> Result<u32> {
        if !is_prime(self.order) {
            return Err(Error::InvalidParameters(format!(
                "valuation at (1 - zeta) needs a prime order, got {}",
                self.order
            )));
        }
        if self.is_zero() {
            return Err(Error::ZeroInput("valuation_one_minus_zeta"));
        }
        let pi = &Self::one(self.order) - &Self::zeta_pow(self.order, 1);
        let mut t = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(&pi)? {
            cur = q;
            t += 1;
        }
        Ok(t)
    }

    /// For order `4r`: whether the element lies in `Z[zeta^4]`, decided by
    /// solving for integer coordinates against the lattice spanned by the
    /// powers of `zeta^4` (row echelon form over `Z`).
    pub fn in_subring_fourth_power(&self) -> Result<bool> {
        if !self.order.is_multiple_of(4) {
            return Err(Error::InvalidParameters(format!(
                "subring test needs order divisible by 4, got {}",
                self.order
            )));
        }
        let r = self.order / 4;
        let sub_phi = context(r).phi;
        let rows: Vec<Vec<BigInt>> = (0..sub_phi)
            .map(|j| Self::zeta_pow(self.order, 4 * j as i64).coeffs)
            .collect();
        Ok(lattice_contains(rows, &self.coeffs))
    }
}

/// Whether `target` is an integer combination of `rows`.
fn lattice_contains(mut rows: Vec<Vec<BigInt>>, target: &[BigInt]) -> bool {
    let ncols = target.len();
    let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in 0..ncols {
        // gcd-eliminate column `col` among the remaining rows
        loop {
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let p = nz[0];
            let pivot = rows[p].clone();
            for &i in &nz[1..] {
                let q = rows[i][col].div_floor(&pivot[col]);
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            echelon.push((col, rows.swap_remove(i)));
        }
    }
    let mut t = target.to_vec();
    for (col, row) in &echelon {
        let (q, rem) = t[*col].div_rem(&row[*col]);
        if !rem.is_zero() {
            return false;
        }
        for (x, y) in t.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    t.iter().all(Zero::is_zero)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z{}", self.order)?,
                (1, false) => write!(f, "{a}*z{}", self.order)?,
                (_, true) => write!(f, "z{}^{j}", self.order)?,
                (_, false) => write!(f, "{a}*z{}^{j}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let ctx = context(self.order);
        let phi = ctx.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        for k in (phi..prod.len()).rev() {
            if prod[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut prod[k]);
            for (j, &p) in ctx.poly[..phi].iter().enumerate() {
                if p != 0 {
                    prod[k - phi + j] -= &c * p;
                }
            }
        }
        prod.truncate(phi);
        Cyclotomic {
            order: self.order,
            coeffs: prod,
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Coefficient of `zeta^k` in the reduced basis, as `i64` (test convenience).
pub fn small_coeffs(x: &Cyclotomic) -> Vec<i64> {
    x.coeffs.iter().map(|c| c.to_i64().expect("coefficient fits in i64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Phi_20(x) = Phi_5(-x^2)
        assert_eq!(cyclotomic_polynomial(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_4r_is_phi_r_of_minus_x_squared() {
        for r in [3u64, 5, 7, 11, 13] {
            let pr = cyclotomic_polynomial(r);
            let mut expected = vec![0i64; 2 * pr.len() - 1];
            for (k, &c) in pr.iter().enumerate() {
                expected[2 * k] = if k % 2 == 0 { c } else { -c };
            }
            assert_eq!(cyclotomic_polynomial(4 * r), expected, "r = {r}");
        }
    }

    #[test]
    fn zeta_has_the_right_order() {
        for n in [5u64, 7, 20, 28] {
            assert!(z(n, n as i64).is_one());
            assert!(!z(n, 1).pow(n / 2).is_one() || n % 2 == 1);
            assert_eq!(&z(n, 3) * &z(n, -3), Cyclotomic::one(n));
        }
    }

    #[test]
    fn sum_of_primitive_roots_mod_prime() {
        // 1 + z + ... + z^{r-1} = 0
        let r = 7;
        let s = (0..r).fold(Cyclotomic::zero(r), |a, k| &a + &z(r, k as i64));
        assert!(s.is_zero());
    }

    #[test]
    fn galois_action() {
        let a = &z(5, 1) + &Cyclotomic::from_int(5, 3);
        assert_eq!(a.galois(1).unwrap(), a);
        assert_eq!(a.galois(2).unwrap().galois(3).unwrap(), a.galois(6).unwrap());
        assert_eq!(Cyclotomic::one(5).galois(4).unwrap(), Cyclotomic::one(5));
        assert_eq!(a.galois(10), Err(Error::NotCoprime(10, 5)));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn norms_and_units() {
        let r = 7;
        assert_eq!(Cyclotomic::from_int(r, r).norm(), BigInt::from(7i64.pow(6)));
        let pi = &Cyclotomic::one(r) - &z(r, 1);
        assert_eq!(pi.norm(), BigInt::from(7));
        assert!(!pi.is_unit().unwrap());
        assert!(Cyclotomic::one(r).is_unit().unwrap());
        assert!((-z(r, 3)).is_unit().unwrap());
        assert!(Cyclotomic::zero(r).is_unit().is_err());
    }

    #[test]
    fn exact_division() {
        let r = 5;
        let a = &z(r, 1) + &Cyclotomic::from_int(r, 2);
        let b = &z(r, 2) - &z(r, 4);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), Some(a.clone()));
        assert_eq!(p.div_exact(&a).unwrap(), Some(b.clone()));
        let two = Cyclotomic::from_int(r, 2);
        assert_eq!(Cyclotomic::one(r).div_exact(&two).unwrap(), None);
    }

    #[test]
    fn valuations() {
        for r in [5u64, 7, 11] {
            let pi = &Cyclotomic::one(r) - &z(r, 1);
            assert_eq!(pi.valuation_one_minus_zeta().unwrap(), 1);
            assert_eq!(
                Cyclotomic::from_int(r, r).valuation_one_minus_zeta().unwrap(),
                (r - 1) as u32
            );
            let unit = -z(r, 1);
            let x = &pi.pow(3) * &unit;
            assert_eq!(x.valuation_one_minus_zeta().unwrap(), 3);
        }
        assert!(Cyclotomic::one(20).valuation_one_minus_zeta().is_err());
    }

    #[test]
    fn fourth_power_subring() {
        for r in [5u64, 7] {
            let n = 4 * r;
            assert!(Cyclotomic::one(n).in_subring_fourth_power().unwrap());
            assert!(!z(n, 1).in_subring_fourth_power().unwrap());
            assert!(!z(n, r as i64).in_subring_fourth_power().unwrap());
            let s = &z(n, 4) + &z(n, -4);
            assert!(s.in_subring_fourth_power().unwrap());
            assert!(s.scale(&BigInt::from(3)).in_subring_fourth_power().unwrap());
        }
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let a = &z(5, 1) + &Cyclotomic::from_int(5, 3);
        let b = &z(5, 3) - &z(5, 2);
        let ea = a.embed(20).unwrap();
        let eb = b.embed(20).unwrap();
        assert_eq!((&a * &b).embed(20).unwrap(), &ea * &eb);
        assert_eq!(z(5, 1).embed(20).unwrap(), z(20, 4));
        assert!(a.embed(7).is_err());
    }

    #[test]
    fn json_shape() {
        let a = &z(5, 1) + &Cyclotomic::from_int(5, 3);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"order":5,"coeffs":[3,1,0,0]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
