//! Quantum integers, factorials and binomials.

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use crate::error::Result;

/// `[n]_d = (v^{dn} - v^{-dn}) / (v^d - v^{-d})`, written as the symmetric sum
/// `v^{d(n-1)} + v^{d(n-3)} + ... + v^{-d(n-1)}`; `[-n]_d = -[n]_d`.
pub fn quantum_int(n: i64, d: i64) -> LaurentPoly {
    let m = n.abs();
    let p = LaurentPoly::from_terms((0..m).map(|j| (d * (m - 1 - 2 * j), 1)));
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]_d` evaluated at `v = xi`, a primitive `r`-th root of unity.
pub fn quantum_int_at_root(n: i64, d: i64, r: u64) -> Cyclotomic {
    quantum_int(n, d).eval_root(r, 1)
}

pub fn quantum_factorial(n: u32, d: i64) -> LaurentPoly {
    (1..=n as i64).map(|k| quantum_int(k, d)).product()
}

/// `[a choose b]_d = [a][a-1]...[a-b+1] / [b]!`; the division is exact.
pub fn quantum_binomial(a: i64, b: u32, d: i64) -> Result<LaurentPoly> {
    let num: LaurentPoly = (0..b as i64).map(|k| quantum_int(a - k, d)).product();
    num.div_exact(&quantum_factorial(b, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_quantum_integers() {
        assert_eq!(quantum_int(1, 1), LaurentPoly::one());
        assert_eq!(quantum_int(0, 1), LaurentPoly::zero());
        assert_eq!(
            quantum_int(2, 1),
            LaurentPoly::from_terms([(1, 1), (-1, 1)])
        );
        assert_eq!(quantum_int(-3, 2), -quantum_int(3, 2));
        assert_eq!(
            quantum_int(3, 2),
            LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)])
        );
    }

    #[test]
    fn matches_defining_quotient() {
        for d in 1..=3 {
            for n in -6..=6 {
                let num = &LaurentPoly::monomial(1, d * n) - &LaurentPoly::monomial(1, -d * n);
                let den = &LaurentPoly::monomial(1, d) - &LaurentPoly::monomial(1, -d);
                assert_eq!(num.div_exact(&den).unwrap(), quantum_int(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn classical_limit() {
        for n in -5..=9 {
            assert_eq!(quantum_int(n, 1).eval_at_one(), BigInt::from(n));
        }
    }

    #[test]
    fn binomials() {
        for a in -3..6 {
            assert_eq!(quantum_binomial(a, 0, 1).unwrap(), LaurentPoly::one());
        }
        assert_eq!(quantum_binomial(2, 1, 1).unwrap(), quantum_int(2, 1));
        let b42 = quantum_binomial(4, 2, 1).unwrap();
        // [4][3]/[2] = (v^2 + v^-2)(v^2 + 1 + v^-2)
        assert_eq!(
            b42,
            LaurentPoly::from_terms([(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert_eq!(b42.eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn at_root_of_unity() {
        let r = 5;
        assert!(quantum_int_at_root(5, 1, r).is_zero());
        assert!(quantum_int_at_root(10, 1, r).is_zero());
        let two = quantum_int_at_root(2, 1, r);
        let expected = &Cyclotomic::zeta_pow(r, 1) + &Cyclotomic::zeta_pow(r, -1);
        assert_eq!(two, expected);
    }
}
