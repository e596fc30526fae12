use crate::lie::RootSystem;
use crate::rings::Cyclotomic;

/// Order of `zeta`: `r` when `sn(w_0) r^l` already has a square root in
/// `Z[xi]` (l even with sn(w_0) = 1, or l odd with sn(w_0) r = 1 mod 4),
/// otherwise `4r`.
pub fn zeta_order(sys: &RootSystem, r: u64) -> u64 {
    let s = sys.sign_w0();
    let l = sys.rank();
    let ok = if l.is_multiple_of(2) {
        s == 1
    } else {
        (s * r as i64).rem_euclid(4) == 1
    };
    if ok {
        r
    } else {
        4 * r
    }
}

/// Legendre symbol `(a / r)` for an odd prime `r`, by Euler's criterion.
fn legendre(a: u64, r: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % r;
    let mut e = (r - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % r;
        }
        base = base * base % r;
        e >>= 1;
    }
    match result {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Quadratic Gauss sum `g = sum_{a=1}^{r-1} (a / r) xi^a`, with
/// `g^2 = (-1)^{(r-1)/2} r`.
pub fn gauss_sum(r: u64) -> Cyclotomic {
    (1..r).fold(Cyclotomic::zero(r), |acc, a| {
        &acc + &Cyclotomic::zeta_pow(r, a as i64).scale(&num_bigint::BigInt::from(legendre(a, r)))
    })
}

/// A square root of `sn(w_0) r^l` in `Z[zeta]`, `zeta` of order [`zeta_order`].
pub fn sqrt_sign_r_power(sys: &RootSystem, r: u64) -> Cyclotomic {
    let n = zeta_order(sys, r);
    let l = sys.rank() as u32;
    let s = sys.sign_w0();
    let r_big = num_bigint::BigInt::from(r);
    let (base, needs_i) = if l.is_multiple_of(2) {
        (Cyclotomic::from_int(n, r_big.pow(l / 2)), s == -1)
    } else {
        let r_star = if r % 4 == 1 { 1 } else { -1 };
        let g = gauss_sum(r).embed(n).expect("r divides the order of zeta");
        (g.scale(&r_big.pow((l - 1) / 2)), s != r_star)
    };
    if needs_i {
        // zeta^r has order 4
        &base * &Cyclotomic::zeta_pow(n, r as i64)
    } else {
        base
    }
}
