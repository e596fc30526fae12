//! The rank-one integral theory: the modules `V_n` over `Z[v, v^-1]`, their
//! duals through the antipode, the contravariant form and its determinant.

pub mod matrix;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::rings::{cyclotomic_polynomial, quantum_binomial, quantum_factorial, quantum_int, LaurentPoly};
use matrix::LMatrix;
use serde::Serialize;
use std::collections::BTreeMap;

fn v(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// An `(n+1)`-dimensional module with basis `e_0, ..., e_n`; matrices act on
/// columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Module {
    pub n: usize,
    pub e: LMatrix,
    pub f: LMatrix,
    pub k: LMatrix,
    pub k_inv: LMatrix,
}

impl Sl2Module {
    /// Checks `EF - FE = (K - K^-1)/(v - v^-1)`, `K E K^-1 = v^2 E` and
    /// `K F K^-1 = v^-2 F`.
    pub fn check_relations(&self) -> Result<()> {
        let dim = self.n + 1;
        let kk = matrix::mul(&self.k, &self.k_inv);
        if kk != matrix::identity(dim) {
            return Err(Error::Verification("K K^-1 != 1".into()));
        }
        let comm = matrix::sub(&matrix::mul(&self.e, &self.f), &matrix::mul(&self.f, &self.e));
        let diff = matrix::sub(&self.k, &self.k_inv);
        if !matrix::is_diagonal(&diff) {
            return Err(Error::Verification("K is not diagonal".into()));
        }
        let denom = &v(1) - &v(-1);
        let rhs = matrix::diagonal(
            (0..dim)
                .map(|i| diff[i][i].div_exact(&denom))
                .collect::<Result<_>>()?,
        );
        if comm != rhs {
            return Err(Error::Verification(format!("EF - FE relation fails for n = {}", self.n)));
        }
        let conj = |x: &LMatrix| matrix::mul(&matrix::mul(&self.k, x), &self.k_inv);
        if conj(&self.e) != matrix::scale(&self.e, &v(2)) {
            return Err(Error::Verification("K E K^-1 != v^2 E".into()));
        }
        if conj(&self.f) != matrix::scale(&self.f, &v(-2)) {
            return Err(Error::Verification("K F K^-1 != v^-2 F".into()));
        }
        Ok(())
    }

    /// `tr(K)` on this module.
    pub fn trace_k(&self) -> LaurentPoly {
        (0..=self.n).map(|i| self.k[i][i].clone()).sum()
    }

    /// `X^s / [s]!` with an exactness check.
    pub fn divided_power(x: &LMatrix, s: u32) -> Result<LMatrix> {
        let fact = quantum_factorial(s, 1);
        matrix::pow(x, s)
            .iter()
            .map(|row| row.iter().map(|p| p.div_exact(&fact)).collect())
            .collect()
    }
}

/// `V_n`: `F e_i = [i+1] e_{i+1}`, `E e_i = [n-i+1] e_{i-1}`, `K e_i = v^{n-2i} e_i`.
pub fn build_module(n: usize) -> Result<Sl2Module> {
    let dim = n + 1;
    let ni = n as i64;
    let mut e = matrix::zero(dim);
    let mut f = matrix::zero(dim);
    for i in 0..dim {
        let ii = i as i64;
        if i + 1 < dim {
            f[i + 1][i] = quantum_int(ii + 1, 1);
        }
        if i > 0 {
            e[i - 1][i] = quantum_int(ni - ii + 1, 1);
        }
    }
    let k = matrix::diagonal((0..dim).map(|i| v(ni - 2 * i as i64)).collect());
    let k_inv = matrix::diagonal((0..dim).map(|i| v(2 * i as i64 - ni)).collect());
    let m = Sl2Module { n, e, f, k, k_inv };
    m.check_relations()?;
    Ok(m)
}

/// `V_n^*` in the dual basis `e_0^*, ..., e_n^*`, with `(x.a)(u) = a(S(x) u)`
/// for the antipode `S(E) = -K^-1 E`, `S(F) = -F K`, `S(K) = K^-1`.
pub fn dual_module(n: usize) -> Result<Sl2Module> {
    let m = build_module(n)?;
    let d = Sl2Module {
        n,
        e: matrix::transpose(&matrix::neg(&matrix::mul(&m.k_inv, &m.e))),
        f: matrix::transpose(&matrix::neg(&matrix::mul(&m.f, &m.k))),
        k: matrix::transpose(&m.k_inv),
        k_inv: matrix::transpose(&m.k),
    };
    d.check_relations()?;
    Ok(d)
}

/// `a_k = -v^{n-2k+2}`.
pub fn dual_chain_coefficient(n: usize, k: usize) -> LaurentPoly {
    -v(n as i64 - 2 * k as i64 + 2)
}

/// Checks `F e_k^* = a_k [k] e_{k-1}^*` and `E e_{k-1}^* = a_k^-1 [n-k+1] e_k^*`
/// for `k = 1..n`, and that nothing else is nonzero.
pub fn check_dual_chain(d: &Sl2Module) -> Result<()> {
    let n = d.n;
    let mut f = matrix::zero(n + 1);
    let mut e = matrix::zero(n + 1);
    for k in 1..=n {
        let a = dual_chain_coefficient(n, k);
        let a_inv = LaurentPoly::one().div_exact(&a)?;
        f[k - 1][k] = &a * &quantum_int(k as i64, 1);
        e[k][k - 1] = &a_inv * &quantum_int((n - k + 1) as i64, 1);
    }
    if d.f != f || d.e != e {
        return Err(Error::Verification(format!("dual chain coefficients differ from a_k for n = {n}")));
    }
    Ok(())
}

/// The module map `V_n -> V_n^*` with `e_0 -> e_n^*`, solved from
/// `phi F = F^* phi` one basis vector at a time and then checked against
/// `E`, `F` and `K`. Its entries are `+-v^k [n choose i]`.
pub fn intertwiner(n: usize) -> Result<LMatrix> {
    let m = build_module(n)?;
    let d = dual_module(n)?;
    let dim = n + 1;
    // phi(e_i) = c_i e_{n-i}^*; c_{i+1} [i+1] = c_i * (F^* coefficient on e_{n-i}^*)
    let mut c = vec![LaurentPoly::one()];
    for i in 0..n {
        let coeff = &d.f[n - i - 1][n - i];
        let next = (&c[i] * coeff).div_exact(&quantum_int(i as i64 + 1, 1))?;
        c.push(next);
    }
    let mut phi = matrix::zero(dim);
    for (i, ci) in c.into_iter().enumerate() {
        phi[n - i][i] = ci;
    }
    for (x, y, name) in [(&m.e, &d.e, "E"), (&m.f, &d.f, "F"), (&m.k, &d.k, "K")] {
        if matrix::mul(&phi, x) != matrix::mul(y, &phi) {
            return Err(Error::Verification(format!("intertwiner fails for {name}, n = {n}")));
        }
    }
    Ok(phi)
}

/// Gram matrix of the contravariant form in the basis `e_i = F^(i) e_0`:
/// `H(e_i, e_j)` is the `e_0`-coefficient of `E^(i) F^(j) e_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapovalovGram {
    pub n: usize,
    pub g: LMatrix,
}

impl ShapovalovGram {
    pub fn diagonal(&self) -> Vec<LaurentPoly> {
        (0..=self.n).map(|i| self.g[i][i].clone()).collect()
    }

    pub fn determinant(&self) -> LaurentPoly {
        assert!(matrix::is_diagonal(&self.g));
        self.diagonal().into_iter().product()
    }
}

pub fn shapovalov_gram(n: usize) -> Result<ShapovalovGram> {
    let m = build_module(n)?;
    let dim = n + 1;
    let mut g = matrix::zero(dim);
    for i in 0..dim {
        let ei = Sl2Module::divided_power(&m.e, i as u32)?;
        for j in 0..dim {
            let fj = Sl2Module::divided_power(&m.f, j as u32)?;
            g[i][j] = matrix::mul(&ei, &fj)[0][0].clone();
        }
    }
    if g[0][0] != LaurentPoly::one() {
        return Err(Error::Verification("H(e_0, e_0) != 1".into()));
    }
    if !matrix::is_diagonal(&g) {
        return Err(Error::Verification(format!("Gram matrix is not diagonal for n = {n}")));
    }
    Ok(ShapovalovGram { n, g })
}

/// `det(G) = unit * prod_k [k]^{exponents[k]}` with `unit = sign * v^shift`.
/// Exponents may be negative: `[n choose i]` is a ratio of quantum integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantumFactorization {
    pub sign: i64,
    pub shift: i64,
    pub exponents: BTreeMap<i64, i32>,
    /// Exponents of `Phi_d(v^2)`, `d >= 2`.
    pub cyclotomic_exponents: BTreeMap<u64, u32>,
}

impl QuantumFactorization {
    /// Re-multiplies the factorization into a Laurent polynomial.
    pub fn expand(&self) -> Result<LaurentPoly> {
        let mut num = LaurentPoly::monomial(self.sign, self.shift);
        let mut den = LaurentPoly::one();
        for (&k, &e) in &self.exponents {
            let q = quantum_int(k, 1).pow(e.unsigned_abs());
            if e > 0 {
                num = &num * &q;
            } else {
                den = &den * &q;
            }
        }
        num.div_exact(&den)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    /// Quantum integers `[k]` occurring with nonzero exponent.
    pub fn factors(&self) -> impl Iterator<Item = i64> + '_ {
        self.exponents.iter().filter(|(_, &e)| e != 0).map(|(&k, _)| k)
    }
}

/// `Phi_d(v^2)` as a Laurent polynomial.
fn phi_v2(d: u64) -> LaurentPoly {
    LaurentPoly::from_terms(cyclotomic_polynomial(d).into_iter().enumerate().map(|(j, c)| (2 * j as i64, c)))
}

/// Factors `x` into quantum integers `[k]`, `k <= kmax`, by trial division
/// by `Phi_d(v^2)` followed by Moebius inversion over divisibility
/// (`[k] = v^{1-k} prod_{d | k, d > 1} Phi_d(v^2)`).
pub fn factor_quantum(x: &LaurentPoly, kmax: u64) -> Result<QuantumFactorization> {
    if x.is_zero() {
        return Err(Error::ZeroInput("factor_quantum"));
    }
    let mut rest = x.clone();
    let mut cyc: BTreeMap<u64, u32> = BTreeMap::new();
    for d in 2..=kmax {
        let p = phi_v2(d);
        while let Ok(q) = rest.div_exact(&p) {
            rest = q;
            *cyc.entry(d).or_insert(0) += 1;
        }
    }
    let Some((c, shift)) = rest.as_monomial().filter(|_| rest.is_unit()) else {
        return Err(Error::Verification(format!(
            "{x} is not a unit times quantum integers [k], k <= {kmax} (residual {rest})"
        )));
    };
    let sign = if c.sign() == num_bigint::Sign::Minus { -1 } else { 1 };
    // x_k = e_k - sum_{m > k, k | m} x_m, top down
    let mut exps: BTreeMap<i64, i32> = BTreeMap::new();
    for k in (2..=kmax).rev() {
        let e = cyc.get(&k).copied().unwrap_or(0) as i32;
        let above: i32 = ((2 * k)..=kmax)
            .step_by(k as usize)
            .map(|m| exps.get(&(m as i64)).copied().unwrap_or(0))
            .sum();
        let xk = e - above;
        if xk != 0 {
            exps.insert(k as i64, xk);
        }
    }
    // fix the monomial: [k] carries v^{1-k}
    let carried: i64 = exps.iter().map(|(&k, &e)| (1 - k) * e as i64).sum();
    let out = QuantumFactorization {
        sign,
        shift: shift - carried,
        exponents: exps,
        cyclotomic_exponents: cyc,
    };
    if &out.expand()? != x {
        return Err(Error::Verification(format!("factorization of {x} does not re-multiply")));
    }
    Ok(out)
}

pub fn det_factorization(n: usize) -> Result<QuantumFactorization> {
    let det = shapovalov_gram(n)?.determinant();
    factor_quantum(&det, (2 * n).max(2) as u64)
}

/// Whether `det(G_n)` is a unit of `Z[xi]`: no quantum integer `[k]` with
/// `r | k` occurs, cross-checked by evaluating at `xi`.
pub fn unit_at_root(n: usize, r: u64) -> Result<bool> {
    let fac = det_factorization(n)?;
    let by_factors = fac.factors().all(|k| k % r as i64 != 0);
    let value = shapovalov_gram(n)?.determinant().eval_root(r, 1);
    let by_value = !value.is_zero() && value.is_unit()?;
    if by_factors != by_value {
        return Err(Error::Verification(format!(
            "unit test at xi disagrees with the factor list for n = {n}, r = {r}"
        )));
    }
    Ok(by_value)
}

/// Whether `det(G_n)` fails to be a unit `+-v^k` of `Z[v, v^-1]`.
pub fn nonunit_over_a(n: usize) -> Result<bool> {
    Ok(!shapovalov_gram(n)?.determinant().is_unit())
}

/// Least `m` such that `det(G_n)` becomes invertible after inverting
/// `[m]!` (equivalently every `Phi_d(v^2)` dividing it has `d <= m`).
pub fn min_inverting_factorial(n: usize) -> Result<u64> {
    let fac = det_factorization(n)?;
    Ok(fac.cyclotomic_exponents.keys().copied().max().unwrap_or(0))
}

/// `[n choose i]`, the closed form of the Gram diagonal.
pub fn gram_closed_form(n: usize, i: usize) -> Result<LaurentPoly> {
    quantum_binomial(n as i64, i as u32, 1)
}

/// Rank-one checks up to `nmax` at the prime `r`: the defining relations of
/// `V_n` and its dual, the dual-chain coefficients, the intertwiner, the Gram
/// diagonal `[n choose i]`, the factorization of `det G_n` into quantum
/// integers, that no `[k]` with `r | k` occurs for `n < r`, and that `[r]`
/// does occur at `n = r`.
pub fn verify_rank_one(nmax: usize, r: u64) -> Report {
    let mut rep = Report::new(format!("rank-one integral structure (n <= {nmax}, r = {r})"));
    let first_err = |f: &dyn Fn(usize) -> Result<()>| {
        (0..=nmax)
            .find_map(|n| f(n).err().map(|e| format!("n = {n}: {e}")))
            .unwrap_or_default()
    };
    let relations = first_err(&|n| build_module(n)?.check_relations());
    rep.push("V_n relations (EF - FE, K E K^-1 = v^2 E)", relations.is_empty(), relations);
    let chain = first_err(&|n| check_dual_chain(&dual_module(n)?));
    rep.push("dual chain a_k = -v^(n-2k+2)", chain.is_empty(), chain);
    let phi = first_err(&|n| intertwiner(n).map(|_| ()));
    rep.push("intertwiner V_n -> V_n^*", phi.is_empty(), phi);
    let gram = first_err(&|n| {
        let g = shapovalov_gram(n)?;
        for i in 0..=n {
            if g.g[i][i] != gram_closed_form(n, i)? {
                return Err(Error::Verification(format!("G_ii != [n choose i] at i = {i}")));
            }
        }
        Ok(())
    });
    rep.push("Gram diagonal = [n choose i]", gram.is_empty(), gram);
    let fac = first_err(&|n| det_factorization(n).map(|_| ()));
    rep.push("det G_n factors into quantum integers", fac.is_empty(), fac);
    let units = (0..=nmax.min(r as usize - 1))
        .find_map(|n| match unit_at_root(n, r) {
            Ok(true) => None,
            Ok(false) => Some(format!("n = {n}: not a unit at xi")),
            Err(e) => Some(format!("n = {n}: {e}")),
        })
        .unwrap_or_default();
    rep.push("no [k] with r | k in det G_n for n < r", units.is_empty(), units);
    let witness = unit_at_root(r as usize, r);
    rep.push(
        "det G_r is not a unit at xi",
        matches!(witness, Ok(false)),
        match witness {
            Ok(_) => format!("n = {r}"),
            Err(e) => e.to_string(),
        },
    );
    rep
}
