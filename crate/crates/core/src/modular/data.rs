use super::dims::{qdim, qdim_by_character, twist_exponent, weyl_denominator};
use super::linalg::{determinant, mat_mul};
use super::roots_of_unity::{sqrt_sign_r_power, zeta_order};
use crate::error::{Error, Result};
use crate::fusion::FusionTable;
use crate::lie::{LieType, RootSystem, Weight};
use crate::report::Report;
use crate::rings::{Cyclotomic, LocalizedCyclotomic};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;

/// Modular data of the quotient category at an admissible `(t, r)`.
///
/// Elements of `Z[xi]` have order `r`; `d`, `kappa` live in `Z[zeta, 1/r]`
/// with `zeta` of order `zeta_order`, where `xi = zeta^{zeta_order / r}`.
#[derive(Debug, Clone, Serialize)]
pub struct ModularData {
    pub lie_type: LieType,
    pub r: u64,
    pub labels: Vec<Weight>,
    pub qdim: Vec<Cyclotomic>,
    /// `theta_lambda = xi^{twist_exponents[lambda]}`, exponents reduced mod `r`.
    pub twist_exponents: Vec<i64>,
    pub s: Vec<Vec<Cyclotomic>>,
    /// `sum_lambda qdim(lambda)^2`.
    pub dsq: Cyclotomic,
    /// `delta(K_{2 rho})`.
    pub delta: Cyclotomic,
    pub zeta_order: u64,
    /// A square root of `dsq` in `Z[zeta, 1/r]`.
    pub d: LocalizedCyclotomic,
    pub f_plus: Cyclotomic,
    pub f_minus: Cyclotomic,
    /// `F_- / D`.
    pub kappa: LocalizedCyclotomic,
    pub kappa_order: u64,
    #[serde(skip)]
    fusion: Arc<FusionTable>,
}

impl ModularData {
    pub fn new(t: LieType, r: u64) -> Result<Self> {
        Self::from_fusion(Arc::new(FusionTable::new(t, r)?))
    }

    /// Builds the modular data on top of an already verified fusion table.
    pub fn from_fusion(fusion: Arc<FusionTable>) -> Result<Self> {
        let t = fusion.lie_type();
        let r = fusion.r();
        let sys = RootSystem::get(t);
        let labels = fusion.labels().to_vec();
        let n = labels.len();
        let qdim: Vec<Cyclotomic> = labels
            .par_iter()
            .map(|w| qdim(&sys, w, r))
            .collect::<Result<_>>()?;
        let twist_exponents: Vec<i64> = labels
            .iter()
            .map(|w| twist_exponent(&sys, w).map(|e| e.rem_euclid(r as i64)))
            .collect::<Result<_>>()?;
        // s(i, j) = theta_i^-1 theta_j^-1 sum_k N_ij^k theta_k qdim(k)
        let s: Vec<Vec<Cyclotomic>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        fusion
                            .product(i, j)
                            .fold(Cyclotomic::zero(r), |acc, (k, m)| {
                                let e = twist_exponents[k] - twist_exponents[i] - twist_exponents[j];
                                &acc + &(&Cyclotomic::zeta_pow(r, e) * &qdim[k]).scale(&BigInt::from(m))
                            })
                    })
                    .collect()
            })
            .collect();
        let squares: Vec<Cyclotomic> = qdim.iter().map(|d| d * d).collect();
        let dsq = squares.iter().fold(Cyclotomic::zero(r), |a, b| &a + b);
        let weighted = |sign: i64| {
            squares
                .iter()
                .zip(&twist_exponents)
                .fold(Cyclotomic::zero(r), |a, (d2, &e)| &a + &(d2 * &Cyclotomic::zeta_pow(r, sign * e)))
        };
        let f_plus = weighted(1);
        let f_minus = weighted(-1);
        let delta = weyl_denominator(&sys, r);
        let order = zeta_order(&sys, r);
        let delta_inv = LocalizedCyclotomic::integral(delta.embed(order)?, r)
            .inverse()?
            .ok_or_else(|| Error::Verification("delta(K_2rho) is not invertible in Z[zeta, 1/r]".into()))?;
        let d = &LocalizedCyclotomic::integral(sqrt_sign_r_power(&sys, r), r) * &delta_inv;
        let dsq_loc = LocalizedCyclotomic::integral(dsq.embed(order)?, r);
        if (&d * &d) != dsq_loc {
            return Err(Error::Verification(format!("D^2 != Dsq for {t}, r = {r}")));
        }
        if &f_plus * &f_minus != dsq {
            return Err(Error::Verification(format!("F+ F- != Dsq for {t}, r = {r}")));
        }
        let d_inv = d
            .inverse()?
            .ok_or_else(|| Error::Verification("D is not invertible in Z[zeta, 1/r]".into()))?;
        let kappa = &LocalizedCyclotomic::integral(f_minus.embed(order)?, r) * &d_inv;
        let kappa_order = root_of_unity_order(&kappa, 16 * r).ok_or_else(|| {
            Error::Verification(format!("kappa^n != 1 for all n <= {} ({t}, r = {r})", 16 * r))
        })?;
        Ok(Self {
            lie_type: t,
            r,
            labels,
            qdim,
            twist_exponents,
            s,
            dsq,
            delta,
            zeta_order: order,
            d,
            f_plus,
            f_minus,
            kappa,
            kappa_order,
            fusion,
        })
    }

    pub fn fusion(&self) -> &FusionTable {
        &self.fusion
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn twist(&self, i: usize) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.r, self.twist_exponents[i])
    }

    /// `theta_i^k`.
    pub fn twist_pow(&self, i: usize, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(self.r, self.twist_exponents[i] * k)
    }

    /// Lifts an element of `Z[xi]` into `Z[zeta, 1/r]`.
    pub fn lift(&self, x: &Cyclotomic) -> LocalizedCyclotomic {
        LocalizedCyclotomic::integral(x.embed(self.zeta_order).expect("r divides the order of zeta"), self.r)
    }

    /// `det(S)` by fraction-free elimination over `Z[xi]`.
    pub fn det_s(&self) -> Result<Cyclotomic> {
        determinant(&self.s)
    }

    /// The charge conjugation matrix `C[i][j] = [j = dual(i)]`.
    pub fn charge_conjugation(&self) -> Vec<Vec<Cyclotomic>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Cyclotomic::from_int(self.r, (j == self.fusion.dual(i)) as i64))
                    .collect()
            })
            .collect()
    }

    /// The two global-dimension identities:
    /// `Dsq * delta(K_{2 rho})^2 = sn(w_0) r^l` and `det(S)^2 = +-Dsq^N`
    /// (the sign is reported). The determinant is skipped when `with_det` is false.
    pub fn verify_dimension_identities(&self, with_det: bool) -> Report {
        let sys = RootSystem::get(self.lie_type);
        let r = self.r;
        let l = self.lie_type.rank() as u32;
        let mut rep = Report::new(format!("global dimension identities ({}, r = {r})", self.lie_type));
        let rhs = BigInt::from(sys.sign_w0()) * BigInt::from(r).pow(l);
        let lhs = &self.dsq * &(&self.delta * &self.delta);
        rep.push(
            "Dsq * delta(K_2rho)^2 = sn(w0) r^l",
            lhs == Cyclotomic::from_int(r, rhs.clone()),
            format!("rhs = {rhs}"),
        );
        let val = self.delta.valuation_one_minus_zeta();
        let roots = sys.positive_roots().len() as u32;
        rep.push(
            "delta(K_2rho) ~ (1 - xi)^|Phi+|",
            val.as_ref().is_ok_and(|&v| v == roots)
                && self
                    .delta
                    .div_exact(&(&Cyclotomic::one(r) - &Cyclotomic::zeta_pow(r, 1)).pow(roots as u64))
                    .ok()
                    .flatten()
                    .is_some_and(|u| u.is_unit().unwrap_or(false)),
            format!("valuation {val:?}, |Phi+| = {roots}"),
        );
        if with_det {
            match self.det_s() {
                Ok(det) => {
                    let sq = &det * &det;
                    let pow = self.dsq.pow(self.len() as u64);
                    let sign = if sq == pow {
                        Some(1)
                    } else if sq == -&pow {
                        Some(-1)
                    } else {
                        None
                    };
                    rep.push(
                        "det(S)^2 = +-Dsq^N",
                        sign.is_some(),
                        match sign {
                            Some(s) => format!("sign {s:+}, N = {}", self.len()),
                            None => format!("det(S)^2 = {sq}, Dsq^N = {pow}"),
                        },
                    );
                }
                Err(e) => rep.push("det(S)^2 = +-Dsq^N", false, e.to_string()),
            }
        }
        rep
    }

    /// The sign in `det(S)^2 = sign * Dsq^N`, if the identity holds.
    pub fn det_sign(&self) -> Result<Option<i64>> {
        let det = self.det_s()?;
        let sq = &det * &det;
        let pow = self.dsq.pow(self.len() as u64);
        Ok(if sq == pow {
            Some(1)
        } else if sq == -&pow {
            Some(-1)
        } else {
            None
        })
    }

    /// Modularity checks: S symmetric with first row qdim, `S^2 = Dsq * C`,
    /// S invertible over `Z[xi, 1/r]`, label set contains 0 and is dual-closed,
    /// qdim and twist invariant under duality, qdim matches the character
    /// trace of `K_{2 rho}`.
    pub fn verify_modular(&self) -> Report {
        let sys = RootSystem::get(self.lie_type);
        let n = self.len();
        let r = self.r;
        let mut rep = Report::new(format!("modular data ({}, r = {r})", self.lie_type));
        let sym = (0..n).all(|i| (0..n).all(|j| self.s[i][j] == self.s[j][i]));
        rep.push("S is symmetric", sym, "");
        rep.push("first row of S is qdim", self.s[0] == self.qdim, "");
        rep.push(
            "unit object has qdim 1 and twist 1",
            self.labels[0].is_zero() && self.qdim[0].is_one() && self.twist_exponents[0] == 0,
            "",
        );
        let dual_ok = (0..n).all(|i| {
            let j = self.fusion.dual(i);
            self.qdim[i] == self.qdim[j] && self.twist_exponents[i] == self.twist_exponents[j]
        });
        rep.push("qdim and twist are invariant under duality", dual_ok, "");
        let char_ok = self
            .labels
            .iter()
            .zip(&self.qdim)
            .all(|(w, q)| qdim_by_character(&sys, w, r).is_ok_and(|c| &c == q));
        rep.push("qdim equals the trace of K_2rho", char_ok, "");
        let ssq = mat_mul(&self.s, &self.s);
        let expected: Vec<Vec<Cyclotomic>> = self
            .charge_conjugation()
            .iter()
            .map(|row| row.iter().map(|c| c * &self.dsq).collect())
            .collect();
        rep.push("S^2 = Dsq * C", ssq == expected, "");
        let dsq_unit = LocalizedCyclotomic::integral(self.dsq.clone(), r)
            .inverse()
            .is_ok_and(|x| x.is_some());
        rep.push(
            "S is invertible over Z[xi, 1/r]",
            dsq_unit && ssq == expected,
            "S^2 = Dsq C with Dsq a unit",
        );
        let closed = (0..n).all(|i| self.fusion.dual(self.fusion.dual(i)) == i);
        rep.push("label set contains 0 and is dual-closed", closed && self.labels[0].is_zero(), "");
        rep.push("F+ F- = Dsq", &self.f_plus * &self.f_minus == self.dsq, "");
        rep.push(
            "conj(F+) = F- and conj(Dsq) = Dsq",
            self.f_plus.conj() == self.f_minus && self.dsq.conj() == self.dsq,
            "",
        );
        rep.push("D^2 = Dsq", (&self.d * &self.d) == self.lift(&self.dsq), "");
        rep.push(
            "kappa D = F-",
            (&self.kappa * &self.d) == self.lift(&self.f_minus),
            "",
        );
        rep.push(
            "kappa is a root of unity",
            self.kappa_order >= 1 && self.kappa_order <= 16 * r && self.kappa.pow(self.kappa_order as i64).is_ok_and(|x| x.is_one()),
            format!("order {} (searched up to {})", self.kappa_order, 16 * r),
        );
        rep
    }

    /// Qdim ring homomorphism `qdim(i) qdim(j) = sum_k N_ij^k qdim(k)`.
    pub fn verify_qdim_homomorphism(&self) -> Report {
        let n = self.len();
        let mut rep = Report::new(format!("quantum dimension homomorphism ({}, r = {})", self.lie_type, self.r));
        let bad: Vec<(usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let rhs = self
                    .fusion
                    .product(i, j)
                    .fold(Cyclotomic::zero(self.r), |a, (k, m)| &a + &self.qdim[k].scale(&BigInt::from(m)));
                &self.qdim[i] * &self.qdim[j] != rhs
            })
            .collect();
        rep.push(
            "qdim(a) qdim(b) = sum_c N_ab^c qdim(c)",
            bad.is_empty(),
            match bad.first() {
                None => format!("{} pairs", n * (n + 1) / 2),
                Some(&(i, j)) => format!("fails at {} x {}", self.labels[i], self.labels[j]),
            },
        );
        rep
    }
}

/// Least `n <= bound` with `x^n = 1`.
fn root_of_unity_order(x: &LocalizedCyclotomic, bound: u64) -> Option<u64> {
    let mut acc = x.clone();
    for n in 1..=bound {
        if acc.is_one() {
            return Some(n);
        }
        acc = &acc * x;
    }
    None
}
