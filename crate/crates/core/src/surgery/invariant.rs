use super::presentation::{Piece, SurgeryPresentation};
use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::rings::{Cyclotomic, LocalizedCyclotomic};
use rayon::prelude::*;
use serde::Serialize;

fn labels_ok(md: &ModularData, coloring: &[usize]) -> Result<()> {
    match coloring.iter().find(|&&c| c >= md.len()) {
        Some(c) => Err(Error::NotALabel(format!("label index {c}"))),
        None => Ok(()),
    }
}

/// Evaluation of the link colored by `coloring` (one label index per
/// component): an unknot with framing `f` colored `a` gives `theta_a^f qdim(a)`,
/// a Hopf pair gives `theta_a^f1 theta_b^f2 s(a, b)`.
pub fn colored_bracket(md: &ModularData, p: &SurgeryPresentation, coloring: &[usize]) -> Result<Cyclotomic> {
    if coloring.len() != p.components() {
        return Err(Error::InvalidParameters(format!(
            "{} colors for {} components",
            coloring.len(),
            p.components()
        )));
    }
    labels_ok(md, coloring)?;
    let mut acc = Cyclotomic::one(md.r);
    let mut at = 0;
    for piece in &p.pieces {
        let term = match *piece {
            Piece::Unknot(f) => {
                let a = coloring[at];
                &md.twist_pow(a, f) * &md.qdim[a]
            }
            Piece::Hopf([f1, f2]) => {
                let (a, b) = (coloring[at], coloring[at + 1]);
                &(&md.twist_pow(a, f1) * &md.twist_pow(b, f2)) * &md.s[a][b]
            }
        };
        acc = &acc * &term;
        at += piece.components();
    }
    Ok(acc)
}

/// `F_L = sum over colorings mu of prod_i qdim(mu_i) * <L(mu)>`, enumerating
/// every coloring; the empty link gives 1.
pub fn kirby_sum(md: &ModularData, p: &SurgeryPresentation) -> Result<Cyclotomic> {
    let m = p.components() as u32;
    let n = md.len();
    let total = (n as u64)
        .checked_pow(m)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| Error::ResourceGuard(format!("{n}^{m} colorings")))?;
    (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let coloring: Vec<usize> = (0..m)
                .map(|_| {
                    let c = (idx % n as u64) as usize;
                    idx /= n as u64;
                    c
                })
                .collect();
            let weight = coloring
                .iter()
                .fold(Cyclotomic::one(md.r), |a, &c| &a * &md.qdim[c]);
            Ok(&weight * &colored_bracket(md, p, &coloring)?)
        })
        .try_reduce(|| Cyclotomic::zero(md.r), |a, b| Ok(&a + &b))
}

/// The same sum, factored over the unlinked pieces.
pub fn kirby_sum_by_pieces(md: &ModularData, p: &SurgeryPresentation) -> Cyclotomic {
    let n = md.len();
    let r = md.r;
    p.pieces.iter().fold(Cyclotomic::one(r), |acc, piece| {
        let s = match *piece {
            Piece::Unknot(f) => (0..n).fold(Cyclotomic::zero(r), |s, a| {
                &s + &(&(&md.qdim[a] * &md.qdim[a]) * &md.twist_pow(a, f))
            }),
            Piece::Hopf([f1, f2]) => (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .fold(Cyclotomic::zero(r), |s, (a, b)| {
                    let w = &(&md.qdim[a] * &md.qdim[b]) * &(&md.twist_pow(a, f1) * &md.twist_pow(b, f2));
                    &s + &(&w * &md.s[a][b])
                }),
        };
        &acc * &s
    })
}

fn kappa_pow(md: &ModularData, e: i64) -> LocalizedCyclotomic {
    let e = e.rem_euclid(md.kappa_order as i64);
    md.kappa.pow(e).expect("nonnegative power")
}

/// `[M] = F_L D^{-(m+1)} kappa^{w + sigma}` in `Z[zeta, 1/r]`.
pub fn invariant(md: &ModularData, p: &SurgeryPresentation) -> Result<LocalizedCyclotomic> {
    let f = kirby_sum_by_pieces(md, p);
    let ld = p.linking_data();
    let d_pow = md.d.pow(-(p.components() as i64 + 1))?;
    Ok(&(&md.lift(&f) * &d_pow) * &kappa_pow(md, p.weight + ld.signature()))
}

/// The three integrality statements for one presentation.
#[derive(Debug, Clone, Serialize)]
pub struct IntegralityReport {
    pub presentation: SurgeryPresentation,
    pub is_even: bool,
    /// `F_L / (F_-^{sigma_- + beta_1} F_+^{sigma_+})` lies in `Z[xi]`.
    pub ratio_in_z_xi: bool,
    /// `F_- [M]` lies in `Z[zeta]`.
    pub f_minus_m_in_z_zeta: bool,
    /// `F_- [M]` lies in `Z[xi]`.
    pub f_minus_m_in_z_xi: bool,
    pub f_minus_m: LocalizedCyclotomic,
}

impl IntegralityReport {
    /// `ratio_in_z_xi`, `f_minus_m_in_z_zeta`, and `is_even => f_minus_m_in_z_xi`.
    pub fn passed(&self) -> bool {
        self.ratio_in_z_xi && self.f_minus_m_in_z_zeta && (!self.is_even || self.f_minus_m_in_z_xi)
    }
}

/// Whether an element of `Z[zeta, 1/r]` lies in `Z[xi]`, `xi = zeta^{O(zeta)/r}`.
pub fn in_z_xi(md: &ModularData, x: &LocalizedCyclotomic) -> Result<bool> {
    if !x.is_integral() {
        return Ok(false);
    }
    if md.zeta_order == md.r {
        return Ok(true);
    }
    x.numerator().in_subring_fourth_power()
}

pub fn check_integrality(md: &ModularData, p: &SurgeryPresentation) -> Result<IntegralityReport> {
    let ld = p.linking_data();
    let f = kirby_sum_by_pieces(md, p);
    let denom = &md
        .f_minus
        .pow((ld.sigma_minus + ld.beta1) as u64)
        * &md.f_plus.pow(ld.sigma_plus as u64);
    let ratio_in_z_xi = f.div_exact(&denom)?.is_some();
    let value = invariant(md, p)?;
    let f_minus_m = &md.lift(&md.f_minus) * &value;
    Ok(IntegralityReport {
        presentation: p.clone(),
        is_even: p.is_even(),
        ratio_in_z_xi,
        f_minus_m_in_z_zeta: f_minus_m.is_integral(),
        f_minus_m_in_z_xi: in_z_xi(md, &f_minus_m)?,
        f_minus_m,
    })
}

/// Integrality reports for the lens spaces `L(p, 1)`, `p = 1..=pmax`, with
/// weights 0 and 1.
pub fn lens_sweep(md: &ModularData, pmax: i64) -> Result<Vec<IntegralityReport>> {
    (1..=pmax)
        .flat_map(|p| [0, 1].map(|w| SurgeryPresentation::lens(p, w)))
        .map(|pres| check_integrality(md, &pres))
        .collect()
}
