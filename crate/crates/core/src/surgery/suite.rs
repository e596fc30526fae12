use super::invariant::{check_integrality, invariant, kirby_sum, kirby_sum_by_pieces};
use super::presentation::{Piece, SurgeryPresentation};
use crate::error::Result;
use crate::modular::ModularData;
use crate::report::Report;
use crate::rings::LocalizedCyclotomic;

/// A fixed family of presentations: lens spaces, Hopf pairs and a few
/// unions of both, each at two consecutive weights.
pub fn presentation_sweep() -> Vec<SurgeryPresentation> {
    let mut shapes: Vec<Vec<Piece>> = vec![vec![]];
    shapes.extend((-4..=4).map(|p| vec![Piece::Unknot(p)]));
    for a in -2..=2 {
        for b in a..=2 {
            shapes.push(vec![Piece::Hopf([a, b])]);
        }
    }
    shapes.extend([
        vec![Piece::Unknot(2), Piece::Unknot(-3)],
        vec![Piece::Unknot(0), Piece::Unknot(0)],
        vec![Piece::Unknot(5), Piece::Hopf([1, -1])],
        vec![Piece::Hopf([2, 3]), Piece::Unknot(-1)],
        vec![Piece::Hopf([0, 1]), Piece::Hopf([-2, 2])],
        vec![Piece::Unknot(1), Piece::Unknot(2), Piece::Unknot(3)],
        vec![Piece::Hopf([3, 3]), Piece::Unknot(-2)],
        vec![Piece::Unknot(-4), Piece::Hopf([-1, -3])],
    ]);
    shapes
        .into_iter()
        .enumerate()
        .flat_map(|(i, pieces)| {
            let w = i as i64 % 3 - 1;
            [SurgeryPresentation::new(pieces.clone(), w), SurgeryPresentation::new(pieces, w + 1)]
        })
        .collect()
}

fn first_failure(
    ps: &[SurgeryPresentation],
    mut ok: impl FnMut(&SurgeryPresentation) -> Result<bool>,
) -> Result<Option<&SurgeryPresentation>> {
    for p in ps {
        if !ok(p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn push_sweep(rep: &mut Report, name: &str, n: usize, bad: Option<&SurgeryPresentation>) {
    rep.push(
        name,
        bad.is_none(),
        match bad {
            None => format!("{n} presentations"),
            Some(p) => format!("fails at {p:?}"),
        },
    );
}

/// Normalizations, Kirby-move invariance, weight and orientation behavior,
/// connected sums and integrality over [`presentation_sweep`].
pub fn verify_surgery(md: &ModularData) -> Result<Report> {
    let mut rep = Report::new(format!("surgery invariants ({}, r = {})", md.lie_type, md.r));
    let one = LocalizedCyclotomic::one(md.zeta_order, md.r);
    let s1s2 = invariant(md, &SurgeryPresentation::lens(0, 0))?;
    rep.push("[S^1 x S^2] = 1", s1s2 == one, s1s2.to_string());
    let s3 = invariant(md, &SurgeryPresentation::sphere(0))?;
    rep.push("[S^3] = D^-1", (&s3 * &md.d).is_one(), s3.to_string());

    let ps = presentation_sweep();
    let n = ps.len();
    let bad = first_failure(&ps, |p| Ok(kirby_sum_by_pieces(md, p) == kirby_sum(md, p)?))?;
    push_sweep(&mut rep, "Kirby sum factors over pieces", n, bad);
    let bad = first_failure(&ps, |p| {
        let v = invariant(md, p)?;
        for s in [[1, 1], [-1, -1], [1, -1]] {
            if invariant(md, &p.stabilize(s[0]))? != v || invariant(md, &p.stabilize(s[0]).stabilize(s[1]))? != v {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    push_sweep(&mut rep, "invariance under +-1 blow-ups", n, bad);
    let bad = first_failure(&ps, |p| {
        let v = invariant(md, p)?;
        let mut ok = true;
        for (i, piece) in p.pieces.iter().enumerate() {
            if let Piece::Unknot(f) = *piece {
                for s in [1, -1] {
                    let mut q = p.clone();
                    q.pieces[i] = Piece::Hopf([f + s, s]);
                    ok &= invariant(md, &q)? == v;
                }
            }
        }
        Ok(ok)
    })?;
    push_sweep(&mut rep, "Hopf(f, +-1) blows down to Unknot(f -+ 1)", n, bad);
    let bad = first_failure(&ps, |p| {
        Ok(invariant(md, &p.with_weight(p.weight + 1))? == &md.kappa * &invariant(md, p)?)
    })?;
    push_sweep(&mut rep, "raising the weight multiplies by kappa", n, bad);
    let bad = first_failure(&ps, |p| Ok(invariant(md, p)?.conj() == invariant(md, &p.mirror())?))?;
    push_sweep(&mut rep, "complex conjugation reverses orientation", n, bad);
    let bad = first_failure(&ps, |p| {
        let q = &ps[(p.pieces.len() * 7 + 3) % n];
        let rhs = &md.d * &(&invariant(md, p)? * &invariant(md, q)?);
        Ok(invariant(md, &p.connected_sum(q))? == rhs)
    })?;
    push_sweep(&mut rep, "[M1 # M2] = D [M1][M2]", n, bad);
    let bad = first_failure(&ps, |p| Ok(check_integrality(md, p)?.passed()))?;
    push_sweep(&mut rep, "F_- [M] integral, in Z[xi] when even", n, bad);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;

    #[test]
    fn sweep_is_large_enough() {
        assert!(presentation_sweep().len() >= 50);
    }

    #[test]
    fn surgery_suite_passes() {
        for (t, r) in [(LieType::a(1), 5), (LieType::a(1), 7), (LieType::b(2), 7)] {
            let md = ModularData::new(t, r).unwrap();
            let rep = verify_surgery(&md).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}
