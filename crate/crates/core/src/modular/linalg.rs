use crate::error::Result;
use crate::rings::Cyclotomic;

/// Determinant by fraction-free (Bareiss) elimination: every division is
/// exact in `Z[zeta]`.
pub fn determinant(m: &[Vec<Cyclotomic>]) -> Result<Cyclotomic> {
    let n = m.len();
    if n == 0 {
        return Err(crate::error::Error::ZeroInput("determinant of an empty matrix"));
    }
    let order = m[0][0].order();
    let mut a: Vec<Vec<Cyclotomic>> = m.to_vec();
    let mut prev = Cyclotomic::one(order);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(Cyclotomic::zero(order)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact_or_err(&prev, "Bareiss elimination")?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

pub fn mat_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let n = a.len();
    let order = a[0][0].order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(Cyclotomic::zero(order), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<Cyclotomic>]) -> Cyclotomic {
        fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
            if n == 0 {
                return vec![(vec![], false)];
            }
            let mut out = vec![];
            for (p, odd) in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    // inserting at `pos` adds (n - 1 - pos) inversions
                    out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
                }
            }
            out
        }
        let order = m[0][0].order();
        let mut acc = Cyclotomic::zero(order);
        for (p, odd) in perms(m.len()) {
            let term = (0..m.len()).fold(Cyclotomic::one(order), |t, i| &t * &m[i][p[i]]);
            acc = if odd { &acc - &term } else { &acc + &term };
        }
        acc
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let r = 7;
        let z = |k: i64| Cyclotomic::zeta_pow(r, k);
        for seed in 0..6i64 {
            let n = 1 + (seed as usize % 4);
            let m: Vec<Vec<Cyclotomic>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let a = (i as i64 * 3 + j as i64 * 5 + seed) % 7;
                            let b = (i as i64 + 2 * j as i64 * seed) % 4 - 1;
                            &z(a) + &Cyclotomic::from_int(r, b)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m).unwrap(), leibniz(&m));
        }
    }

    #[test]
    fn singular_and_pivoting() {
        let r = 5;
        let one = Cyclotomic::one(r);
        let zero = Cyclotomic::zero(r);
        let swap = vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]];
        assert_eq!(determinant(&swap).unwrap(), -one.clone());
        let sing = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert!(determinant(&sing).unwrap().is_zero());
    }
}
