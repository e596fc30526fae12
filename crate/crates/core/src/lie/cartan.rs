use super::types::{Family, LieType};
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

/// Cartan matrix `a`, root length factors `d` and the symmetrized form
/// `form[i][j] = (alpha_i | alpha_j) = d_i a_ij`, normalized so that short
/// roots have squared length 2. Nodes follow Bourbaki numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub form: Vec<Vec<i64>>,
    #[serde(skip)]
    inverse: Vec<Vec<Ratio<i64>>>,
}

/// `(alpha_i | alpha_j)` for the simple roots of `t`.
fn simple_form(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut b = vec![vec![0i64; l]; l];
    let mut link = |i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match t.family() {
        Family::A => {
            for i in 0..l - 1 {
                link(i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..l - 1 {
                link(i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..l - 2 {
                link(i, i + 1, -1);
            }
            link(l - 2, l - 1, -2);
        }
        Family::D => {
            for i in 0..l - 2 {
                link(i, i + 1, -1);
            }
            link(l - 3, l - 1, -1);
        }
        Family::E => {
            // 1 - 3 - 4 - 5 - 6 (- 7), with 2 attached to 4.
            link(0, 2, -1);
            link(1, 3, -1);
            for i in 2..l - 1 {
                link(i, i + 1, -1);
            }
        }
    }
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = match (t.family(), i + 1 == l) {
            (Family::B, false) | (Family::C, true) => 4,
            _ => 2,
        };
    }
    b
}

impl CartanData {
    pub fn new(t: LieType) -> Self {
        let form = simple_form(t);
        let l = form.len();
        let d: Vec<i64> = (0..l).map(|i| form[i][i] / 2).collect();
        let a: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let inverse = invert(&a);
        Self { a, d, form, inverse }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `det(a)`, the index of the root lattice in the weight lattice.
    pub fn determinant(&self) -> i64 {
        let m: Vec<Vec<Ratio<i64>>> = self
            .a
            .iter()
            .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
            .collect();
        let (det, _) = reduce(m, self.rank());
        assert!(det.is_integer());
        det.to_integer()
    }

    /// Exact inverse of the Cartan matrix.
    pub fn inverse(&self) -> &[Vec<Ratio<i64>>] {
        &self.inverse
    }

    /// Fundamental-weight coordinates to simple-root coordinates.
    pub fn to_simple_coords(&self, c: &[i64]) -> Vec<Ratio<i64>> {
        self.inverse
            .iter()
            .map(|row| row.iter().zip(c).map(|(x, &y)| x * y).sum())
            .collect()
    }

    /// Simple-root coordinates to fundamental-weight coordinates.
    pub fn to_fundamental_coords(&self, k: &[i64]) -> Vec<i64> {
        self.a
            .iter()
            .map(|row| row.iter().zip(k).map(|(x, y)| x * y).sum())
            .collect()
    }

    /// The simple-root coordinates of `c` when they are integral.
    pub fn root_lattice_coords(&self, c: &[i64]) -> Option<Vec<i64>> {
        self.to_simple_coords(c)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// `(x | y)` for `x, y` in fundamental-weight coordinates.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Ratio<i64> {
        self.to_simple_coords(y)
            .iter()
            .enumerate()
            .map(|(i, k)| k * (x[i] * self.d[i]))
            .sum()
    }

    /// `(x | beta)` for `x` in fundamental coordinates and `beta` in
    /// simple-root coordinates; always an integer.
    pub fn pairing_with_root(&self, x: &[i64], k: &[i64]) -> i64 {
        x.iter()
            .zip(k)
            .zip(&self.d)
            .map(|((x, k), d)| x * k * d)
            .sum()
    }
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let aug: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| Ratio::from_integer(x))
                .chain((0..n).map(|j| Ratio::from_integer((i == j) as i64)))
                .collect()
        })
        .collect();
    let (det, red) = reduce(aug, n);
    assert!(!det.is_zero(), "Cartan matrix is singular");
    red.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Gauss-Jordan elimination on the first `n` columns; returns the
/// determinant of the leading `n x n` block and the reduced rows.
fn reduce(mut m: Vec<Vec<Ratio<i64>>>, n: usize) -> (Ratio<i64>, Vec<Vec<Ratio<i64>>>) {
    let mut det = Ratio::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return (Ratio::zero(), m);
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for x in m[col].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    (det, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<LieType> {
        let mut v = vec![];
        v.extend((1..=7).map(LieType::a));
        v.extend((2..=7).map(LieType::b));
        v.extend((3..=7).map(LieType::c));
        v.extend((4..=7).map(LieType::d));
        v.extend([LieType::e(6), LieType::e(7)]);
        v
    }

    #[test]
    fn form_is_symmetric_with_at_most_two_lengths() {
        for t in all_types() {
            let c = CartanData::new(t);
            let l = c.rank();
            for i in 0..l {
                for j in 0..l {
                    assert_eq!(c.form[i][j], c.form[j][i], "{t}");
                    assert_eq!(c.form[i][j], c.d[i] * c.a[i][j], "{t}");
                }
                assert_eq!(c.a[i][i], 2);
            }
            let mut ds = c.d.clone();
            ds.sort();
            ds.dedup();
            assert!(ds.len() <= 2 && ds[0] == 1, "{t}: {ds:?}");
        }
    }

    #[test]
    fn determinants_match_lattice_index() {
        for t in all_types() {
            let l = t.rank() as i64;
            let expected = match (t.family(), l) {
                (Family::A, _) => l + 1,
                (Family::B, _) | (Family::C, _) => 2,
                (Family::D, _) => 4,
                (Family::E, 6) => 3,
                (Family::E, _) => 2,
            };
            assert_eq!(CartanData::new(t).determinant(), expected, "{t}");
        }
    }

    #[test]
    fn inverse_is_inverse() {
        for t in all_types() {
            let c = CartanData::new(t);
            let l = c.rank();
            for i in 0..l {
                for j in 0..l {
                    let s: Ratio<i64> = (0..l).map(|k| c.inverse()[i][k] * c.a[k][j]).sum();
                    assert_eq!(s, Ratio::from_integer((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn fundamental_weights_pair_with_simple_roots() {
        for t in all_types() {
            let c = CartanData::new(t);
            let l = c.rank();
            for i in 0..l {
                let mut lam = vec![0; l];
                lam[i] = 1;
                for j in 0..l {
                    let mut alpha = vec![0; l];
                    alpha[j] = 1;
                    let alpha_f = c.to_fundamental_coords(&alpha);
                    let expect = if i == j { c.d[i] } else { 0 };
                    assert_eq!(c.pairing(&lam, &alpha_f), Ratio::from_integer(expect));
                    assert_eq!(c.pairing_with_root(&lam, &alpha), expect);
                }
            }
        }
    }

    #[test]
    fn a2_fundamental_weight_norm() {
        let c = CartanData::new(LieType::a(2));
        assert_eq!(c.pairing(&[1, 0], &[1, 0]), Ratio::new(2, 3));
        assert_eq!(c.pairing(&[1, 0], &[0, 1]), Ratio::new(1, 3));
    }
}
