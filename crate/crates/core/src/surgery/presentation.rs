use crate::error::{Error, Result};
use crate::lie::LieType;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// One sublink of a surgery presentation; distinct pieces are unlinked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Piece {
    /// A framed unknot.
    Unknot(i64),
    /// Two unknots linked once (a Hopf link), with their framings.
    Hopf([i64; 2]),
}

impl Piece {
    pub fn components(&self) -> usize {
        match self {
            Piece::Unknot(_) => 1,
            Piece::Hopf(_) => 2,
        }
    }

    fn negate(&self) -> Self {
        match *self {
            Piece::Unknot(f) => Piece::Unknot(-f),
            Piece::Hopf([a, b]) => Piece::Hopf([-a, -b]),
        }
    }
}

/// A closed 3-manifold given by surgery on a disjoint union of framed
/// unknots and Hopf links, with an integer weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SurgeryPresentation {
    pub pieces: Vec<Piece>,
    pub weight: i64,
}

/// Signature data of the linking matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingData {
    pub matrix: Vec<Vec<i64>>,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
    /// Nullity of the linking matrix, the first Betti number of the manifold.
    pub beta1: usize,
}

impl LinkingData {
    pub fn signature(&self) -> i64 {
        self.sigma_plus as i64 - self.sigma_minus as i64
    }
}

impl SurgeryPresentation {
    pub fn new(pieces: Vec<Piece>, weight: i64) -> Self {
        Self { pieces, weight }
    }

    /// `S^3`: the empty link.
    pub fn sphere(weight: i64) -> Self {
        Self::new(vec![], weight)
    }

    /// `L(p, 1)` as surgery on a `p`-framed unknot (`p = 0` gives `S^1 x S^2`).
    pub fn lens(p: i64, weight: i64) -> Self {
        Self::new(vec![Piece::Unknot(p)], weight)
    }

    pub fn hopf(f1: i64, f2: i64, weight: i64) -> Self {
        Self::new(vec![Piece::Hopf([f1, f2])], weight)
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        self.pieces.iter().map(Piece::components).sum()
    }

    pub fn with_weight(&self, weight: i64) -> Self {
        Self::new(self.pieces.clone(), weight)
    }

    /// Blow-up by a `sign`-framed unknot. The manifold, and hence its
    /// weight, is unchanged.
    pub fn stabilize(&self, sign: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        let mut pieces = self.pieces.clone();
        pieces.push(Piece::Unknot(sign));
        Self::new(pieces, self.weight)
    }

    /// Connected sum: pieces concatenate, weights add.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().copied());
        Self::new(pieces, self.weight + other.weight)
    }

    /// The mirror: all framings and the weight negated.
    pub fn mirror(&self) -> Self {
        Self::new(self.pieces.iter().map(Piece::negate).collect(), -self.weight)
    }

    /// Block-diagonal linking matrix.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.components();
        let mut b = vec![vec![0; m]; m];
        let mut at = 0;
        for p in &self.pieces {
            match *p {
                Piece::Unknot(f) => b[at][at] = f,
                Piece::Hopf([f1, f2]) => {
                    b[at][at] = f1;
                    b[at + 1][at + 1] = f2;
                    b[at][at + 1] = 1;
                    b[at + 1][at] = 1;
                }
            }
            at += p.components();
        }
        b
    }

    /// Signature by symmetric congruence diagonalization over `Q`.
    pub fn linking_data(&self) -> LinkingData {
        let matrix = self.linking_matrix();
        let diag = congruence_diagonal(&matrix);
        let count = |f: fn(&Ratio<i64>) -> bool| diag.iter().filter(|x| f(x)).count();
        LinkingData {
            sigma_plus: count(|x| x.is_positive()),
            sigma_minus: count(|x| x.is_negative()),
            beta1: count(|x| x.is_zero()),
            matrix,
        }
    }

    /// `w = 1 + beta_1 (mod 2)`.
    pub fn is_even(&self) -> bool {
        (self.weight - 1 - self.linking_data().beta1 as i64).rem_euclid(2) == 0
    }
}

/// Diagonal of a matrix congruent to `b` (`P^T b P` with `P` invertible).
/// A zero pivot is replaced by swapping in a later nonzero diagonal entry,
/// or else by adding a row/column with a nonzero off-diagonal entry.
pub fn congruence_diagonal(b: &[Vec<i64>]) -> Vec<Ratio<i64>> {
    let n = b.len();
    let mut a: Vec<Vec<Ratio<i64>>> = b
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // a[k][k] becomes 2 a[k][j] != 0
                for c in 0..n {
                    let t = a[j][c];
                    a[k][c] += t;
                }
                for row in a.iter_mut() {
                    let t = row[j];
                    row[k] += t;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / pivot;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = a[k][c];
                a[i][c] -= f * t;
            }
            for row in a.iter_mut() {
                let t = row[k];
                row[i] -= f * t;
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// The on-disk input format for a single invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryFile {
    pub lie_type: String,
    pub rank: usize,
    pub r: u64,
    pub weight: i64,
    pub pieces: Vec<Piece>,
}

impl SurgeryFile {
    pub fn lie_type(&self) -> Result<LieType> {
        LieType::from_parts(&self.lie_type, self.rank)
    }

    pub fn presentation(&self) -> SurgeryPresentation {
        SurgeryPresentation::new(self.pieces.clone(), self.weight)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameters(format!("malformed presentation: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        let d = SurgeryPresentation::lens(0, 0).linking_data();
        assert_eq!((d.sigma_plus, d.sigma_minus, d.beta1), (0, 0, 1));
        let d = SurgeryPresentation::lens(3, 0).linking_data();
        assert_eq!((d.sigma_plus, d.sigma_minus, d.beta1), (1, 0, 0));
        let d = SurgeryPresentation::hopf(0, 0, 0).linking_data();
        assert_eq!((d.sigma_plus, d.sigma_minus, d.beta1), (1, 1, 0));
        // det [[2,1],[1,3]] = 5 > 0 with positive trace
        let d = SurgeryPresentation::hopf(2, 3, 0).linking_data();
        assert_eq!((d.sigma_plus, d.sigma_minus), (2, 0));
        // det [[1,1],[1,1]] = 0
        let d = SurgeryPresentation::hopf(1, 1, 0).linking_data();
        assert_eq!((d.sigma_plus, d.sigma_minus, d.beta1), (1, 0, 1));
    }

    #[test]
    fn congruence_matches_eigenvalue_signs() {
        // Oracle: signs of the leading principal minors do not apply with zero
        // pivots, so compare against the characteristic polynomial's sign changes.
        for f1 in -3..=3 {
            for f2 in -3..=3 {
                let d = SurgeryPresentation::hopf(f1, f2, 0).linking_data();
                let tr = (f1 + f2) as f64;
                let det = (f1 * f2 - 1) as f64;
                let disc = (tr * tr - 4.0 * det).sqrt();
                let eig = [(tr + disc) / 2.0, (tr - disc) / 2.0];
                let pos = eig.iter().filter(|&&x| x > 1e-9).count();
                let neg = eig.iter().filter(|&&x| x < -1e-9).count();
                assert_eq!((d.sigma_plus, d.sigma_minus), (pos, neg), "({f1}, {f2})");
            }
        }
    }

    #[test]
    fn evenness() {
        assert!(SurgeryPresentation::sphere(1).is_even());
        assert!(!SurgeryPresentation::sphere(0).is_even());
        assert!(SurgeryPresentation::lens(0, 0).is_even());
    }

    #[test]
    fn json_schema() {
        let text = r#"{"lie_type":"A","rank":1,"r":5,"weight":0,"pieces":[{"unknot":0},{"hopf":[2,3]}]}"#;
        let f = SurgeryFile::parse(text).unwrap();
        assert_eq!(f.lie_type().unwrap(), LieType::a(1));
        assert_eq!(f.presentation().pieces, vec![Piece::Unknot(0), Piece::Hopf([2, 3])]);
        let err = SurgeryFile::parse(r#"{"lie_type":"A","rank":1,"r":5,"weight":0,"pieces":[{"knot":0}]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 1 column"), "{err}");
    }
}
