use crate::rings::LaurentPoly;

/// Square matrix over `Z[v, v^-1]`; column `j` is the image of `e_j`.
pub type LMatrix = Vec<Vec<LaurentPoly>>;

pub fn zero(n: usize) -> LMatrix {
    vec![vec![LaurentPoly::zero(); n]; n]
}

pub fn identity(n: usize) -> LMatrix {
    diagonal((0..n).map(|_| LaurentPoly::one()).collect())
}

pub fn diagonal(d: Vec<LaurentPoly>) -> LMatrix {
    let n = d.len();
    let mut m = zero(n);
    for (i, x) in d.into_iter().enumerate() {
        m[i][i] = x;
    }
    m
}

pub fn mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let n = a.len();
    let mut out = zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn sub(a: &LMatrix, b: &LMatrix) -> LMatrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

pub fn scale(a: &LMatrix, c: &LaurentPoly) -> LMatrix {
    a.iter().map(|row| row.iter().map(|x| x * c).collect()).collect()
}

pub fn neg(a: &LMatrix) -> LMatrix {
    a.iter().map(|row| row.iter().map(|x| -x).collect()).collect()
}

pub fn transpose(a: &LMatrix) -> LMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

pub fn pow(a: &LMatrix, k: u32) -> LMatrix {
    (0..k).fold(identity(a.len()), |acc, _| mul(&acc, a))
}

pub fn is_diagonal(a: &LMatrix) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}
