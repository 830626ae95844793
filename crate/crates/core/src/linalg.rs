//! Exact Gaussian elimination over [`Scalar`].

use num::{One, Zero};

use crate::scalar::Scalar;

/// Reduced row echelon form: nonzero rows only, pivots strictly ascending,
/// pivot entries 1, zeros above and below every pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rref(rows: &[Vec<Scalar>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..ncols {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

/// Determinant by fraction-exact elimination. The empty matrix has
/// determinant 1.
pub fn determinant(square: &[Vec<Scalar>]) -> Scalar {
    let n = square.len();
    let mut m = square.to_vec();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    det
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let e = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn transpose(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Σ coeffs[i] * rows[i]`.
pub fn combine(coeffs: &[Scalar], rows: &[Vec<Scalar>], ncols: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); ncols];
    for (c, row) in coeffs.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += c * x;
        }
    }
    out
}
