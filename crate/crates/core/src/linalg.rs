//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::rational::{one, zero, Rational};

pub(crate) type Matrix = Vec<Vec<Rational>>;

pub(crate) fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    let k = m.first().map_or(0, Vec::len);
    (0..k).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub(crate) fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one() } else { zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub(crate) fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Sylvester's criterion on leading principal minors, via exact elimination.
pub(crate) fn is_positive_definite(m: &Matrix) -> bool {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        if a[k][k] <= zero() {
            return false;
        }
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    true
}
