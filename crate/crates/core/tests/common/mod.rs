#![allow(dead_code)]

use atiyah_lab::closed_forms::elementary_symmetric;

/// Determinant by Gaussian elimination with partial pivoting, kept separate
/// from the library's complex LU so the oracles do not share code with it.
pub fn det_real(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))
            .unwrap();
        if m[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k];
        let pivot = m[k].clone();
        for row in &mut m[k + 1..] {
            let f = row[k] / pivot[k];
            for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= f * p;
            }
        }
    }
    det
}

/// Case A: rows `y^{i-1}(1 - l_i y)` then `prod (y + l_i)`, columns by power of y.
pub fn case_a_proof_matrix(lambdas: &[f64]) -> Vec<Vec<f64>> {
    let m = lambdas.len();
    let e = elementary_symmetric(lambdas);
    let mut rows = vec![vec![0.0; m + 1]; m + 1];
    for (i, l) in lambdas.iter().enumerate() {
        rows[i][i] = 1.0;
        rows[i][i + 1] = -l;
    }
    for c in 0..=m {
        rows[m][c] = e[m - c];
    }
    rows
}

/// Case B: rows `y^{i-1}(1 - l_i^2 y^2)`, then `(y+1) prod (y + l_i)` and
/// `(y-1) prod (y - l_i)`.
pub fn case_b_proof_matrix(lambdas: &[f64]) -> Vec<Vec<f64>> {
    let m = lambdas.len();
    let mut with_one = vec![1.0];
    with_one.extend_from_slice(lambdas);
    let et = elementary_symmetric(&with_one);
    let mut rows = vec![vec![0.0; m + 2]; m + 2];
    for (i, l) in lambdas.iter().enumerate() {
        rows[i][i] = 1.0;
        rows[i][i + 2] = -l * l;
    }
    for (c, k) in (0..=m + 1).rev().enumerate() {
        rows[m][c] = et[k];
        rows[m + 1][c] = if k.is_multiple_of(2) { et[k] } else { -et[k] };
    }
    rows
}

pub fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs()
}

/// `ln prod_{i<r} (2 (a_r - a_i))^2`.
pub fn log_pair_scalar(a: &[f64]) -> f64 {
    let mut s = 0.0;
    for r in 0..a.len() {
        for i in 0..r {
            s += 2.0 * (2.0 * (a[r] - a[i])).ln();
        }
    }
    s
}
