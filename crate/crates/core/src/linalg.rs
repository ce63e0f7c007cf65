//! Dense complex matrices and determinants in log-magnitude form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "row length must equal the number of rows");
            data.extend(r);
        }
        Self { n, data }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// `det = exp(log_abs) * phase`. A singular matrix has `log_abs = -inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogDet {
    pub log_abs: f64,
    pub phase: Complex64,
}

impl LogDet {
    pub fn is_singular(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    pub fn value(&self) -> Complex64 {
        self.phase * self.log_abs.exp()
    }
}

/// LU with partial pivoting; magnitudes are accumulated as a sum of logs so
/// that products of many large or small pivots neither overflow nor underflow.
pub fn log_determinant(m: &SquareMatrix) -> LogDet {
    let n = m.n;
    let mut a = m.data.clone();
    let mut log_abs = 0.0;
    let mut phase = Complex64::new(1.0, 0.0);

    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|i| (i, a[i * n + k].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pmax == 0.0 || !pmax.is_finite() {
            return LogDet {
                log_abs: f64::NEG_INFINITY,
                phase: Complex64::new(1.0, 0.0),
            };
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            phase = -phase;
        }
        let pivot = a[k * n + k];
        log_abs += pmax.ln();
        phase *= pivot / pmax;
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k + 1..n {
                let t = a[k * n + j];
                a[i * n + j] -= f * t;
            }
        }
    }
    // keep |phase| = 1 despite rounding drift
    LogDet {
        log_abs,
        phase: phase / phase.norm(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity() {
        let d = log_determinant(&SquareMatrix::identity(5));
        assert_eq!(d.log_abs, 0.0);
        assert_eq!(d.phase, c(1.0, 0.0));
    }

    #[test]
    fn diagonal() {
        let m = SquareMatrix::from_rows(vec![vec![c(2., 0.), c(0., 0.)], vec![c(0., 0.), c(0., 3.)]]);
        let d = log_determinant(&m);
        assert!((d.log_abs - 6f64.ln()).abs() < 1e-15);
        assert!((d.phase - c(0., 1.)).norm() < 1e-15);
    }

    #[test]
    fn two_by_two_pair_matrix() {
        // 2*2 - (-2i)(-2i) = 4 + 4 = 8
        let m = SquareMatrix::from_rows(vec![vec![c(2., 0.), c(0., -2.)], vec![c(0., -2.), c(2., 0.)]]);
        let d = log_determinant(&m);
        assert!((d.log_abs - 8f64.ln()).abs() < 1e-15);
        assert!((d.phase - c(1., 0.)).norm() < 1e-15);
    }

    #[test]
    fn singular_is_negative_infinity() {
        let m = SquareMatrix::from_real_rows(&[vec![1., 2.], vec![2., 4.]]);
        assert!(log_determinant(&m).is_singular());
        assert!(log_determinant(&SquareMatrix::zeros(3)).is_singular());
    }

    #[test]
    fn needs_pivoting() {
        // [[0,1],[1,0]] has det -1
        let m = SquareMatrix::from_real_rows(&[vec![0., 1.], vec![1., 0.]]);
        let d = log_determinant(&m);
        assert_eq!(d.log_abs, 0.0);
        assert!((d.phase - c(-1., 0.)).norm() < 1e-15);
    }

    #[test]
    fn cofactor_oracle_3x3() {
        let rows = vec![
            vec![c(1., 2.), c(-0.5, 0.), c(3., -1.)],
            vec![c(0., 1.), c(2., 2.), c(-1., 0.5)],
            vec![c(4., 0.), c(0.25, -3.), c(1., 1.)],
        ];
        let r = &rows;
        let expected = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
        let d = log_determinant(&SquareMatrix::from_rows(rows));
        assert!((d.value() - expected).norm() <= 1e-13 * expected.norm());
    }

    #[test]
    fn huge_entries_do_not_overflow() {
        let mut m = SquareMatrix::identity(40);
        for k in 0..40 {
            m[(k, k)] = c(1e300, 0.0);
        }
        let d = log_determinant(&m);
        assert!((d.log_abs - 40.0 * 1e300f64.ln()).abs() < 1e-9);
    }
}
