//! Homogeneous polynomials in two variables.
//!
//! Coefficients are stored x-descending: index `k` holds the coefficient of
//! `x^{d-k} y^k`, so after setting `x = 1` index `k` is the coefficient of `y^k`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// The form `u x + v y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearForm {
    pub u: Complex64,
    pub v: Complex64,
}

impl LinearForm {
    pub const fn new(u: Complex64, v: Complex64) -> Self {
        Self { u, v }
    }

    pub fn real(u: f64, v: f64) -> Self {
        Self::new(Complex64::new(u, 0.0), Complex64::new(v, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.u == Complex64::new(0.0, 0.0) && self.v == Complex64::new(0.0, 0.0)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.u * c, self.v * c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryForm {
    coeffs: Vec<Complex64>,
}

impl From<LinearForm> for BinaryForm {
    fn from(l: LinearForm) -> Self {
        Self {
            coeffs: vec![l.u, l.v],
        }
    }
}

impl BinaryForm {
    /// Form of degree `coeffs.len() - 1`. Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one coefficient");
        Self { coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    pub fn multiply(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (s, f) in self.coeffs.iter().enumerate() {
            for (t, g) in other.coeffs.iter().enumerate() {
                out[s + t] += f * g;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// In-place multiplication by a linear form, one pass over the coefficients.
    pub fn mul_linear(&mut self, l: &LinearForm) {
        let d = self.coeffs.len();
        self.coeffs.push(Complex64::new(0.0, 0.0));
        for k in (0..=d).rev() {
            let from_x = if k < d { self.coeffs[k] * l.u } else { Complex64::new(0.0, 0.0) };
            let from_y = if k > 0 { self.coeffs[k - 1] * l.v } else { Complex64::new(0.0, 0.0) };
            self.coeffs[k] = from_x + from_y;
        }
    }

    pub fn evaluate(&self, x: Complex64, y: Complex64) -> Complex64 {
        let d = self.degree() as i32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * x.powi(d - k as i32) * y.powi(k as i32))
            .sum()
    }
}

/// Left fold of [`BinaryForm::multiply`]; the empty product is the constant 1.
pub fn product_of_linear_forms(forms: &[LinearForm]) -> BinaryForm {
    let mut acc = BinaryForm::one();
    for l in forms {
        acc.mul_linear(l);
    }
    acc
}

pub fn multiply(f: &BinaryForm, g: &BinaryForm) -> BinaryForm {
    f.multiply(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bf(v: &[(f64, f64)]) -> BinaryForm {
        BinaryForm::new(v.iter().map(|&(r, i)| c(r, i)).collect())
    }

    #[test]
    fn multiply_examples() {
        let p = bf(&[(1., 0.), (1., 0.)]).multiply(&bf(&[(1., 0.), (-1., 0.)]));
        assert_eq!(p, bf(&[(1., 0.), (0., 0.), (-1., 0.)]));
        let p = bf(&[(1., 0.), (0., 0.)]).multiply(&bf(&[(0., 0.), (1., 0.)]));
        assert_eq!(p, bf(&[(0., 0.), (1., 0.), (0., 0.)]));
        // (2x - 2i y)(-2i x + 2y): the xy terms 2*2 and (-2i)(-2i) cancel
        let p = bf(&[(2., 0.), (0., -2.)]).multiply(&bf(&[(0., -2.), (2., 0.)]));
        assert_eq!(p, bf(&[(0., -4.), (0., 0.), (0., -4.)]));
        // evaluation oracle at x = y = 1: (2 - 2i)^2 = -8i
        let v = p.evaluate(c(1., 0.), c(1., 0.));
        assert_eq!(v, c(0., -8.));
    }

    #[test]
    fn product_examples() {
        let p = product_of_linear_forms(&[
            LinearForm::real(1., 0.),
            LinearForm::real(0., 1.),
            LinearForm::real(1., 1.),
        ]);
        assert_eq!(p, bf(&[(0., 0.), (1., 0.), (1., 0.), (0., 0.)]));
        let p = product_of_linear_forms(&[LinearForm::real(-1., 1.), LinearForm::real(1., 1.)]);
        assert_eq!(p, bf(&[(-1., 0.), (0., 0.), (1., 0.)]));
        assert_eq!(product_of_linear_forms(&[]), BinaryForm::one());
    }

    #[test]
    fn mul_linear_matches_multiply() {
        let f = bf(&[(1., 2.), (-3., 0.5), (0.25, -1.)]);
        let l = LinearForm::new(c(0.5, -1.), c(2., 3.));
        let mut g = f.clone();
        g.mul_linear(&l);
        assert_eq!(g, f.multiply(&BinaryForm::from(l)));
    }

    #[test]
    fn dehomogenized_index_is_y_power() {
        // x^2 y + 3 x y^2 at x = 1 is y + 3 y^2
        let f = bf(&[(0., 0.), (1., 0.), (3., 0.), (0., 0.)]);
        let y = c(0.7, -0.2);
        let v = f.evaluate(c(1., 0.), y);
        assert!((v - (y + 3.0 * y * y)).norm() < 1e-15);
    }
}
