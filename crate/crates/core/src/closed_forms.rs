//! Elementary symmetric functions and the closed-form determinants of the two
//! special configurations.
//!
//! Case A: `m` points on a line `L` plus one point off it on a perpendicular
//! line `M` through the origin. Case B: `m` points on `L` plus two points on
//! `M` placed symmetrically about `L`. In both cases the off-line points are
//! normalised to `b = -1` (and `+1`), and the determinant reduces to a
//! polynomial in `lambda_i = a_i + sqrt(1 + a_i^2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack used when comparing two sides that may be equal in exact
/// arithmetic.
pub const INEQUALITY_RTOL: f64 = 1e-12;

/// `E_0..E_m` of `vals` via the ascending recurrence `E_k += x E_{k-1}`.
pub fn elementary_symmetric(vals: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; vals.len() + 1];
    e[0] = 1.0;
    for (t, &x) in vals.iter().enumerate() {
        for k in (1..=t + 1).rev() {
            e[k] += x * e[k - 1];
        }
    }
    e
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricTables {
    pub lambdas: Vec<f64>,
    /// Elementary symmetric functions of the lambdas.
    pub e: Vec<f64>,
    /// Elementary symmetric functions of `1, lambda_1, .., lambda_m`.
    pub e_tilde: Vec<f64>,
    /// Elementary symmetric functions of the squared lambdas.
    pub e_sq: Vec<f64>,
}

impl SymmetricTables {
    pub fn new(lambdas: &[f64]) -> Self {
        let mut with_one = Vec::with_capacity(lambdas.len() + 1);
        with_one.push(1.0);
        with_one.extend_from_slice(lambdas);
        let squares: Vec<f64> = lambdas.iter().map(|l| l * l).collect();
        Self {
            lambdas: lambdas.to_vec(),
            e: elementary_symmetric(lambdas),
            e_tilde: elementary_symmetric(&with_one),
            e_sq: elementary_symmetric(&squares),
        }
    }
}

/// Lambdas must be positive and non-decreasing.
pub fn check_lambdas(lambdas: &[f64]) -> Result<()> {
    if let Some(k) = lambdas.iter().position(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(Error::InvalidParameter(format!(
            "lambda[{k}] = {} is not positive",
            lambdas[k]
        )));
    }
    check_ascending(lambdas, false)
}

/// Err with the first offending position; `strict` forbids ties.
pub fn check_ascending(vals: &[f64], strict: bool) -> Result<()> {
    match vals
        .windows(2)
        .position(|w| if strict { w[1] <= w[0] } else { w[1] < w[0] })
    {
        Some(k) => Err(Error::NonAscendingInput(k + 1)),
        None => Ok(()),
    }
}

/// `lambda_i = a_i + sqrt(a_i^2 + b^2)`.
pub fn case_lambda(a: f64, b: f64) -> f64 {
    crate::geometry::lift_lambda(a, num_complex::Complex64::new(b, 0.0))
}

/// Case A determinant `1 + lambda_m E_1 + lambda_{m-1} lambda_m E_2 + ...`:
/// term `k` multiplies `E_k` by the product of the `k` largest lambdas.
pub fn case_a_det(lambdas: &[f64]) -> Result<f64> {
    check_lambdas(lambdas)?;
    let e = elementary_symmetric(lambdas);
    Ok(top_products(lambdas)
        .iter()
        .zip(&e)
        .map(|(t, ek)| t * ek)
        .sum())
}

/// `[1, l_m, l_{m-1} l_m, ..., l_1 .. l_m]`.
fn top_products(lambdas: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(lambdas.len() + 1);
    out.push(1.0);
    let mut acc = 1.0;
    for l in lambdas.iter().rev() {
        acc *= l;
        out.push(acc);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseBDet {
    pub p: f64,
    pub q: f64,
    pub det: f64,
}

/// Case B determinant `2 p q` with
/// `p = 1 + l_m^2 Ẽ_2 + l_{m-2}^2 l_m^2 Ẽ_4 + ...` and
/// `q = Ẽ_1 + l_{m-1}^2 Ẽ_3 + l_{m-3}^2 l_{m-1}^2 Ẽ_5 + ...`,
/// each series stopping once the next lambda index would drop below 1.
pub fn case_b_det(lambdas: &[f64]) -> Result<CaseBDet> {
    check_lambdas(lambdas)?;
    let et = SymmetricTables::new(lambdas).e_tilde;
    let p = alternating_series(lambdas, &et, 0);
    let q = alternating_series(lambdas, &et, 1);
    Ok(CaseBDet { p, q, det: 2.0 * p * q })
}

/// `sum_s Ẽ_{2s+parity} * prod_{t<s} lambda_{m-parity-2t}^2` (1-based lambda
/// indices), truncated when the index falls below 1.
fn alternating_series(lambdas: &[f64], et: &[f64], parity: usize) -> f64 {
    let m = lambdas.len();
    let mut sum = 0.0;
    let mut weight = 1.0;
    let mut s = 0;
    loop {
        let k = 2 * s + parity;
        if k >= et.len() {
            break;
        }
        sum += weight * et[k];
        // next factor: lambda_{m - parity - 2s}
        let Some(idx) = m.checked_sub(parity + 2 * s).filter(|&i| i >= 1) else {
            break;
        };
        let l = lambdas[idx - 1];
        weight *= l * l;
        s += 1;
    }
    sum
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseAInequality {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    /// `termwise[k]`: (product of the k largest lambdas) * E_k >= E^(2)_k.
    pub termwise: Vec<bool>,
}

fn geq(lhs: f64, rhs: f64) -> bool {
    lhs >= rhs - INEQUALITY_RTOL * rhs.abs()
}

pub fn case_a_inequality(lambdas: &[f64]) -> Result<CaseAInequality> {
    let lhs = case_a_det(lambdas)?;
    let rhs: f64 = lambdas.iter().map(|l| 1.0 + l * l).product();
    let t = SymmetricTables::new(lambdas);
    let termwise = top_products(lambdas)
        .iter()
        .zip(t.e.iter().zip(&t.e_sq))
        .map(|(top, (ek, e2k))| geq(top * ek, *e2k))
        .collect();
    Ok(CaseAInequality {
        lhs,
        rhs,
        holds: geq(lhs, rhs),
        termwise,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseBProbe {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

impl CaseBProbe {
    pub fn holds(&self) -> bool {
        geq(self.lhs, self.rhs)
    }
}

/// `p q` against `prod (1 + lambda_i^2)^2`. The inequality is open in general,
/// so nothing is asserted here.
pub fn case_b_inequality_probe(lambdas: &[f64]) -> Result<CaseBProbe> {
    let b = case_b_det(lambdas)?;
    let lhs = b.p * b.q;
    let rhs = lambdas.iter().map(|l| (1.0 + l * l).powi(2)).product::<f64>();
    Ok(CaseBProbe {
        lhs,
        rhs,
        slack: lhs / rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecializedIdentity {
    /// `sum_k C(m, 2k+1) (lam^{4k+3} - lam^{4k+2})`.
    pub sum_lhs: f64,
    /// `(lam - 1) [(1 + lam^2)^m - (1 - lam^2)^m] / 2`.
    pub closed_rhs: f64,
    /// `[(1+lam^2)^m + S] [(1+lam^2)^m - S']` where `S'` is the sum with
    /// exponents lowered by one.
    pub product_lhs: f64,
    /// `(1 + lam^2)^{2m}`.
    pub product_rhs: f64,
    pub product_holds: bool,
}

impl SpecializedIdentity {
    pub fn relative_residual(&self) -> f64 {
        let scale = self.sum_lhs.abs().max(self.closed_rhs.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.sum_lhs - self.closed_rhs).abs() / scale
        }
    }
}

pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// The all-equal specialisation of the case B inequality and the binomial
/// identity behind it.
pub fn specialized_identity(m: u32, lam: f64) -> Result<SpecializedIdentity> {
    if m < 1 || !(lam > 0.0 && lam.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "specialized identity needs m >= 1 and lam > 0, got m={m}, lam={lam}"
        )));
    }
    let mut sum_lhs = 0.0;
    let mut sum_lowered = 0.0;
    for k in 0..=(m.saturating_sub(1) / 2) {
        let c = binomial(m, 2 * k + 1);
        let base = lam.powi((4 * k + 1) as i32);
        // lam^{4k+2}(lam - 1) and lam^{4k+1}(lam - 1), keeping the (lam - 1) factor exact
        sum_lhs += c * base * lam * (lam - 1.0);
        sum_lowered += c * base * (lam - 1.0);
    }
    let t = (1.0 + lam * lam).powi(m as i32);
    let u = (1.0 - lam * lam).powi(m as i32);
    let closed_rhs = 0.5 * (lam - 1.0) * (t - u);
    let product_lhs = (t + sum_lhs) * (t - sum_lowered);
    let product_rhs = t * t;
    Ok(SpecializedIdentity {
        sum_lhs,
        closed_rhs,
        product_lhs,
        product_rhs,
        product_holds: geq(product_lhs, product_rhs),
    })
}

/// Positions `a` on `L` and `b` on `M`, with the derived lambda table
/// `lambda_ij = a_i + sqrt(a_i^2 + b_j^2)`. Not the pairwise lambda of
/// [`crate::geometry::PairData`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseParams {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub lambda_table: Vec<Vec<f64>>,
}

impl CaseParams {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidParameter("need at least one point on L".into()));
        }
        if a.iter().chain(&b).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("non-finite position".into()));
        }
        check_ascending(&a, true)?;
        check_ascending(&b, true)?;
        if b.contains(&0.0) {
            return Err(Error::InvalidParameter("points on M must lie off L (b != 0)".into()));
        }
        let lambda_table = a
            .iter()
            .map(|&ai| b.iter().map(|&bj| case_lambda(ai, bj)).collect())
            .collect();
        Ok(Self { a, b, lambda_table })
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Column `j` of the lambda table.
    pub fn lambdas_for(&self, j: usize) -> Vec<f64> {
        self.lambda_table.iter().map(|row| row[j]).collect()
    }

    /// `ln S`, the scalars dropped when writing the special-case polynomials
    /// up to scalar factors: `prod_{i<r} (2(a_r - a_i))^2 prod_{j<s} (b_s - b_j)^2`.
    pub fn log_dropped_scalar(&self) -> f64 {
        let pairs_sum = |v: &[f64], f: &dyn Fn(f64) -> f64| -> f64 {
            (0..v.len())
                .flat_map(|i| (i + 1..v.len()).map(move |r| (i, r)))
                .map(|(i, r)| 2.0 * f(v[r] - v[i]).ln())
                .sum()
        };
        pairs_sum(&self.a, &|d| 2.0 * d) + pairs_sum(&self.b, &|d| d)
    }

    /// `ln` of the full bound split as line-L pairs, line-M pairs and cross
    /// pairs: `prod_L (2 da)^2 * prod_M 2 (db)^2 * prod_{i,j} (lambda_ij^2 + b_j^2)`.
    pub fn log_bound_split(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.m() {
            for r in i + 1..self.m() {
                s += 2.0 * (2.0 * (self.a[r] - self.a[i])).ln();
            }
        }
        for j in 0..self.n() {
            for t in j + 1..self.n() {
                let d = self.b[t] - self.b[j];
                s += (2.0 * d * d).ln();
            }
        }
        for (row, _) in self.lambda_table.iter().zip(&self.a) {
            for (l, bj) in row.iter().zip(&self.b) {
                s += (l * l + bj * bj).ln();
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(&[1., 2., 3.]), vec![1., 6., 11., 6.]);
        assert_eq!(elementary_symmetric(&[2.5]), vec![1., 2.5]);
        assert_eq!(elementary_symmetric(&[]), vec![1.]);
    }

    #[test]
    fn elementary_symmetric_vs_subsets() {
        let vals = [0.3, 1.7, 2.2, 0.05, 4.1, 0.9];
        let mut brute = [0.0; 7];
        for mask in 0u32..(1 << vals.len()) {
            let prod: f64 = (0..vals.len()).filter(|b| mask >> b & 1 == 1).map(|b| vals[b]).product();
            brute[mask.count_ones() as usize] += prod;
        }
        for (x, y) in elementary_symmetric(&vals).iter().zip(&brute) {
            assert!(rel(*x, *y) < 1e-12);
        }
    }

    #[test]
    fn case_a_examples() {
        assert_eq!(case_a_det(&[1.0]).unwrap(), 2.0);
        // det [[1,-1,0],[0,1,-2],[2,3,1]] = 11
        assert_eq!(case_a_det(&[1.0, 2.0]).unwrap(), 11.0);
        assert_eq!(case_a_det(&[2.0, 1.0]), Err(Error::NonAscendingInput(1)));
        assert!(case_a_det(&[0.0, 1.0]).is_err());
    }

    #[test]
    fn case_b_examples() {
        // det [[1,0,-4],[2,3,1],[2,-3,1]] = 54
        let b = case_b_det(&[2.0]).unwrap();
        assert_eq!((b.p, b.q, b.det), (9.0, 3.0, 54.0));
        let b = case_b_det(&[1.0]).unwrap();
        assert_eq!((b.p, b.q, b.det), (2.0, 2.0, 8.0));
        assert_eq!(case_b_det(&[3.0, 1.0]), Err(Error::NonAscendingInput(1)));
    }

    #[test]
    fn case_b_small_m_by_hand() {
        // m = 2: p = 1 + l2^2 Ẽ2, q = Ẽ1 + l1^2 Ẽ3
        let l = [0.5, 3.0];
        let et = elementary_symmetric(&[1.0, 0.5, 3.0]);
        let b = case_b_det(&l).unwrap();
        assert!(rel(b.p, 1.0 + 9.0 * et[2]) < 1e-15);
        assert!(rel(b.q, et[1] + 0.25 * et[3]) < 1e-15);
    }

    #[test]
    fn case_a_inequality_examples() {
        let r = case_a_inequality(&[1.0]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (2.0, 2.0, true));
        let r = case_a_inequality(&[1.0, 2.0]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (11.0, 10.0, true));
        assert!(r.termwise.iter().all(|t| *t));
        assert_eq!(r.termwise.len(), 3);
    }

    #[test]
    fn case_b_probe_examples() {
        let p = case_b_inequality_probe(&[1.0]).unwrap();
        assert_eq!((p.lhs, p.rhs, p.slack), (4.0, 4.0, 1.0));
        let p = case_b_inequality_probe(&[2.0]).unwrap();
        assert_eq!((p.lhs, p.rhs), (27.0, 25.0));
        assert!(rel(p.slack, 1.08) < 1e-15);
    }

    #[test]
    fn case_b_probe_m1_closed_slack() {
        for k in 1..=400 {
            let l = k as f64 * 0.01;
            let p = case_b_inequality_probe(&[l]).unwrap();
            let expected = l * (l - 1.0).powi(2) / (1.0 + l * l).powi(2);
            assert!((p.slack - 1.0 - expected).abs() < 1e-13, "lambda {l}");
        }
    }

    #[test]
    fn specialized_examples() {
        let s = specialized_identity(2, 2.0).unwrap();
        assert_eq!((s.sum_lhs, s.closed_rhs), (8.0, 8.0));
        for m in 1..6 {
            let s = specialized_identity(m, 1.0).unwrap();
            assert_eq!((s.sum_lhs, s.closed_rhs), (0.0, 0.0));
            assert!(s.product_holds);
        }
        assert!(specialized_identity(0, 1.0).is_err());
        assert!(specialized_identity(1, -1.0).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(20, 10), 184756.0);
        assert_eq!(binomial(3, 4), 0.0);
    }

    #[test]
    fn ties_are_accepted() {
        assert!(case_a_det(&[1.5, 1.5]).is_ok());
        assert!(case_b_det(&[1.5, 1.5, 2.0]).is_ok());
    }

    #[test]
    fn case_params() {
        let p = CaseParams::new(vec![0.0, 1.0], vec![-1.0]).unwrap();
        assert_eq!(p.lambdas_for(0)[0], 1.0);
        assert!(rel(p.lambdas_for(0)[1], 1.0 + 2f64.sqrt()) < 1e-15);
        assert!(CaseParams::new(vec![1.0, 0.0], vec![-1.0]).is_err());
        assert!(CaseParams::new(vec![0.0], vec![0.0]).is_err());
        // S = (2*1)^2 for the single L pair
        assert!(rel(p.log_dropped_scalar(), 4f64.ln()) < 1e-15);
    }
}
