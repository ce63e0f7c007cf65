//! The coefficient matrix of the N binary forms, its determinant, and the
//! conjectured lower bound.
//!
//! Row `i` of the matrix holds the coefficients of `p_i`, the product over
//! `j != i` of the form the pair `{i, j}` contributes to point `i`. The bound is
//! the product over unordered pairs of `lambda^2 + |delta_z|^2` (equivalently
//! `2 lambda r`). Their quotient, the *ratio*, is invariant under translation,
//! scaling, relabeling, per-pair phase and per-pair orientation; the
//! conjecture asserts it is at least 1.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::binary_forms::BinaryForm;
use crate::error::Result;
use crate::geometry::{pair_table, Configuration, OrientationPolicy, PairData};
pub use crate::linalg::{log_determinant, LogDet, SquareMatrix};

pub const DEFAULT_INDEPENDENCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtiyahEvaluation {
    pub n: usize,
    pub log_abs_det: f64,
    pub det_phase: Complex64,
    pub log_rhs: f64,
    pub ratio: f64,
    pub independent: bool,
    pub orientation: OrientationPolicy,
}

/// Assemble the matrix from a pair table (in any order). Each pair contributes
/// `form_fwd` to its start row and `form_bwd` to its end row.
pub fn matrix_from_pairs(n: usize, pairs: &[PairData]) -> SquareMatrix {
    let mut rows = vec![BinaryForm::one(); n];
    for p in pairs {
        rows[p.start()].mul_linear(&p.form_fwd);
        rows[p.end()].mul_linear(&p.form_bwd);
    }
    SquareMatrix::from_rows(rows.into_iter().map(BinaryForm::into_coeffs).collect())
}

pub fn build_matrix(c: &Configuration, policy: &OrientationPolicy) -> Result<SquareMatrix> {
    Ok(matrix_from_pairs(c.len(), &pair_table(c, policy)?))
}

/// `sum over pairs of ln(lambda^2 + |delta_z|^2)`.
pub fn bound_log_from_pairs(pairs: &[PairData]) -> f64 {
    pairs.iter().map(|p| p.bound_factor().ln()).sum()
}

pub fn rhs_log_bound(c: &Configuration, policy: &OrientationPolicy) -> Result<f64> {
    Ok(bound_log_from_pairs(&pair_table(c, policy)?))
}

/// The same bound through `sum of ln(2 lambda r)`.
pub fn rhs_log_bound_via_distances(c: &Configuration, policy: &OrientationPolicy) -> Result<f64> {
    Ok(pair_table(c, policy)?
        .iter()
        .map(|p| (2.0 * p.lambda * p.r).ln())
        .sum())
}

/// Evaluate an already assembled pair table without gauge fixing.
pub fn evaluate_pairs(
    n: usize,
    pairs: &[PairData],
    orientation: OrientationPolicy,
    tol: f64,
) -> AtiyahEvaluation {
    let det = log_determinant(&matrix_from_pairs(n, pairs));
    let log_rhs = bound_log_from_pairs(pairs);
    let ratio = (det.log_abs - log_rhs).exp();
    AtiyahEvaluation {
        n,
        log_abs_det: det.log_abs,
        det_phase: det.phase,
        log_rhs,
        ratio,
        independent: ratio > tol,
        orientation,
    }
}

/// Gauge-fix `c` (first point at the origin, unit diameter) and evaluate.
///
/// `log_abs_det` and `log_rhs` refer to the gauge-fixed configuration; only
/// the ratio is gauge independent.
pub fn evaluate(c: &Configuration, policy: &OrientationPolicy, tol: f64) -> Result<AtiyahEvaluation> {
    let g = c.gauge_fixed()?;
    let pairs = pair_table(&g, policy)?;
    Ok(evaluate_pairs(g.len(), &pairs, policy.clone(), tol))
}

pub fn ratio(c: &Configuration) -> Result<f64> {
    Ok(evaluate(c, &OrientationPolicy::Canonical, DEFAULT_INDEPENDENCE_TOL)?.ratio)
}
