//! Cross-checks between the full coefficient matrix of a special
//! configuration and the closed forms for cases A and B.
//!
//! For each sampled a-list three things are checked:
//! the full determinant equals the dropped scalar times the closed form,
//! the full bound equals its split over L-, M- and cross pairs (which is the
//! reduced bound times `2^{C(n,2)}` after removing the dropped scalar),
//! and the ratio is at least 1 (case A) or the configuration is independent (case B).

use serde::{Deserialize, Serialize};

use crate::atiyah_core::{build_matrix, evaluate, log_determinant, rhs_log_bound};
use crate::closed_forms::{case_a_det, case_b_det, CaseParams};
use crate::error::Result;
use crate::generators::{random_ascending, seeded_rng, special_config};

pub const DET_RTOL: f64 = 1e-9;
pub const BOUND_RTOL: f64 = 1e-9;
pub const RATIO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialCase {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckEntry {
    pub case: SpecialCase,
    pub m: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub log_abs_det: f64,
    pub log_dropped_scalar: f64,
    pub closed_form: f64,
    pub det_rel_err: f64,
    pub det_ok: bool,
    pub bound_rel_err: f64,
    pub reduced_bound_rel_err: f64,
    pub bound_ok: bool,
    pub ratio: f64,
    pub independent: bool,
    pub ratio_ok: bool,
}

impl CrosscheckEntry {
    pub fn passed(&self) -> bool {
        self.det_ok && self.bound_ok && self.ratio_ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub m_max: usize,
    pub trials_per_m: usize,
    pub seed: u64,
    pub entries: Vec<CrosscheckEntry>,
}

impl CrosscheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CrosscheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn max_det_rel_err(&self) -> f64 {
        self.entries.iter().map(|e| e.det_rel_err).fold(0.0, f64::max)
    }

    pub fn max_bound_rel_err(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.bound_rel_err.max(e.reduced_bound_rel_err))
            .fold(0.0, f64::max)
    }
}

/// `|exp(x - y) - 1|` for two logarithms.
fn log_rel_err(x: f64, y: f64) -> f64 {
    (x - y).exp_m1().abs()
}

fn binom2(n: usize) -> f64 {
    (n * n.saturating_sub(1) / 2) as f64
}

/// Check one special configuration with points `(a_i, 0)` and `(0, b_j)`,
/// where `b` is `[-1]` (case A) or `[-1, 1]` (case B).
pub fn check_special(case: SpecialCase, a: &[f64]) -> Result<CrosscheckEntry> {
    let b: &[f64] = match case {
        SpecialCase::A => &[-1.0],
        SpecialCase::B => &[-1.0, 1.0],
    };
    let params = CaseParams::new(a.to_vec(), b.to_vec())?;
    let (c, policy) = special_config(a, b)?;
    let lambdas = params.lambdas_for(0);
    let closed_form = match case {
        SpecialCase::A => case_a_det(&lambdas)?,
        SpecialCase::B => case_b_det(&lambdas)?.det,
    };
    let log_abs_det = log_determinant(&build_matrix(&c, &policy)?).log_abs;
    let log_s = params.log_dropped_scalar();
    let det_rel_err = log_rel_err(log_abs_det, log_s + closed_form.ln());

    let log_bound = rhs_log_bound(&c, &policy)?;
    let bound_rel_err = log_rel_err(log_bound, params.log_bound_split());
    let cross: f64 = params
        .lambda_table
        .iter()
        .flat_map(|row| row.iter().zip(&params.b).map(|(l, bj)| (l * l + bj * bj).ln()))
        .sum();
    let reduced = binom2(params.n()) * std::f64::consts::LN_2 + cross;
    let reduced_bound_rel_err = log_rel_err(log_bound - log_s, reduced);

    let eval = evaluate(&c, &policy, crate::atiyah_core::DEFAULT_INDEPENDENCE_TOL)?;
    let ratio_ok = match case {
        SpecialCase::A => eval.ratio >= 1.0 - RATIO_TOL,
        SpecialCase::B => eval.independent,
    };
    Ok(CrosscheckEntry {
        case,
        m: a.len(),
        a: a.to_vec(),
        b: b.to_vec(),
        log_abs_det,
        log_dropped_scalar: log_s,
        closed_form,
        det_rel_err,
        det_ok: det_rel_err <= DET_RTOL,
        bound_rel_err,
        reduced_bound_rel_err,
        bound_ok: bound_rel_err <= BOUND_RTOL && reduced_bound_rel_err <= BOUND_RTOL,
        ratio: eval.ratio,
        independent: eval.independent,
        ratio_ok,
    })
}

/// Random a-lists (uniform on `[-2, 2)`, sorted) for `m = 1..=m_max`, both cases.
pub fn crosscheck_special_cases(m_max: usize, trials_per_m: usize, seed: u64) -> Result<CrosscheckReport> {
    let mut rng = seeded_rng(seed);
    let mut entries = Vec::with_capacity(2 * m_max * trials_per_m);
    for m in 1..=m_max {
        for _ in 0..trials_per_m {
            let a = random_ascending(&mut rng, m, -2.0, 2.0);
            entries.push(check_special(SpecialCase::A, &a)?);
            entries.push(check_special(SpecialCase::B, &a)?);
        }
    }
    Ok(CrosscheckReport {
        m_max,
        trials_per_m,
        seed,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case_a() {
        let e = check_special(SpecialCase::A, &[0.0]).unwrap();
        assert_eq!(e.log_dropped_scalar, 0.0);
        assert_eq!(e.closed_form, 2.0);
        assert!((e.log_abs_det.exp() - 2.0).abs() < 1e-14);
        assert!(e.passed());
    }

    #[test]
    fn smallest_case_b() {
        let e = check_special(SpecialCase::B, &[0.0]).unwrap();
        assert!((e.log_dropped_scalar.exp() - 4.0).abs() < 1e-14);
        assert_eq!(e.closed_form, 8.0);
        assert!((e.log_abs_det.exp() - 32.0).abs() < 1e-12);
        assert!(e.passed());
    }

    #[test]
    fn sweep_small() {
        let r = crosscheck_special_cases(5, 5, 1).unwrap();
        assert_eq!(r.entries.len(), 50);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
