//! Invariance checks for the ratio of a single configuration.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::atiyah_core::{evaluate, evaluate_pairs};
use crate::error::Result;
use crate::generators::{random_permutation, seeded_rng};
use crate::geometry::{pair_table, Configuration, OrientationPolicy};

pub const INVARIANCE_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Translation,
    Scaling,
    Relabeling,
    PairPhase,
    OrientationFlip,
    AxisRotation,
}

impl Transform {
    pub const ALL: [Transform; 6] = [
        Self::Translation,
        Self::Scaling,
        Self::Relabeling,
        Self::PairPhase,
        Self::OrientationFlip,
        Self::AxisRotation,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceCheck {
    pub transform: Transform,
    /// Trials actually run; orientation flips are skipped when every pair is
    /// vertical (the flipped direction would be the south pole).
    pub trials: usize,
    pub max_rel_delta: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub n: usize,
    pub base_ratio: f64,
    pub checks: Vec<InvarianceCheck>,
}

impl InvarianceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_rel_delta(&self) -> f64 {
        self.checks.iter().map(|c| c.max_rel_delta).fold(0.0, f64::max)
    }
}

fn rel(x: f64, base: f64) -> f64 {
    (x - base).abs() / base.abs()
}

/// Run `trials` random instances of each transform against the canonical
/// ratio of `c`.
pub fn invariance_suite(c: &Configuration, trials: usize, seed: u64) -> Result<InvarianceReport> {
    let tol = crate::atiyah_core::DEFAULT_INDEPENDENCE_TOL;
    let canonical = OrientationPolicy::Canonical;
    let base_ratio = evaluate(c, &canonical, tol)?.ratio;
    let gauge = c.gauge_fixed()?;
    let base_pairs = pair_table(&gauge, &canonical)?;
    let n = c.len();
    let mut rng = seeded_rng(seed);
    let mut checks = Vec::with_capacity(Transform::ALL.len());

    for transform in Transform::ALL {
        let mut max_delta: f64 = 0.0;
        let mut ran = 0;
        for _ in 0..trials {
            let ratio = match transform {
                Transform::Translation => {
                    let da = 10.0 * rng.sample::<f64, _>(StandardNormal);
                    let dz = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)) * 10.0;
                    evaluate(&c.translated(da, dz)?, &canonical, tol)?.ratio
                }
                Transform::Scaling => {
                    let s = 10f64.powf(rng.random_range(-3.0..6.0));
                    evaluate(&c.scaled(s)?, &canonical, tol)?.ratio
                }
                Transform::Relabeling => {
                    let perm = random_permutation(&mut rng, n);
                    evaluate(&c.permuted(&perm)?, &canonical, tol)?.ratio
                }
                Transform::PairPhase => {
                    let mut pairs = base_pairs.clone();
                    for p in &mut pairs {
                        let u = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
                        p.form_fwd = p.form_fwd.scale(u);
                        p.form_bwd = p.form_bwd.scale(u.conj());
                    }
                    evaluate_pairs(n, &pairs, canonical.clone(), tol).ratio
                }
                Transform::OrientationFlip => {
                    let flippable: Vec<usize> = base_pairs
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| p.delta_z.norm_sqr() > 0.0)
                        .map(|(k, _)| k)
                        .collect();
                    if flippable.is_empty() {
                        continue;
                    }
                    let k = flippable[rng.random_range(0..flippable.len())];
                    let mut flags: Vec<bool> = base_pairs.iter().map(|p| p.forward).collect();
                    flags[k] = !flags[k];
                    let policy = OrientationPolicy::explicit(n, flags)?;
                    evaluate(c, &policy, tol)?.ratio
                }
                Transform::AxisRotation => {
                    let theta = rng.random_range(0.0..std::f64::consts::TAU);
                    evaluate(&c.rotated_about_axis(theta)?, &canonical, tol)?.ratio
                }
            };
            ran += 1;
            max_delta = max_delta.max(rel(ratio, base_ratio));
        }
        checks.push(InvarianceCheck {
            transform,
            trials: ran,
            max_rel_delta: max_delta,
            passed: max_delta <= INVARIANCE_RTOL,
        });
    }
    Ok(InvarianceReport { n, base_ratio, checks })
}
