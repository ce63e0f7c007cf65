//! Counterexample search: derivative-free descent on `ln(ratio)`.
//!
//! The first point is pinned at the origin and the remaining `3(N-1)`
//! coordinates are free. Every candidate is rescaled to unit diameter before
//! the coincidence guard is applied, so the guard is scale free.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::nelder_mead::NelderMead;
use crate::atiyah_core::evaluate;
use crate::error::{Error, Result};
use crate::generators::seeded_rng;
use crate::geometry::{Configuration, OrientationPolicy, Point};

/// Minimum pairwise distance, after unit-diameter rescaling, below which a
/// candidate is rejected.
pub const COINCIDENCE_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizeResult {
    pub start: Configuration,
    pub start_ratio: f64,
    #[serde(rename = "final")]
    pub final_config: Configuration,
    pub final_ratio: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best ratio before the first iteration and after each one.
    pub trace: Vec<f64>,
}

fn to_coords(c: &Configuration) -> Vec<f64> {
    let origin = c.points()[0];
    c.points()[1..]
        .iter()
        .flat_map(|p| [p.a - origin.a, p.z.re - origin.z.re, p.z.im - origin.z.im])
        .collect()
}

fn from_coords(x: &[f64]) -> Option<Configuration> {
    let points = std::iter::once(Point::new(0.0, 0.0, 0.0))
        .chain(x.chunks_exact(3).map(|p| Point::new(p[0], p[1], p[2])))
        .collect();
    let c = Configuration::new(points).ok()?;
    let g = c.gauge_fixed().ok()?;
    (g.min_distance() >= COINCIDENCE_GUARD).then_some(g)
}

fn log_ratio(c: &Configuration) -> f64 {
    match evaluate(c, &OrientationPolicy::Canonical, 0.0) {
        Ok(e) => e.log_abs_det - e.log_rhs,
        Err(_) => f64::INFINITY,
    }
}

fn objective(x: &[f64]) -> f64 {
    from_coords(x).map_or(f64::INFINITY, |c| log_ratio(&c))
}

fn check_start(c0: &Configuration) -> Result<Configuration> {
    let g = c0.gauge_fixed()?;
    if g.min_distance() < COINCIDENCE_GUARD {
        let (i, j) = g.closest_pair();
        return Err(Error::DegenerateStart(i, j));
    }
    Ok(g)
}

/// Simplex descent from `c0` for at most `budget` iterations, stopping early
/// once the simplex is smaller than `tol`.
pub fn minimize_ratio(c0: &Configuration, budget: usize, tol: f64) -> Result<MinimizeResult> {
    let start = check_start(c0)?;
    let x0 = to_coords(&start);
    let nm = NelderMead {
        max_iter: budget,
        xtol: tol,
        ..NelderMead::default()
    };
    let out = nm.minimize(objective, &x0);
    let final_config = if out.iterations == 0 {
        start.clone()
    } else {
        from_coords(&out.x).expect("best vertex has a finite objective")
    };
    Ok(MinimizeResult {
        start_ratio: out.trace[0].exp(),
        start,
        final_ratio: out.fx.exp(),
        final_config,
        iterations: out.iterations,
        converged: out.converged,
        trace: out.trace.iter().map(|v| v.exp()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RestartReport {
    pub seed: u64,
    pub restarts: usize,
    pub perturbation: f64,
    pub runs: Vec<MinimizeResult>,
    pub best_run: usize,
    pub min_final_ratio: f64,
}

/// Gaussian jitter of standard deviation `sigma` on every coordinate of the
/// unit-diameter gauge of `c`; redrawn until the guard is respected.
pub fn perturb(c: &Configuration, sigma: f64, seed: u64) -> Result<Configuration> {
    let g = c.gauge_fixed()?;
    let mut rng = seeded_rng(seed);
    loop {
        let pts: Vec<Point> = g
            .points()
            .iter()
            .map(|p| {
                let d: [f64; 3] = std::array::from_fn(|_| sigma * rng.sample::<f64, _>(StandardNormal));
                Point::new(p.a + d[0], p.z.re + d[1], p.z.im + d[2])
            })
            .collect();
        if let Ok(c) = Configuration::new(pts) {
            if c.gauge_fixed().map(|g| g.min_distance() >= COINCIDENCE_GUARD).unwrap_or(false) {
                return Ok(c);
            }
        }
    }
}

/// `restarts` independent descents from perturbations of `c0`; run `k` uses
/// seed `seed + k`. Runs execute in parallel; the report is in run order.
pub fn minimize_with_restarts(
    c0: &Configuration,
    budget: usize,
    tol: f64,
    restarts: usize,
    perturbation: f64,
    seed: u64,
) -> Result<RestartReport> {
    check_start(c0)?;
    if restarts == 0 {
        return Err(Error::InvalidParameter("restarts must be at least 1".into()));
    }
    let runs = (0..restarts)
        .into_par_iter()
        .map(|k| {
            let start = perturb(c0, perturbation, seed.wrapping_add(k as u64))?;
            minimize_ratio(&start, budget, tol)
        })
        .collect::<Result<Vec<_>>>()?;
    let best_run = runs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.final_ratio.total_cmp(&b.1.final_ratio))
        .map(|(k, _)| k)
        .unwrap_or(0);
    Ok(RestartReport {
        seed,
        restarts,
        perturbation,
        min_final_ratio: runs[best_run].final_ratio,
        best_run,
        runs,
    })
}
