//! Seeded fuzz campaigns over generated configurations.
//!
//! Samples are evaluated independently and reduced in sample-index order, so
//! the report does not depend on whether evaluation ran in parallel.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atiyah_core::{evaluate, AtiyahEvaluation};
use crate::generators::GeneratorSpec;
use crate::geometry::{Configuration, OrientationPolicy};

/// Ratios below `1 - VIOLATION_TOL` are flagged against the conjectured bound.
pub const VIOLATION_TOL: f64 = 1e-9;

/// A self-contained reproducer: regenerate with `seed` or re-evaluate
/// `configuration` under `orientation`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub index: u64,
    pub seed: u64,
    pub n: usize,
    pub ratio: f64,
    pub configuration: Configuration,
    pub orientation: OrientationPolicy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub index: u64,
    pub seed: u64,
    pub n: usize,
    pub configuration: Configuration,
    pub orientation: OrientationPolicy,
    pub outcome: std::result::Result<AtiyahEvaluation, String>,
}

impl SampleRecord {
    fn finding(&self, ratio: f64) -> Finding {
        Finding {
            index: self.index,
            seed: self.seed,
            n: self.n,
            ratio,
            configuration: self.configuration.clone(),
            orientation: self.orientation.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub spec: GeneratorSpec,
    pub samples: u64,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub tol: f64,
    pub violation_tol: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub argmin: Option<Finding>,
    pub independence_failures: Vec<Finding>,
    pub violations: Vec<Finding>,
    pub errors: Vec<(u64, String)>,
    pub wall_time_secs: f64,
}

impl FuzzReport {
    /// The report with the timing field zeroed, for equality checks.
    pub fn without_timing(&self) -> Self {
        Self {
            wall_time_secs: 0.0,
            ..self.clone()
        }
    }

    pub fn is_clean(&self) -> bool {
        self.independence_failures.is_empty() && self.violations.is_empty() && self.errors.is_empty()
    }
}

pub fn evaluate_sample(spec: &GeneratorSpec, index: u64, tol: f64) -> SampleRecord {
    let (configuration, orientation) = spec.sample(index);
    let outcome = evaluate(&configuration, &orientation, tol).map_err(|e| e.to_string());
    SampleRecord {
        index,
        seed: spec.sample_seed(index),
        n: configuration.len(),
        configuration,
        orientation,
        outcome,
    }
}

pub fn fuzz_records(spec: &GeneratorSpec, samples: u64, tol: f64, parallel: bool) -> Vec<SampleRecord> {
    if parallel {
        (0..samples)
            .into_par_iter()
            .map(|k| evaluate_sample(spec, k, tol))
            .collect()
    } else {
        (0..samples).map(|k| evaluate_sample(spec, k, tol)).collect()
    }
}

/// Fold records (in index order) into a report.
pub fn summarize(spec: &GeneratorSpec, tol: f64, records: &[SampleRecord], wall_time_secs: f64) -> FuzzReport {
    let mut report = FuzzReport {
        spec: spec.clone(),
        samples: records.len() as u64,
        seed: spec.seed,
        n_min: spec.n_min,
        n_max: spec.n_max,
        tol,
        violation_tol: VIOLATION_TOL,
        min_ratio: f64::INFINITY,
        max_ratio: f64::NEG_INFINITY,
        argmin: None,
        independence_failures: Vec::new(),
        violations: Vec::new(),
        errors: Vec::new(),
        wall_time_secs,
    };
    for rec in records {
        let e = match &rec.outcome {
            Ok(e) => e,
            Err(msg) => {
                report.errors.push((rec.index, msg.clone()));
                continue;
            }
        };
        if e.ratio < report.min_ratio {
            report.min_ratio = e.ratio;
            report.argmin = Some(rec.finding(e.ratio));
        }
        report.max_ratio = report.max_ratio.max(e.ratio);
        if !e.independent {
            report.independence_failures.push(rec.finding(e.ratio));
        }
        if e.ratio < 1.0 - VIOLATION_TOL {
            report.violations.push(rec.finding(e.ratio));
        }
    }
    report
}

pub fn fuzz_with(spec: &GeneratorSpec, samples: u64, tol: f64, parallel: bool) -> FuzzReport {
    let t0 = Instant::now();
    let records = fuzz_records(spec, samples, tol, parallel);
    summarize(spec, tol, &records, t0.elapsed().as_secs_f64())
}

pub fn fuzz(spec: &GeneratorSpec, samples: u64, tol: f64) -> FuzzReport {
    fuzz_with(spec, samples, tol, true)
}
