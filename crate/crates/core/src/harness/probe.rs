//! Random probing of the open case-B inequality `p q >= prod (1 + lambda_i^2)^2`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{case_b_inequality_probe, case_lambda, CaseBProbe};
use crate::error::{Error, Result};
use crate::generators::{random_ascending, seeded_rng};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeSample {
    pub index: u64,
    pub seed: u64,
    pub a: Vec<f64>,
    pub lambdas: Vec<f64>,
    pub probe: CaseBProbe,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseBProbeReport {
    pub seed: u64,
    pub m_max: usize,
    pub samples_run: u64,
    pub min_slack: f64,
    pub argmin: Option<ProbeSample>,
    /// First sample with `p q < prod (1 + lambda^2)^2`; the campaign stops there.
    pub violation: Option<ProbeSample>,
}

/// Sample `k` draws `m` uniformly from `1..=m_max` and an ascending a-list on
/// `[-3, 3)` from seed `seed + k`, with `lambda_i = a_i + sqrt(1 + a_i^2)`.
pub fn probe_sample(index: u64, seed: u64, m_max: usize) -> Result<ProbeSample> {
    let s = seed.wrapping_add(index);
    let mut rng = seeded_rng(s);
    let m = rng.random_range(1..=m_max);
    let a = random_ascending(&mut rng, m, -3.0, 3.0);
    let lambdas: Vec<f64> = a.iter().map(|&x| case_lambda(x, -1.0)).collect();
    let probe = case_b_inequality_probe(&lambdas)?;
    Ok(ProbeSample {
        index,
        seed: s,
        a,
        lambdas,
        probe,
    })
}

pub fn probe_case_b(samples: u64, m_max: usize, seed: u64) -> Result<CaseBProbeReport> {
    if m_max == 0 {
        return Err(Error::InvalidParameter("m_max must be at least 1".into()));
    }
    let mut report = CaseBProbeReport {
        seed,
        m_max,
        samples_run: 0,
        min_slack: f64::INFINITY,
        argmin: None,
        violation: None,
    };
    for k in 0..samples {
        let s = probe_sample(k, seed, m_max)?;
        report.samples_run += 1;
        if s.probe.slack < report.min_slack {
            report.min_slack = s.probe.slack;
            report.argmin = Some(s.clone());
        }
        if !s.probe.holds() {
            report.violation = Some(s);
            break;
        }
    }
    Ok(report)
}
