//! Special-case and random configurations.
//!
//! Randomness comes from ChaCha8 seeded with a `u64`; sample `k` of a stream
//! with base seed `s` uses seed `s + k` (wrapping), so any single sample can be
//! regenerated on its own.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{check_ascending, CaseParams};
use crate::error::{Error, Result};
use crate::geometry::{Configuration, OrientationPolicy, Point};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    CaseA,
    CaseB,
    CollinearVertical,
    RandomBox,
    RandomGaussian,
    Polygon,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        Self::CaseA,
        Self::CaseB,
        Self::CollinearVertical,
        Self::RandomBox,
        Self::RandomGaussian,
        Self::Polygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::CaseA => "case_a",
            Self::CaseB => "case_b",
            Self::CollinearVertical => "collinear_vertical",
            Self::RandomBox => "random_box",
            Self::RandomGaussian => "random_gaussian",
            Self::Polygon => "polygon",
        }
    }

    pub fn min_points(self) -> usize {
        match self {
            Self::CaseB | Self::Polygon => 3,
            _ => 2,
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase().replace('-', "_"))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator kind '{s}'")))
    }
}

/// What to sample in a fuzz campaign: kind, an inclusive range of point
/// counts, the base seed and a coordinate scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub scale: f64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n_min: usize, n_max: usize, seed: u64) -> Result<Self> {
        let spec = Self {
            kind,
            n_min,
            n_max,
            seed,
            scale: 1.0,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_scale(mut self, scale: f64) -> Result<Self> {
        self.scale = scale;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < self.kind.min_points() || self.n_max < self.n_min {
            return Err(Error::InvalidParameter(format!(
                "{} needs {} <= n_min <= n_max, got {}..{}",
                self.kind.name(),
                self.kind.min_points(),
                self.n_min,
                self.n_max
            )));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::InvalidParameter(format!("scale must be positive, got {}", self.scale)));
        }
        Ok(())
    }

    pub fn sample_seed(&self, index: u64) -> u64 {
        self.seed.wrapping_add(index)
    }

    /// Sample `index` of the stream, together with the orientation policy it
    /// should be evaluated under.
    pub fn sample(&self, index: u64) -> (Configuration, OrientationPolicy) {
        let seed = self.sample_seed(index);
        let mut rng = seeded_rng(seed);
        let n = rng.random_range(self.n_min..=self.n_max);
        let (c, pol) = sample_kind(self.kind, n, &mut rng);
        let c = if self.scale == 1.0 {
            c
        } else {
            c.scaled(self.scale).expect("positive finite scale keeps points distinct")
        };
        (c, pol)
    }
}

/// Points `(a_i, 0)`, then `(0, b)`, with the special-case orientation.
pub fn case_a_config(a: &[f64], b: f64) -> Result<(Configuration, OrientationPolicy)> {
    if b.is_nan() || b >= 0.0 {
        return Err(Error::InvalidParameter(format!("case A needs b < 0, got {b}")));
    }
    special_config(a, &[b])
}

/// Points `(a_i, 0)`, then `(0, -1)` and `(0, 1)`.
pub fn case_b_config(a: &[f64]) -> Result<(Configuration, OrientationPolicy)> {
    special_config(a, &[-1.0, 1.0])
}

/// Points `(a_i, 0)` on `L`, then `(0, b_j)` on `M`, with the special-case
/// orientation.
pub fn special_config(a: &[f64], b: &[f64]) -> Result<(Configuration, OrientationPolicy)> {
    let params = CaseParams::new(a.to_vec(), b.to_vec())?;
    let points = params
        .a
        .iter()
        .map(|&ai| Point::new(ai, 0.0, 0.0))
        .chain(params.b.iter().map(|&bj| Point::new(0.0, bj, 0.0)))
        .collect();
    let c = Configuration::new(points)?;
    let pol = OrientationPolicy::table1(c.len(), params.m())?;
    Ok((c, pol))
}

pub fn collinear_vertical(heights: &[f64]) -> Result<Configuration> {
    check_ascending(heights, true)?;
    Configuration::new(heights.iter().map(|&h| Point::new(h, 0.0, 0.0)).collect())
}

/// Sorted, pairwise distinct uniform draws from `[lo, hi)`.
pub fn random_ascending<R: Rng>(rng: &mut R, len: usize, lo: f64, hi: f64) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..len).map(|_| rng.random_range(lo..hi)).collect();
        v.sort_by(f64::total_cmp);
        if v.windows(2).all(|w| w[0] < w[1]) {
            return v;
        }
    }
}

fn sample_kind<R: Rng>(kind: GeneratorKind, n: usize, rng: &mut R) -> (Configuration, OrientationPolicy) {
    match kind {
        GeneratorKind::CaseA => {
            let a = random_ascending(rng, n - 1, -2.0, 2.0);
            case_a_config(&a, -1.0).expect("ascending a-list and b = -1 are valid")
        }
        GeneratorKind::CaseB => {
            let a = random_ascending(rng, n - 2, -2.0, 2.0);
            case_b_config(&a).expect("ascending a-list is valid")
        }
        GeneratorKind::CollinearVertical => {
            let h = random_ascending(rng, n, -1.0, 1.0);
            (collinear_vertical(&h).expect("ascending heights"), OrientationPolicy::Canonical)
        }
        _ => (random_points(kind, n, rng), OrientationPolicy::Canonical),
    }
}

fn random_points<R: Rng>(kind: GeneratorKind, n: usize, rng: &mut R) -> Configuration {
    let draw = |rng: &mut R| -> Point {
        match kind {
            GeneratorKind::RandomGaussian => Point::new(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            ),
            _ => Point::new(rng.random(), rng.random(), rng.random()),
        }
    };
    if kind == GeneratorKind::Polygon {
        // regular n-gon in the plane a = 0 with a random rotation
        let offset = rng.random_range(0.0..std::f64::consts::TAU);
        let pts = (0..n)
            .map(|k| {
                let t = offset + std::f64::consts::TAU * k as f64 / n as f64;
                Point::new(0.0, t.cos(), t.sin())
            })
            .collect();
        return Configuration::new(pts).expect("distinct vertices");
    }
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = draw(rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    Configuration::new(pts).expect("duplicates were resampled")
}

/// A single configuration of `n` points; deterministic in `(n, seed, kind)`.
pub fn random_config(n: usize, seed: u64, kind: GeneratorKind) -> Result<Configuration> {
    if n < kind.min_points() {
        return Err(Error::InvalidParameter(format!(
            "{} needs at least {} points",
            kind.name(),
            kind.min_points()
        )));
    }
    Ok(sample_kind(kind, n, &mut seeded_rng(seed)).0)
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
