//! Points of R×C, the Hopf map and its lifts, and the per-pair linear forms.
//!
//! A point is stored as `(a, z)` with `a` the real height and `z` the planar
//! coordinate. For every unordered pair of points one direction is chosen as
//! *forward*; the forward direction is lifted with the standard lift and the
//! opposite direction with the conjugate-swap rule `(z, w) -> (-conj(w), conj(z))`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::binary_forms::LinearForm;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub a: f64,
    pub z: Complex64,
}

impl Point {
    pub const fn new(a: f64, re: f64, im: f64) -> Self {
        Self {
            a,
            z: Complex64::new(re, im),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.z.re.is_finite() && self.z.im.is_finite()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (other.a - self.a).hypot((other.z - self.z).norm())
    }
}

/// An ordered tuple of `N >= 2` pairwise distinct points.
///
/// Distinctness is exact equality on the stored values; the caller owns any
/// geometric tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Configuration {
    points: Vec<Point>,
}

impl TryFrom<Vec<Point>> for Configuration {
    type Error = Error;

    fn try_from(points: Vec<Point>) -> Result<Self> {
        Self::new(points)
    }
}

impl From<Configuration> for Vec<Point> {
    fn from(c: Configuration) -> Self {
        c.points
    }
}

impl Configuration {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if let Some(k) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(k));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::CoincidentPoints(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn diameter(&self) -> f64 {
        self.pairwise().map(|(p, q)| p.distance(q)).fold(0.0, f64::max)
    }

    pub fn min_distance(&self) -> f64 {
        self.pairwise()
            .map(|(p, q)| p.distance(q))
            .fold(f64::INFINITY, f64::min)
    }

    /// Indices of the closest pair.
    pub fn closest_pair(&self) -> (usize, usize) {
        let n = self.len();
        let mut best = (0, 1, f64::INFINITY);
        for i in 0..n {
            for j in i + 1..n {
                let d = self.points[i].distance(&self.points[j]);
                if d < best.2 {
                    best = (i, j, d);
                }
            }
        }
        (best.0, best.1)
    }

    fn pairwise(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let pts = &self.points;
        (0..pts.len()).flat_map(move |i| (i + 1..pts.len()).map(move |j| (&pts[i], &pts[j])))
    }

    fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<Self> {
        Self::new(self.points.iter().map(f).collect())
    }

    pub fn translated(&self, da: f64, dz: Complex64) -> Result<Self> {
        self.map_points(|p| Point {
            a: p.a + da,
            z: p.z + dz,
        })
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::InvalidParameter(format!("scale must be positive, got {s}")));
        }
        self.map_points(|p| Point {
            a: p.a * s,
            z: p.z * s,
        })
    }

    /// Rotation about the R axis: `z -> e^{i theta} z`.
    pub fn rotated_about_axis(&self, theta: f64) -> Result<Self> {
        let u = Complex64::from_polar(1.0, theta);
        self.map_points(|p| Point { a: p.a, z: p.z * u })
    }

    /// New configuration whose k-th point is `self[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Self::new(perm.iter().map(|&k| self.points[k]).collect())
    }

    /// Translate the first point to the origin and rescale to unit diameter.
    pub fn gauge_fixed(&self) -> Result<Self> {
        let origin = self.points[0];
        let shifted = self.translated(-origin.a, -origin.z)?;
        let d = shifted.diameter();
        shifted.scaled(1.0 / d)
    }
}

/// A lift of a vector of R×C under the Hopf map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spinor {
    pub z: Complex64,
    pub w: Complex64,
}

impl Spinor {
    pub fn new(z: Complex64, w: Complex64) -> Result<Self> {
        if z == Complex64::new(0.0, 0.0) && w == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidParameter("spinor (0, 0)".into()));
        }
        Ok(Self { z, w })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.z.norm_sqr() + self.w.norm_sqr()
    }

    /// The Hopf map `h(z, w) = ((|z|^2 - |w|^2) / 2, z conj(w))`.
    pub fn hopf(&self) -> (f64, Complex64) {
        hopf(self)
    }

    /// Lift of the opposite vector: `(z, w) -> (-conj(w), conj(z))`.
    pub fn reverse(&self) -> Spinor {
        reverse_lift(self)
    }

    /// Linear form `z x + w y`.
    pub fn as_form(&self) -> LinearForm {
        LinearForm::new(self.z, self.w)
    }
}

pub fn hopf(s: &Spinor) -> (f64, Complex64) {
    ((s.z.norm_sqr() - s.w.norm_sqr()) / 2.0, s.z * s.w.conj())
}

/// Positive root `lambda = a + sqrt(a^2 + |v|^2)`, evaluated without
/// cancellation when `a < 0`.
pub fn lift_lambda(a: f64, v: Complex64) -> f64 {
    let r = a.hypot(v.norm());
    if a >= 0.0 {
        a + r
    } else {
        v.norm_sqr() / (r - a)
    }
}

/// The standard lift `lambda^{-1/2} (lambda, conj(v))`.
pub fn standard_lift(a: f64, v: Complex64) -> Result<Spinor> {
    let lambda = lift_lambda(a, v);
    if lambda <= 0.0 || !lambda.is_finite() {
        return Err(Error::DegenerateLift);
    }
    let s = lambda.sqrt().recip();
    Ok(Spinor {
        z: Complex64::new(lambda * s, 0.0),
        w: v.conj() * s,
    })
}

pub fn reverse_lift(s: &Spinor) -> Spinor {
    Spinor {
        z: -s.w.conj(),
        w: s.z.conj(),
    }
}

/// Which end of each pair the forward direction starts from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationPolicy {
    /// Lower index to higher index, flipped for vertical pairs that would
    /// otherwise point to the south pole.
    #[default]
    Canonical,
    /// One flag per unordered pair in [`pair_index`] order; `true` means the
    /// forward direction is `point[j] - point[i]` for `i < j`.
    Explicit(Vec<bool>),
}

impl OrientationPolicy {
    pub fn explicit(n: usize, flags: Vec<bool>) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if flags.len() != expected {
            return Err(Error::InvalidPolicy(format!(
                "expected {expected} pair flags for {n} points, got {}",
                flags.len()
            )));
        }
        Ok(Self::Explicit(flags))
    }

    /// The special-case convention: the first `m` points lie on one line, the
    /// rest on a perpendicular one; pairs within a line run low to high and
    /// cross pairs run from the second line to the first.
    pub fn table1(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidPolicy(format!("table1 needs 1 <= m <= n, got m={m}, n={n}")));
        }
        let mut flags = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                flags.push(!(i < m && j >= m));
            }
        }
        Self::explicit(n, flags)
    }

    /// Forward flag for the pair `i < j`.
    pub fn forward(&self, c: &Configuration, i: usize, j: usize) -> Result<bool> {
        debug_assert!(i < j);
        match self {
            Self::Canonical => {
                let (p, q) = (c.points()[i], c.points()[j]);
                Ok(!(p.z == q.z && q.a < p.a))
            }
            Self::Explicit(flags) => {
                let n = c.len();
                if flags.len() != n * (n - 1) / 2 {
                    return Err(Error::InvalidPolicy(format!(
                        "policy has {} flags, configuration has {n} points",
                        flags.len()
                    )));
                }
                Ok(flags[pair_index(i, j, n)])
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Canonical => "canonical",
            Self::Explicit(_) => "explicit",
        }
    }
}

/// Position of the pair `i < j` in row-major upper-triangular order.
pub fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairData {
    pub i: usize,
    pub j: usize,
    pub forward: bool,
    pub lambda: f64,
    pub delta_z: Complex64,
    pub r: f64,
    /// `lambda x + conj(delta_z) y`, contributed to the row of the start point.
    pub form_fwd: LinearForm,
    /// `-delta_z x + lambda y`, contributed to the row of the end point.
    pub form_bwd: LinearForm,
}

impl PairData {
    /// Pair data for points `p = point[i]`, `q = point[j]` with `i < j`.
    pub fn between(i: usize, j: usize, p: &Point, q: &Point, forward: bool) -> Result<Self> {
        if p == q {
            return Err(Error::CoincidentPoints(i, j));
        }
        let (da, dz) = if forward {
            (q.a - p.a, q.z - p.z)
        } else {
            (p.a - q.a, p.z - q.z)
        };
        let lambda = lift_lambda(da, dz);
        if lambda <= 0.0 {
            return Err(Error::DegenerateLift);
        }
        Ok(Self {
            i,
            j,
            forward,
            lambda,
            delta_z: dz,
            r: da.hypot(dz.norm()),
            form_fwd: LinearForm::new(Complex64::new(lambda, 0.0), dz.conj()),
            form_bwd: LinearForm::new(-dz, Complex64::new(lambda, 0.0)),
        })
    }

    /// Index of the point the forward direction starts from.
    pub fn start(&self) -> usize {
        if self.forward {
            self.i
        } else {
            self.j
        }
    }

    pub fn end(&self) -> usize {
        if self.forward {
            self.j
        } else {
            self.i
        }
    }

    /// The form this pair contributes to `row`, which must be `i` or `j`.
    pub fn form_for_row(&self, row: usize) -> LinearForm {
        debug_assert!(row == self.i || row == self.j);
        if row == self.start() {
            self.form_fwd
        } else {
            self.form_bwd
        }
    }

    /// Lambda of the reversed direction, `|delta_z|^2 / lambda`.
    pub fn reversed_lambda(&self) -> f64 {
        self.delta_z.norm_sqr() / self.lambda
    }

    /// `lambda^2 + |delta_z|^2`, the pair's factor in the conjectured bound.
    pub fn bound_factor(&self) -> f64 {
        self.lambda * self.lambda + self.delta_z.norm_sqr()
    }
}

pub fn pair_data(
    c: &Configuration,
    i: usize,
    j: usize,
    policy: &OrientationPolicy,
) -> Result<PairData> {
    if i == j || i.max(j) >= c.len() {
        return Err(Error::InvalidParameter(format!("bad pair ({i}, {j})")));
    }
    let (i, j) = (i.min(j), i.max(j));
    let forward = policy.forward(c, i, j)?;
    PairData::between(i, j, &c.points()[i], &c.points()[j], forward)
}

/// All unordered pairs in [`pair_index`] order.
pub fn pair_table(c: &Configuration, policy: &OrientationPolicy) -> Result<Vec<PairData>> {
    let n = c.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(pair_data(c, i, j, policy)?);
        }
    }
    Ok(out)
}
