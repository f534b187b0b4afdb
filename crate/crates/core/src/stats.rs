//! Point sets and their centered sufficient statistics.

use crate::error::{Error, Result};
use crate::numeric::det2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DataPoint {
    pub x: f64,
    pub y: f64,
}

impl DataPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        DataPoint { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// The same point with coordinates exchanged.
    pub fn swapped(&self) -> Self {
        DataPoint::new(self.y, self.x)
    }
}

impl From<(f64, f64)> for DataPoint {
    fn from((x, y): (f64, f64)) -> Self {
        DataPoint::new(x, y)
    }
}

/// Ordered collection of finite points. Duplicates are kept.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DataSet {
    points: Vec<DataPoint>,
}

impl DataSet {
    /// Validates that every coordinate is finite.
    pub fn new(points: Vec<DataPoint>) -> Result<Self> {
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidData { index });
        }
        Ok(DataSet { points })
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(pairs.into_iter().map(DataPoint::from).collect())
    }

    pub fn points(&self) -> &[DataPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn stats(&self) -> Result<SufficientStats> {
        accumulate_stats(&self.points)
    }

    /// Applies `f` to every point. The caller is responsible for keeping the
    /// result finite; non-finite output is rejected.
    pub fn map<F>(&self, f: F) -> Result<Self>
    where
        F: FnMut(&DataPoint) -> DataPoint,
    {
        Self::new(self.points.iter().map(f).collect())
    }

    pub fn into_points(self) -> Vec<DataPoint> {
        self.points
    }
}

/// Count, centroid and centered second moments of a point set.
///
/// `rho` is `None` when either variance is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SufficientStats {
    pub n: usize,
    pub x_bar: f64,
    pub y_bar: f64,
    pub s_xx: f64,
    pub s_yy: f64,
    pub s_xy: f64,
    pub rho: Option<f64>,
}

impl SufficientStats {
    /// Builds statistics directly from moments, e.g. for synthetic inputs.
    ///
    /// `s_xy` must satisfy Cauchy–Schwarz up to a relative `1e-12`; values
    /// that exceed it by less than that are pulled back onto the boundary.
    pub fn from_moments(
        n: usize,
        x_bar: f64,
        y_bar: f64,
        s_xx: f64,
        s_yy: f64,
        s_xy: f64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        if ![x_bar, y_bar, s_xx, s_yy, s_xy]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(Error::InvalidArgument("moments must be finite"));
        }
        if s_xx < 0.0 || s_yy < 0.0 {
            return Err(Error::InconsistentStats(
                "centered sums of squares must be non-negative",
            ));
        }
        let bound = geometric_mean_sq(s_xx, s_yy);
        if s_xy.abs() - bound > 1e-12 * bound.max(f64::MIN_POSITIVE) {
            return Err(Error::InconsistentStats(
                "cross-product sum violates Cauchy-Schwarz",
            ));
        }
        let s_xy = clamp_cross_product(s_xx, s_yy, s_xy);
        let mut stats = SufficientStats {
            n,
            x_bar,
            y_bar,
            s_xx,
            s_yy,
            s_xy,
            rho: None,
        };
        stats.rho = correlation(&stats);
        Ok(stats)
    }

    /// Statistics of the point set with x and y exchanged.
    pub fn swapped(&self) -> Self {
        SufficientStats {
            n: self.n,
            x_bar: self.y_bar,
            y_bar: self.x_bar,
            s_xx: self.s_yy,
            s_yy: self.s_xx,
            s_xy: self.s_xy,
            rho: self.rho,
        }
    }
}

/// Two-pass sufficient statistics: means first, then centered products.
pub fn accumulate_stats(points: &[DataPoint]) -> Result<SufficientStats> {
    if points.is_empty() {
        return Err(Error::EmptyDataset);
    }
    if let Some(index) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::InvalidData { index });
    }
    let n = points.len();
    let nf = n as f64;
    let (sx, sy) = points
        .iter()
        .fold((0.0, 0.0), |(sx, sy), p| (sx + p.x, sy + p.y));
    let x_bar = sx / nf;
    let y_bar = sy / nf;

    let (mut s_xx, mut s_yy, mut s_xy) = (0.0f64, 0.0f64, 0.0f64);
    for p in points {
        let dx = p.x - x_bar;
        let dy = p.y - y_bar;
        s_xx += dx * dx;
        s_yy += dy * dy;
        s_xy += dx * dy;
    }
    if !(s_xx.is_finite() && s_yy.is_finite() && s_xy.is_finite()) {
        return Err(Error::InvalidArgument("centered sums overflow"));
    }

    // Roundoff can push |s_xy| a few ulps past sqrt(s_xx·s_yy) for
    // (near-)collinear data; the scatter matrix must stay positive semidefinite.
    s_xy = clamp_cross_product(s_xx, s_yy, s_xy);

    let mut stats = SufficientStats {
        n,
        x_bar,
        y_bar,
        s_xx,
        s_yy,
        s_xy,
        rho: None,
    };
    stats.rho = correlation(&stats);
    Ok(stats)
}

/// Shrinks `|s_xy|` until `s_xx·s_yy − s_xy²`, evaluated exactly, is non-negative.
fn clamp_cross_product(s_xx: f64, s_yy: f64, s_xy: f64) -> f64 {
    let bound = geometric_mean_sq(s_xx, s_yy);
    let mut m = s_xy.abs().min(bound);
    while m > 0.0 && det2(s_xx, m, m, s_yy) < 0.0 {
        m = m.next_down();
    }
    m.copysign(s_xy)
}

/// `sqrt(a·b)` without overflow or underflow in the product.
fn geometric_mean_sq(a: f64, b: f64) -> f64 {
    let prod = a * b;
    if prod.is_normal() {
        prod.sqrt()
    } else {
        a.sqrt() * b.sqrt()
    }
}

/// Pearson correlation `s_xy / sqrt(s_xx·s_yy)`, or `None` when undefined.
pub fn correlation(stats: &SufficientStats) -> Option<f64> {
    if stats.s_xx > 0.0 && stats.s_yy > 0.0 {
        let r = stats.s_xy / geometric_mean_sq(stats.s_xx, stats.s_yy);
        Some(r.clamp(-1.0, 1.0))
    } else {
        None
    }
}
