//! Perpendicular-error objective and its closed-form minimizer.
//!
//! For a line `y = intercept + slope·x`, the squared perpendicular distance of
//! a point is `a² b² / (a² + b²)` where `a` is the vertical and `b` the
//! horizontal error. Substituting the optimal intercept `ȳ − slope·x̄` leaves a
//! ratio of quadratics in the slope whose two critical points are the roots of
//! `s_xy·m² + (s_xx − s_yy)·m − s_xy = 0`. The root with the sign of `s_xy`
//! is the minimum.

use crate::error::{Error, Result};
use crate::numeric::{quadratic_form, sum_of_squares, TwoFloat};
use crate::stats::{DataPoint, DataSet, SufficientStats};

/// Relative tolerance under which `s_xy` counts as zero and `s_xx`, `s_yy`
/// count as equal.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-12;

/// A fitted line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FitLine {
    /// `y = intercept + slope·x`.
    Sloped { intercept: f64, slope: f64 },
    /// `x = x0`.
    Vertical { x0: f64 },
    /// Every line through the centroid attains the same objective.
    IsotropicDegenerate { x_bar: f64, y_bar: f64 },
}

impl FitLine {
    /// Orthogonal projection of `p` onto the line and the distance to it.
    ///
    /// `None` for the isotropic case, which has no unique line.
    pub fn foot_of_perpendicular(&self, p: DataPoint) -> Option<(DataPoint, f64)> {
        match *self {
            FitLine::Sloped { intercept, slope } => {
                let norm = 1.0f64.hypot(slope);
                let (ux, uy) = (1.0 / norm, slope / norm);
                let t = p.x * ux + (p.y - intercept) * uy;
                let foot = DataPoint::new(t * ux, intercept + t * uy);
                let dist = (p.y - intercept - slope * p.x).abs() / norm;
                Some((foot, dist))
            }
            FitLine::Vertical { x0 } => Some((DataPoint::new(x0, p.y), (p.x - x0).abs())),
            FitLine::IsotropicDegenerate { .. } => None,
        }
    }

    /// Direction angle in `[0, π)`, `None` when not unique.
    pub fn direction_angle(&self) -> Option<f64> {
        match *self {
            FitLine::Sloped { slope, .. } => Some(slope.atan().rem_euclid(std::f64::consts::PI)),
            FitLine::Vertical { .. } => Some(std::f64::consts::FRAC_PI_2),
            FitLine::IsotropicDegenerate { .. } => None,
        }
    }
}

/// Which branch of the `s_xy = 0` case analysis a fit came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    None,
    /// `s_xy = 0`, `s_yy < s_xx`: the horizontal line through the centroid.
    HorizontalSyyLtSxx,
    /// `s_xy = 0`, `s_xx < s_yy`: the vertical line through the centroid.
    VerticalSxxLtSyy,
    /// `s_xy = 0`, `s_xx = s_yy`.
    Isotropic,
}

impl Degeneracy {
    pub fn label(&self) -> &'static str {
        match self {
            Degeneracy::None => "none",
            Degeneracy::HorizontalSyyLtSxx => "horizontal_syy_lt_sxx",
            Degeneracy::VerticalSxxLtSyy => "vertical_sxx_lt_syy",
            Degeneracy::Isotropic => "isotropic",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        [
            Degeneracy::None,
            Degeneracy::HorizontalSyyLtSxx,
            Degeneracy::VerticalSxxLtSyy,
            Degeneracy::Isotropic,
        ]
        .into_iter()
        .find(|d| d.label() == label)
    }
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub line: FitLine,
    /// Minimized sum of squared perpendicular distances.
    pub sse_p: f64,
    pub degeneracy: Degeneracy,
    /// The critical slope that minimizes the objective (the selected root).
    pub slope_at_min: Option<f64>,
    /// The other critical slope, where the objective is maximal.
    pub slope_at_max: Option<f64>,
    pub stats: SufficientStats,
}

fn require_finite(v: f64, what: &'static str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what))
    }
}

/// Literal per-point form: `Σ a²b²/(a²+b²)` with `a = y − β₀ − β₁x` and
/// `b = x − (y − β₀)/β₁`.
///
/// Points lying on the line contribute 0 (the limit of the 0/0 term).
pub fn sse_p_raw(data: &DataSet, intercept: f64, slope: f64) -> Result<f64> {
    require_finite(intercept, "intercept must be finite")?;
    require_finite(slope, "slope must be finite")?;
    if slope == 0.0 {
        return Err(Error::ZeroSlope);
    }
    if data.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let total = data
        .points()
        .iter()
        .map(|p| {
            let a = p.y - intercept - slope * p.x;
            let b = p.x - (p.y - intercept) / slope;
            let a2 = a * a;
            let b2 = b * b;
            if a2 + b2 == 0.0 {
                0.0
            } else {
                a2 * b2 / (a2 + b2)
            }
        })
        .sum();
    Ok(total)
}

/// `(s_yy − 2β₁s_xy + β₁²s_xx)/(1 + β₁²)` in double-double precision.
pub(crate) fn profile_two_float(stats: &SufficientStats, slope: f64) -> TwoFloat {
    if slope.abs() <= 1e100 {
        let num = quadratic_form(stats.s_xx, -stats.s_xy, stats.s_yy, slope, 1.0);
        num.div(sum_of_squares(1.0, slope))
    } else {
        // Divide through by slope² to stay in range.
        let t = 1.0 / slope;
        let num = quadratic_form(stats.s_yy, -stats.s_xy, stats.s_xx, t, 1.0);
        num.div(sum_of_squares(1.0, t))
    }
}

/// Objective after profiling out the intercept.
///
/// At `slope = 0` this is exactly `s_yy`.
pub fn sse_p_profile(stats: &SufficientStats, slope: f64) -> Result<f64> {
    require_finite(slope, "slope must be finite")?;
    Ok(profile_two_float(stats, slope).to_f64())
}

/// `2(β₁²s_xy + β₁(s_xx − s_yy) − s_xy)/(1 + β₁²)²`.
pub fn sse_p_profile_derivative(stats: &SufficientStats, slope: f64) -> Result<f64> {
    require_finite(slope, "slope must be finite")?;
    let diff = stats.s_xx - stats.s_yy;
    if slope.abs() <= 1.0 {
        let den = 1.0 + slope * slope;
        Ok(2.0 * (slope * slope * stats.s_xy + slope * diff - stats.s_xy) / (den * den))
    } else {
        let t = 1.0 / slope;
        let den = 1.0 + t * t;
        Ok(2.0 * t * t * (stats.s_xy + diff * t - stats.s_xy * t * t) / (den * den))
    }
}

/// `ȳ − β₁x̄`.
pub fn intercept_from_slope(stats: &SufficientStats, slope: f64) -> Result<f64> {
    require_finite(slope, "slope must be finite")?;
    Ok(stats.y_bar - slope * stats.x_bar)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "tolerance must be positive and finite",
        ))
    }
}

fn cross_product_is_zero(stats: &SufficientStats, tol: f64) -> bool {
    let scale = stats.s_xx.sqrt() * stats.s_yy.sqrt();
    scale == 0.0 || stats.s_xy.abs() <= tol * scale
}

fn variances_equal(stats: &SufficientStats, tol: f64) -> bool {
    (stats.s_xx - stats.s_yy).abs() <= tol * (stats.s_xx + stats.s_yy)
}

/// Both critical slopes, ordered `(negative, positive)`.
pub fn slope_candidates(stats: &SufficientStats) -> Result<(f64, f64)> {
    slope_candidates_with_tol(stats, DEFAULT_DEGENERACY_TOL)
}

pub fn slope_candidates_with_tol(stats: &SufficientStats, tol: f64) -> Result<(f64, f64)> {
    check_tol(tol)?;
    if cross_product_is_zero(stats, tol) {
        return Err(Error::DegenerateCrossProduct);
    }
    let q = stats.s_yy - stats.s_xx;
    let d = q.hypot(2.0 * stats.s_xy);
    // Add same-signed terms for the larger root; the roots multiply to −1.
    let large = if q != 0.0 {
        (q + d.copysign(q)) / (2.0 * stats.s_xy)
    } else {
        d / (2.0 * stats.s_xy)
    };
    let small = -1.0 / large;
    Ok(if large < small {
        (large, small)
    } else {
        (small, large)
    })
}

pub fn fit_perpendicular(stats: &SufficientStats) -> Result<FitResult> {
    fit_perpendicular_with_tol(stats, DEFAULT_DEGENERACY_TOL)
}

/// Closed-form perpendicular fit with an explicit degeneracy tolerance.
pub fn fit_perpendicular_with_tol(stats: &SufficientStats, tol: f64) -> Result<FitResult> {
    check_tol(tol)?;
    if stats.n < 2 {
        return Err(Error::InsufficientData { n: stats.n });
    }

    if !cross_product_is_zero(stats, tol) {
        let (neg, pos) = slope_candidates_with_tol(stats, tol)?;
        let (best, worst) = if stats.s_xy > 0.0 {
            (pos, neg)
        } else {
            (neg, pos)
        };
        let sse_p = profile_two_float(stats, best).to_f64().max(0.0);
        return Ok(FitResult {
            line: FitLine::Sloped {
                intercept: intercept_from_slope(stats, best)?,
                slope: best,
            },
            sse_p,
            degeneracy: Degeneracy::None,
            slope_at_min: Some(best),
            slope_at_max: Some(worst),
            stats: *stats,
        });
    }

    let (line, sse_p, degeneracy) = if variances_equal(stats, tol) {
        (
            FitLine::IsotropicDegenerate {
                x_bar: stats.x_bar,
                y_bar: stats.y_bar,
            },
            stats.s_xx,
            Degeneracy::Isotropic,
        )
    } else if stats.s_yy < stats.s_xx {
        (
            FitLine::Sloped {
                intercept: stats.y_bar,
                slope: 0.0,
            },
            stats.s_yy,
            Degeneracy::HorizontalSyyLtSxx,
        )
    } else {
        (
            FitLine::Vertical { x0: stats.x_bar },
            stats.s_xx,
            Degeneracy::VerticalSxxLtSyy,
        )
    };
    Ok(FitResult {
        line,
        sse_p,
        degeneracy,
        slope_at_min: None,
        slope_at_max: None,
        stats: *stats,
    })
}

/// Ordinary least squares baseline: `β₁ = s_xy/s_xx` through the centroid.
pub fn fit_ols(stats: &SufficientStats) -> Result<FitLine> {
    if stats.s_xx <= 0.0 {
        return Err(Error::VerticalData);
    }
    let slope = stats.s_xy / stats.s_xx;
    Ok(FitLine::Sloped {
        intercept: intercept_from_slope(stats, slope)?,
        slope,
    })
}

/// Sum of squared perpendicular distances to an arbitrary line.
pub fn sse_p_of_line(stats: &SufficientStats, line: &FitLine) -> f64 {
    let n = stats.n as f64;
    match *line {
        FitLine::Sloped { intercept, slope } => {
            let offset = (stats.y_bar - intercept - slope * stats.x_bar) / 1.0f64.hypot(slope);
            let centered = profile_two_float(stats, slope).to_f64().max(0.0);
            centered + n * offset * offset
        }
        FitLine::Vertical { x0 } => {
            let offset = stats.x_bar - x0;
            stats.s_xx + n * offset * offset
        }
        FitLine::IsotropicDegenerate { .. } => stats.s_xx,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::accumulate_stats;
    use approx::assert_abs_diff_eq;

    fn data(pairs: &[(f64, f64)]) -> DataSet {
        DataSet::from_pairs(pairs.iter().copied()).unwrap()
    }

    fn example() -> DataSet {
        data(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 0.0)])
    }

    fn moments(s_xx: f64, s_yy: f64, s_xy: f64) -> SufficientStats {
        SufficientStats::from_moments(10, 0.0, 0.0, s_xx, s_yy, s_xy).unwrap()
    }

    // Smallest eigenvalue of [[1, 1/2], [1/2, 3/4]]: (1.75 − sqrt(0.0625 + 1))/2.
    const EXAMPLE_LAMBDA_MIN: f64 = 0.359_611_796_797_792;
    // (s_yy − s_xx + sqrt((s_yy − s_xx)² + 4 s_xy²)) / (2 s_xy) = −0.25 + sqrt(1.0625).
    const EXAMPLE_SLOPE: f64 = 0.780_776_406_404_415;

    /// Squared distance from `p` to the line through `(0, c)` with slope `m`,
    /// via projection onto the unit direction.
    fn geometric_sq_distance(p: (f64, f64), c: f64, m: f64) -> f64 {
        let len = (1.0 + m * m).sqrt();
        let (ux, uy) = (1.0 / len, m / len);
        let (vx, vy) = (p.0, p.1 - c);
        let along = vx * ux + vy * uy;
        let (rx, ry) = (vx - along * ux, vy - along * uy);
        rx * rx + ry * ry
    }

    #[test]
    fn raw_matches_geometry() {
        let d = data(&[(0.0, 1.0)]);
        assert_abs_diff_eq!(sse_p_raw(&d, 0.0, 1.0).unwrap(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(
            geometric_sq_distance((0.0, 1.0), 0.0, 1.0),
            0.5,
            epsilon = 1e-15
        );

        let p = example();
        let expected: f64 = p
            .points()
            .iter()
            .map(|q| geometric_sq_distance((q.x, q.y), -0.14039, 0.78078))
            .sum();
        let got = sse_p_raw(&p, -0.14039, 0.78078).unwrap();
        assert_abs_diff_eq!(got, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(got, EXAMPLE_LAMBDA_MIN, epsilon = 1e-4);
    }

    #[test]
    fn raw_points_on_line_contribute_zero() {
        let d = data(&[(0.0, 0.0), (1.0, 2.0)]);
        assert_eq!(sse_p_raw(&d, 0.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn raw_rejects_zero_slope_and_bad_args() {
        let p = example();
        assert_eq!(sse_p_raw(&p, 0.0, 0.0), Err(Error::ZeroSlope));
        assert!(matches!(
            sse_p_raw(&p, f64::NAN, 1.0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            sse_p_raw(&p, 0.0, f64::INFINITY),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(
            sse_p_raw(&DataSet::default(), 0.0, 1.0),
            Err(Error::EmptyDataset)
        );
    }

    #[test]
    fn profile_values() {
        let s = example().stats().unwrap();
        assert_abs_diff_eq!(
            sse_p_profile(&s, 0.780776).unwrap(),
            EXAMPLE_LAMBDA_MIN,
            epsilon = 1e-5
        );
        assert_eq!(sse_p_profile(&s, 0.0).unwrap(), 0.75);
        let other = moments(3.0, 2.5, -1.25);
        assert_eq!(sse_p_profile(&other, 0.0).unwrap(), 2.5);
        assert!(sse_p_profile(&s, f64::NAN).is_err());
        // Far out along the slope axis the objective tends to s_xx.
        assert_abs_diff_eq!(sse_p_profile(&s, 1e200).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn derivative_values() {
        let s = example().stats().unwrap();
        assert_eq!(sse_p_profile_derivative(&s, 0.0).unwrap(), -1.0);
        let other = moments(3.0, 2.5, -1.25);
        assert_eq!(sse_p_profile_derivative(&other, 0.0).unwrap(), 2.5);
        assert_abs_diff_eq!(
            sse_p_profile_derivative(&s, 0.780776).unwrap(),
            0.0,
            epsilon = 1e-6
        );
        assert!(sse_p_profile_derivative(&s, f64::INFINITY).is_err());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let s = example().stats().unwrap();
        let h = 1e-6;
        for &b in &[-7.5, -1.0, -0.3, 0.0, 0.5, 0.780776, 2.0, 9.0] {
            let fd =
                (sse_p_profile(&s, b + h).unwrap() - sse_p_profile(&s, b - h).unwrap()) / (2.0 * h);
            assert_abs_diff_eq!(sse_p_profile_derivative(&s, b).unwrap(), fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn intercept_values() {
        let s = example().stats().unwrap();
        assert_abs_diff_eq!(
            intercept_from_slope(&s, 0.78078).unwrap(),
            -0.14039,
            epsilon = 1e-5
        );
        assert_eq!(intercept_from_slope(&s, 0.0).unwrap(), 0.25);
        let centered = SufficientStats::from_moments(4, 0.0, 3.5, 1.0, 1.0, 0.5).unwrap();
        for b in [-4.0, 0.0, 1.5, 100.0] {
            assert_eq!(intercept_from_slope(&centered, b).unwrap(), 3.5);
        }
        assert!(intercept_from_slope(&s, f64::NAN).is_err());
    }

    #[test]
    fn candidates_for_worked_example() {
        let s = example().stats().unwrap();
        let (neg, pos) = slope_candidates(&s).unwrap();
        assert_abs_diff_eq!(pos, EXAMPLE_SLOPE, epsilon = 1e-12);
        assert_abs_diff_eq!(neg, -1.280776, epsilon = 1e-5);
        assert_abs_diff_eq!(neg * pos, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn candidates_equal_variances() {
        assert_eq!(
            slope_candidates(&moments(1.0, 1.0, 0.5)).unwrap(),
            (-1.0, 1.0)
        );
    }

    #[test]
    fn candidates_negative_cross_product() {
        // −m² − 3m + 1 = 0  ⇒  m = (−3 ± sqrt(13))/2.
        let s = moments(1.0, 4.0, -1.0);
        let (neg, pos) = slope_candidates(&s).unwrap();
        let r = 13f64.sqrt();
        assert_abs_diff_eq!(neg, (-3.0 - r) / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(pos, (-3.0 + r) / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(neg, -3.302776, epsilon = 1e-6);
        assert_abs_diff_eq!(pos, 0.302776, epsilon = 1e-6);
        for root in [neg, pos] {
            assert_abs_diff_eq!(
                sse_p_profile_derivative(&s, root).unwrap(),
                0.0,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn candidates_reject_zero_cross_product() {
        assert_eq!(
            slope_candidates(&moments(2.0, 1.0, 0.0)),
            Err(Error::DegenerateCrossProduct)
        );
        assert_eq!(
            slope_candidates(&moments(0.0, 1.0, 0.0)),
            Err(Error::DegenerateCrossProduct)
        );
        assert_eq!(
            slope_candidates(&moments(1.0, 1.0, 1e-14)),
            Err(Error::DegenerateCrossProduct)
        );
    }

    #[test]
    fn candidates_no_cancellation_when_variances_dominate() {
        // q = 1e8, s_xy = 1e-3: naive (q − sqrt(q² + 4s²))/(2s) loses every digit.
        let s = moments(1.0, 1e8 + 1.0, 1e-3);
        let (neg, pos) = slope_candidates(&s).unwrap();
        // Small root ≈ −s_xy/q to first order.
        assert_abs_diff_eq!(neg / -1e-11, 1.0, epsilon = 1e-9);
        assert!(pos > 1e10);
        assert_abs_diff_eq!(neg * pos, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn fit_worked_example() {
        let fit = fit_perpendicular(&example().stats().unwrap()).unwrap();
        assert_eq!(fit.degeneracy, Degeneracy::None);
        let FitLine::Sloped { intercept, slope } = fit.line else {
            panic!("expected sloped line, got {:?}", fit.line);
        };
        assert_abs_diff_eq!(slope, 0.78078, epsilon = 5e-6);
        assert_abs_diff_eq!(intercept, -0.14039, epsilon = 5e-6);
        assert_abs_diff_eq!(fit.sse_p, EXAMPLE_LAMBDA_MIN, epsilon = 1e-14);
        assert_eq!(fit.slope_at_min, Some(slope));
        assert!(fit.slope_at_max.unwrap() < 0.0);
    }

    #[test]
    fn fit_vertical_column() {
        let s = data(&[(0.0, 0.0), (0.0, 1.0), (0.0, 3.0)]).stats().unwrap();
        let fit = fit_perpendicular(&s).unwrap();
        assert_eq!(fit.line, FitLine::Vertical { x0: 0.0 });
        assert_eq!(fit.degeneracy, Degeneracy::VerticalSxxLtSyy);
        assert_eq!(fit.sse_p, 0.0);
        assert_eq!(fit.slope_at_min, None);
    }

    #[test]
    fn fit_isotropic_cross() {
        let s = data(&[(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)])
            .stats()
            .unwrap();
        let fit = fit_perpendicular(&s).unwrap();
        assert_eq!(
            fit.line,
            FitLine::IsotropicDegenerate {
                x_bar: 0.0,
                y_bar: 0.0
            }
        );
        assert_eq!(fit.degeneracy, Degeneracy::Isotropic);
        assert_eq!(fit.sse_p, 2.0);
    }

    #[test]
    fn fit_horizontal() {
        let s = data(&[(-2.0, 1.0), (2.0, 1.0), (-2.0, 3.0), (2.0, 3.0)])
            .stats()
            .unwrap();
        let fit = fit_perpendicular(&s).unwrap();
        assert_eq!(fit.degeneracy, Degeneracy::HorizontalSyyLtSxx);
        assert_eq!(
            fit.line,
            FitLine::Sloped {
                intercept: 2.0,
                slope: 0.0
            }
        );
        assert_eq!(fit.sse_p, 4.0);
    }

    #[test]
    fn fit_collinear() {
        let s = data(&[(0.0, 0.0), (1.0, 2.0), (2.0, 4.0)]).stats().unwrap();
        let fit = fit_perpendicular(&s).unwrap();
        let FitLine::Sloped { intercept, slope } = fit.line else {
            panic!()
        };
        assert_abs_diff_eq!(slope, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(intercept, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fit.sse_p, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn fit_needs_two_points() {
        let s = data(&[(5.0, 7.0)]).stats().unwrap();
        assert_eq!(fit_perpendicular(&s), Err(Error::InsufficientData { n: 1 }));
    }

    #[test]
    fn fit_identical_points_is_isotropic() {
        let s = data(&[(3.0, 3.0), (3.0, 3.0)]).stats().unwrap();
        let fit = fit_perpendicular(&s).unwrap();
        assert_eq!(fit.degeneracy, Degeneracy::Isotropic);
        assert_eq!(fit.sse_p, 0.0);
    }

    #[test]
    fn custom_tolerance_widens_degeneracy() {
        let s = moments(2.0, 1.0, 1e-6);
        assert_eq!(fit_perpendicular(&s).unwrap().degeneracy, Degeneracy::None);
        let loose = fit_perpendicular_with_tol(&s, 1e-3).unwrap();
        assert_eq!(loose.degeneracy, Degeneracy::HorizontalSyyLtSxx);
        assert!(fit_perpendicular_with_tol(&s, 0.0).is_err());
        assert!(fit_perpendicular_with_tol(&s, f64::NAN).is_err());
    }

    /// Minimizes Σ(y − c − m x)² over a grid, then over a finer grid around the best cell.
    fn ols_grid_oracle(d: &DataSet) -> (f64, f64) {
        let sse = |c: f64, m: f64| -> f64 {
            d.points().iter().map(|p| (p.y - c - m * p.x).powi(2)).sum()
        };
        let (mut c0, mut m0, mut span) = (0.0, 0.0, 4.0);
        for _ in 0..8 {
            let mut best = (f64::INFINITY, c0, m0);
            for i in -20..=20 {
                for j in -20..=20 {
                    let c = c0 + span * i as f64 / 20.0;
                    let m = m0 + span * j as f64 / 20.0;
                    let v = sse(c, m);
                    if v < best.0 {
                        best = (v, c, m);
                    }
                }
            }
            (c0, m0) = (best.1, best.2);
            span /= 10.0;
        }
        (c0, m0)
    }

    #[test]
    fn ols_worked_example() {
        let p = example();
        let (c, m) = ols_grid_oracle(&p);
        assert_abs_diff_eq!(c, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(m, 0.5, epsilon = 1e-6);
        assert_eq!(
            fit_ols(&p.stats().unwrap()).unwrap(),
            FitLine::Sloped {
                intercept: 0.0,
                slope: 0.5
            }
        );
    }

    #[test]
    fn ols_edge_cases() {
        let line = data(&[(0.0, 0.0), (1.0, 2.0), (3.0, 6.0)]).stats().unwrap();
        assert_eq!(
            fit_ols(&line).unwrap(),
            FitLine::Sloped {
                intercept: 0.0,
                slope: 2.0
            }
        );
        let flat = data(&[(0.0, 0.0), (1.0, 0.0)]).stats().unwrap();
        assert_eq!(
            fit_ols(&flat).unwrap(),
            FitLine::Sloped {
                intercept: 0.0,
                slope: 0.0
            }
        );
        let column = data(&[(1.0, 0.0), (1.0, 5.0)]).stats().unwrap();
        assert_eq!(fit_ols(&column), Err(Error::VerticalData));
    }

    #[test]
    fn objective_of_any_line() {
        let s = example().stats().unwrap();
        // (0.75 − 0.5 + 0.25)/1.25
        assert_abs_diff_eq!(
            sse_p_of_line(
                &s,
                &FitLine::Sloped {
                    intercept: 0.0,
                    slope: 0.5
                }
            ),
            0.4,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            sse_p_of_line(
                &s,
                &FitLine::Sloped {
                    intercept: -0.14039,
                    slope: 0.78078
                }
            ),
            EXAMPLE_LAMBDA_MIN,
            epsilon = 1e-4
        );
        let col = data(&[(0.0, 0.0), (0.0, 2.0)]).stats().unwrap();
        assert_eq!(sse_p_of_line(&col, &FitLine::Vertical { x0: 0.0 }), 0.0);
        // Shifted vertical line: every point is 1.5 away.
        assert_eq!(sse_p_of_line(&col, &FitLine::Vertical { x0: 1.5 }), 4.5);
        // Arbitrary line against the per-point geometric distance.
        let p = example();
        let direct: f64 = p
            .points()
            .iter()
            .map(|q| geometric_sq_distance((q.x, q.y), 0.3, -2.0))
            .sum();
        assert_abs_diff_eq!(
            sse_p_of_line(
                &s,
                &FitLine::Sloped {
                    intercept: 0.3,
                    slope: -2.0
                }
            ),
            direct,
            epsilon = 1e-14
        );
    }

    #[test]
    fn foot_of_perpendicular_by_projection() {
        let line = FitLine::Sloped {
            intercept: 0.0,
            slope: 1.0,
        };
        let (foot, dist) = line
            .foot_of_perpendicular(DataPoint::new(0.0, 1.0))
            .unwrap();
        assert_abs_diff_eq!(foot.x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(foot.y, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(dist, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        // Residual is orthogonal to the direction (1, 1).
        assert_abs_diff_eq!((0.0 - foot.x) + (1.0 - foot.y), 0.0, epsilon = 1e-15);

        let v = FitLine::Vertical { x0: 2.0 };
        assert_eq!(
            v.foot_of_perpendicular(DataPoint::new(-1.0, 4.0)),
            Some((DataPoint::new(2.0, 4.0), 3.0))
        );
        let iso = FitLine::IsotropicDegenerate {
            x_bar: 0.0,
            y_bar: 0.0,
        };
        assert_eq!(iso.foot_of_perpendicular(DataPoint::new(1.0, 1.0)), None);
    }

    #[test]
    fn degeneracy_labels_round_trip() {
        for d in [
            Degeneracy::None,
            Degeneracy::HorizontalSyyLtSxx,
            Degeneracy::VerticalSxxLtSyy,
            Degeneracy::Isotropic,
        ] {
            assert_eq!(Degeneracy::from_label(d.label()), Some(d));
        }
        assert_eq!(Degeneracy::from_label("sideways"), None);
    }

    #[test]
    fn stats_helper_reexported() {
        let s = accumulate_stats(example().points()).unwrap();
        assert_eq!(s, example().stats().unwrap());
    }
}
