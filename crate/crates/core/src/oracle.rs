//! Independent checks for the closed-form fit.
//!
//! Lines through the centroid are parameterized by their direction angle
//! `θ ∈ [0, π)`, slope `tan θ`. In that chart the objective is
//! `s_xx·sin²θ − 2·s_xy·sinθ·cosθ + s_yy·cos²θ`, which is smooth on the whole
//! circle and reaches the vertical line at `θ = π/2`. The scan minimizer
//! samples it on a grid and polishes the best cell with golden-section
//! search; it never touches the derivative or the quadratic roots. The eigen
//! oracle diagonalizes the scatter matrix `[[s_xx, s_xy], [s_xy, s_yy]]`,
//! whose smallest eigenvalue is the minimized objective.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::{det2, quadratic_form, sum_of_squares, TwoFloat};
use crate::solver::DEFAULT_DEGENERACY_TOL;
use crate::stats::SufficientStats;

pub const DEFAULT_GRID_POINTS: usize = 3600;
pub const DEFAULT_REFINE_TOL: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanMinimum {
    /// Minimizing direction angle in `[0, π)`.
    pub theta: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterEigen {
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Direction of the dominant eigenvector in `[0, π)`; `None` when the
    /// matrix is a multiple of the identity.
    pub principal_angle: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub theta_star: f64,
    pub sse_at_theta: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub principal_angle: Option<f64>,
}

/// Rayleigh quotient of the line normal at angle `theta`, carried in two words.
///
/// Dividing by the computed `sin² + cos²` keeps rounding in `sin`/`cos` from
/// scaling the value.
fn angle_objective_two_float(stats: &SufficientStats, theta: f64) -> TwoFloat {
    let (s, c) = theta.sin_cos();
    quadratic_form(stats.s_xx, -stats.s_xy, stats.s_yy, s, c).div(sum_of_squares(s, c))
}

/// Objective of the line through the centroid with direction angle `theta`.
///
/// Equals the profiled objective at slope `tan θ`; at `θ = π/2` it is `s_xx`.
pub fn angle_objective(stats: &SufficientStats, theta: f64) -> f64 {
    angle_objective_two_float(stats, theta).to_f64()
}

/// Grid scan over `[0, π)` followed by golden-section refinement.
pub fn minimize_by_scan(
    stats: &SufficientStats,
    grid_points: usize,
    refine_tol: f64,
) -> Result<ScanMinimum> {
    if grid_points < 8 {
        return Err(Error::InvalidArgument("grid_points must be at least 8"));
    }
    if !(refine_tol.is_finite() && refine_tol > 0.0) {
        return Err(Error::InvalidArgument(
            "refine_tol must be positive and finite",
        ));
    }
    let step = PI / grid_points as f64;
    let f = |theta: f64| angle_objective_two_float(stats, theta);

    let mut best_i = 0;
    let mut best = f(0.0);
    for i in 1..grid_points {
        let v = f(i as f64 * step);
        if v.diff(best) < 0.0 {
            best = v;
            best_i = i;
        }
    }

    // The objective has period π, so the bracket may hang over either end.
    let centre = best_i as f64 * step;
    let (mut lo, mut hi) = (centre - step, centre + step);
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > refine_tol && lo < c && c < d && d < hi {
        if fc.diff(fd) < 0.0 {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }

    let theta = 0.5 * (lo + hi);
    let mut value = f(theta);
    let mut theta_best = theta;
    // Keep whichever evaluated point is lowest if the bracket collapsed early.
    for (t, v) in [(c, fc), (d, fd)] {
        if v.diff(value) < 0.0 {
            value = v;
            theta_best = t;
        }
    }
    if best.diff(value) < 0.0 {
        value = best;
        theta_best = centre;
    }
    let mut theta = theta_best.rem_euclid(PI);
    if theta >= PI {
        theta = 0.0;
    }
    Ok(ScanMinimum {
        theta,
        value: value.to_f64(),
    })
}

/// Closed-form eigenvalues of the scatter matrix.
///
/// The small eigenvalue is taken as `det / λ_max` so that it keeps its
/// relative accuracy when the data are nearly collinear.
pub fn scatter_eigen(stats: &SufficientStats) -> ScatterEigen {
    let trace = stats.s_xx + stats.s_yy;
    let spread = (stats.s_xx - stats.s_yy).hypot(2.0 * stats.s_xy);
    let lambda_max = 0.5 * (trace + spread);
    let lambda_min = if lambda_max > 0.0 {
        det2(stats.s_xx, stats.s_xy, stats.s_xy, stats.s_yy) / lambda_max
    } else {
        0.0
    };
    let principal_angle = if spread <= DEFAULT_DEGENERACY_TOL * trace || spread == 0.0 {
        None
    } else {
        let a = 0.5 * (2.0 * stats.s_xy).atan2(stats.s_xx - stats.s_yy);
        let a = a.rem_euclid(PI);
        Some(if a >= PI { 0.0 } else { a })
    };
    ScatterEigen {
        lambda_min,
        lambda_max,
        principal_angle,
    }
}

/// Runs both oracles with default scan settings.
pub fn run_oracles(stats: &SufficientStats) -> OracleReport {
    let scan = minimize_by_scan(stats, DEFAULT_GRID_POINTS, DEFAULT_REFINE_TOL)
        .expect("default scan parameters are valid");
    let eig = scatter_eigen(stats);
    OracleReport {
        theta_star: scan.theta,
        sse_at_theta: scan.value,
        lambda_min: eig.lambda_min,
        lambda_max: eig.lambda_max,
        principal_angle: eig.principal_angle,
    }
}
