//! Straight-line fitting by minimizing the sum of squared perpendicular
//! distances.
//!
//! The crate is split the same way the computation is:
//!
//! - [`stats`] turns a point set into centered sufficient statistics.
//! - [`solver`] evaluates the perpendicular-error objective and solves for
//!   the best line in closed form, including the degenerate cases where the
//!   cross-product sum vanishes. An ordinary least squares fit is provided as
//!   a baseline.
//! - [`oracle`] holds two independent checks: a derivative-free search over
//!   line angles and the closed-form eigenvalues of the 2×2 scatter matrix.
//!
//! ```
//! use perpfit_core::{accumulate_stats, fit_perpendicular, DataPoint, FitLine};
//!
//! let points = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 0.0)]
//!     .map(|(x, y)| DataPoint::new(x, y));
//! let stats = accumulate_stats(&points).unwrap();
//! let fit = fit_perpendicular(&stats).unwrap();
//! match fit.line {
//!     FitLine::Sloped { intercept, slope } => {
//!         assert!((slope - 0.78078).abs() < 5e-6);
//!         assert!((intercept + 0.14039).abs() < 5e-6);
//!     }
//!     other => panic!("unexpected line {other:?}"),
//! }
//! ```

mod error;
mod numeric;
pub mod oracle;
pub mod solver;
pub mod stats;

pub use error::{Error, Result};
pub use oracle::{
    angle_objective, minimize_by_scan, run_oracles, scatter_eigen, OracleReport, ScanMinimum,
    ScatterEigen, DEFAULT_GRID_POINTS, DEFAULT_REFINE_TOL,
};
pub use solver::{
    fit_ols, fit_perpendicular, fit_perpendicular_with_tol, intercept_from_slope, slope_candidates,
    slope_candidates_with_tol, sse_p_of_line, sse_p_profile, sse_p_profile_derivative, sse_p_raw,
    Degeneracy, FitLine, FitResult, DEFAULT_DEGENERACY_TOL,
};
pub use stats::{accumulate_stats, correlation, DataPoint, DataSet, SufficientStats};
