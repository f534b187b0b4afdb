use std::f64::consts::PI;
use std::fmt::Write as _;

use perpfit_core::{
    fit_ols, fit_perpendicular_with_tol, run_oracles, sse_p_of_line, DataSet, Degeneracy, FitLine,
    SufficientStats,
};
use serde::{Deserialize, Serialize};

use crate::json_float;
use crate::run::{Method, RunError};

/// Self-check thresholds: objective agreement relative to `1 + λ_min`, and
/// direction agreement in radians.
const SSE_AGREEMENT: f64 = 1e-8;
const ANGLE_AGREEMENT: f64 = 1e-6;

/// Result of one fitting method.
///
/// Exactly one of these holds: `beta0`/`beta1` are set (sloped line),
/// `vertical_x0` is set (vertical line), `degeneracy` is `isotropic` (no
/// unique line), or `error` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodFit {
    pub method: String,
    #[serde(with = "json_float::option")]
    pub beta0: Option<f64>,
    #[serde(with = "json_float::option")]
    pub beta1: Option<f64>,
    #[serde(with = "json_float::option")]
    pub vertical_x0: Option<f64>,
    pub degeneracy: Option<String>,
    #[serde(with = "json_float::option")]
    pub sse_p: Option<f64>,
    pub error: Option<String>,
}

impl MethodFit {
    fn from_line(method: &str, line: FitLine, sse_p: f64, degeneracy: Option<Degeneracy>) -> Self {
        let (beta0, beta1, vertical_x0) = match line {
            FitLine::Sloped { intercept, slope } => (Some(intercept), Some(slope), None),
            FitLine::Vertical { x0 } => (None, None, Some(x0)),
            FitLine::IsotropicDegenerate { .. } => (None, None, None),
        };
        MethodFit {
            method: method.to_string(),
            beta0,
            beta1,
            vertical_x0,
            degeneracy: degeneracy.map(|d| d.label().to_string()),
            sse_p: Some(sse_p),
            error: None,
        }
    }

    fn failed(method: &str, error: String) -> Self {
        MethodFit {
            method: method.to_string(),
            beta0: None,
            beta1: None,
            vertical_x0: None,
            degeneracy: None,
            sse_p: None,
            error: Some(error),
        }
    }

    pub fn succeeded(&self) -> bool {
        self.error.is_none()
    }

    /// Rebuilds the fitted line; `centroid` fills in the isotropic case.
    pub fn line(&self, centroid: (f64, f64)) -> Option<FitLine> {
        if self.error.is_some() {
            return None;
        }
        match (self.beta0, self.beta1, self.vertical_x0) {
            (Some(intercept), Some(slope), _) => Some(FitLine::Sloped { intercept, slope }),
            (_, _, Some(x0)) => Some(FitLine::Vertical { x0 }),
            _ => Some(FitLine::IsotropicDegenerate {
                x_bar: centroid.0,
                y_bar: centroid.1,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleDelta {
    /// `|sse_p − λ_min|` for the perpendicular fit.
    #[serde(with = "json_float")]
    pub sse_eigen: f64,
    /// `|sse_p − scan minimum|`.
    #[serde(with = "json_float")]
    pub sse_scan: f64,
    /// Angle between the fitted direction and the scan's, folded into `[0, π/2]`.
    #[serde(with = "json_float::option")]
    pub angle: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleBlock {
    #[serde(with = "json_float")]
    pub theta_star: f64,
    #[serde(with = "json_float")]
    pub sse_at_theta: f64,
    #[serde(with = "json_float")]
    pub lambda_min: f64,
    #[serde(with = "json_float")]
    pub lambda_max: f64,
    #[serde(with = "json_float::option")]
    pub principal_angle: Option<f64>,
    pub delta: OracleDelta,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub n: usize,
    #[serde(with = "json_float")]
    pub x_bar: f64,
    #[serde(with = "json_float")]
    pub y_bar: f64,
    #[serde(with = "json_float")]
    pub s_xx: f64,
    #[serde(with = "json_float")]
    pub s_yy: f64,
    #[serde(with = "json_float")]
    pub s_xy: f64,
    #[serde(with = "json_float::option")]
    pub rho: Option<f64>,
    pub fits: Vec<MethodFit>,
    pub oracle: Option<OracleBlock>,
}

impl FitReport {
    pub fn centroid(&self) -> (f64, f64) {
        (self.x_bar, self.y_bar)
    }
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

fn oracle_block(stats: &SufficientStats, tol: f64) -> Result<OracleBlock, RunError> {
    let perp = fit_perpendicular_with_tol(stats, tol)?;
    let oracle = run_oracles(stats);
    let delta = OracleDelta {
        sse_eigen: (perp.sse_p - oracle.lambda_min).abs(),
        sse_scan: (perp.sse_p - oracle.sse_at_theta).abs(),
        angle: perp
            .line
            .direction_angle()
            .map(|a| angle_gap(a, oracle.theta_star)),
    };
    let sse_tol = SSE_AGREEMENT * (1.0 + oracle.lambda_min);
    let agrees = delta.sse_eigen <= sse_tol
        && delta.sse_scan <= sse_tol
        && delta.angle.is_none_or(|a| a <= ANGLE_AGREEMENT);
    Ok(OracleBlock {
        theta_star: oracle.theta_star,
        sse_at_theta: oracle.sse_at_theta,
        lambda_min: oracle.lambda_min,
        lambda_max: oracle.lambda_max,
        principal_angle: oracle.principal_angle,
        delta,
        agrees,
    })
}

/// Runs the requested fits.
///
/// A method that cannot be applied (OLS on vertical data) is recorded in its
/// entry; the call only fails when no method produced a line.
pub fn build_report(
    data: &DataSet,
    method: Method,
    self_check: bool,
    tol: f64,
) -> Result<FitReport, RunError> {
    let stats = data.stats()?;
    if stats.n < 2 {
        return Err(RunError::Fit(perpfit_core::Error::InsufficientData {
            n: stats.n,
        }));
    }

    let mut fits = Vec::new();
    if matches!(method, Method::Perp | Method::Both) {
        let fit = fit_perpendicular_with_tol(&stats, tol)?;
        fits.push(MethodFit::from_line(
            "perp",
            fit.line,
            fit.sse_p,
            Some(fit.degeneracy),
        ));
    }
    if matches!(method, Method::Ols | Method::Both) {
        fits.push(match fit_ols(&stats) {
            Ok(line) => MethodFit::from_line("ols", line, sse_p_of_line(&stats, &line), None),
            Err(e) => MethodFit::failed("ols", e.to_string()),
        });
    }
    if !fits.iter().any(MethodFit::succeeded) {
        let msgs = fits.iter().filter_map(|f| f.error.clone()).collect();
        return Err(RunError::NoFit(msgs));
    }

    let oracle = if self_check {
        Some(oracle_block(&stats, tol)?)
    } else {
        None
    };

    Ok(FitReport {
        n: stats.n,
        x_bar: stats.x_bar,
        y_bar: stats.y_bar,
        s_xx: stats.s_xx,
        s_yy: stats.s_yy,
        s_xy: stats.s_xy,
        rho: stats.rho,
        fits,
        oracle,
    })
}

pub fn render_json(report: &FitReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report fields are finite");
    s.push('\n');
    s
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

pub fn render_text(report: &FitReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "n           {}", report.n);
    let _ = writeln!(w, "x_bar       {}", report.x_bar);
    let _ = writeln!(w, "y_bar       {}", report.y_bar);
    let _ = writeln!(w, "s_xx        {}", report.s_xx);
    let _ = writeln!(w, "s_yy        {}", report.s_yy);
    let _ = writeln!(w, "s_xy        {}", report.s_xy);
    let _ = writeln!(w, "rho         {}", opt(report.rho));

    for fit in &report.fits {
        let _ = writeln!(w, "\n[{}]", fit.method);
        if let Some(err) = &fit.error {
            let _ = writeln!(w, "error       {err}");
            continue;
        }
        match fit.line(report.centroid()) {
            Some(FitLine::Sloped { intercept, slope }) => {
                let _ = writeln!(w, "line        y = {intercept} + {slope}*x");
                let _ = writeln!(w, "beta0       {intercept}");
                let _ = writeln!(w, "beta1       {slope}");
            }
            Some(FitLine::Vertical { x0 }) => {
                let _ = writeln!(w, "line        x = {x0}");
                let _ = writeln!(w, "vertical_x0 {x0}");
            }
            Some(FitLine::IsotropicDegenerate { x_bar, y_bar }) => {
                let _ = writeln!(w, "line        any line through ({x_bar}, {y_bar})");
            }
            None => {}
        }
        if let Some(d) = &fit.degeneracy {
            let _ = writeln!(w, "degeneracy  {d}");
        }
        let _ = writeln!(w, "sse_p       {}", opt(fit.sse_p));
    }

    if let Some(o) = &report.oracle {
        let _ = writeln!(w, "\n[oracle]");
        let _ = writeln!(w, "theta_star      {}", o.theta_star);
        let _ = writeln!(w, "sse_at_theta    {}", o.sse_at_theta);
        let _ = writeln!(w, "lambda_min      {}", o.lambda_min);
        let _ = writeln!(w, "lambda_max      {}", o.lambda_max);
        let _ = writeln!(w, "principal_angle {}", opt(o.principal_angle));
        let _ = writeln!(w, "delta.sse_eigen {:e}", o.delta.sse_eigen);
        let _ = writeln!(w, "delta.sse_scan  {:e}", o.delta.sse_scan);
        let _ = writeln!(
            w,
            "delta.angle     {}",
            o.delta
                .angle
                .map_or_else(|| "undefined".to_string(), |a| format!("{a:e}"))
        );
        let _ = writeln!(w, "agrees          {}", o.agrees);
    }
    out
}
