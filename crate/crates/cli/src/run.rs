use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use perpfit_core::{DataSet, DEFAULT_DEGENERACY_TOL};
use thiserror::Error;

use crate::csv_input::{parse_csv, ParseError};
use crate::plot::emit_plot_data;
use crate::report::{build_report, render_json, render_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Perp,
    Ols,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    PlotData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
}

impl InputSource {
    /// `-` selects standard input.
    pub fn parse(arg: &str) -> Self {
        if arg == "-" {
            InputSource::Stdin
        } else {
            InputSource::Path(PathBuf::from(arg))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub method: Method,
    pub output_format: OutputFormat,
    pub has_header: bool,
    pub self_check: bool,
    /// Replaces the relative degeneracy tolerance of the perpendicular fit.
    pub tolerance_override: Option<f64>,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Fit(#[from] perpfit_core::Error),
    #[error("no method produced a fit: {}", .0.join("; "))]
    NoFit(Vec<String>),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        }
    }
}

fn read_data(config: &RunConfig, stdin: &mut dyn Read) -> Result<DataSet, RunError> {
    match &config.input {
        InputSource::Stdin => Ok(parse_csv(stdin, config.has_header)?),
        InputSource::Path(p) => {
            let file = File::open(p).map_err(|source| RunError::Io {
                path: p.display().to_string(),
                source,
            })?;
            Ok(parse_csv(file, config.has_header)?)
        }
    }
}

fn execute(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), RunError> {
    let tol = match config.tolerance_override {
        None => DEFAULT_DEGENERACY_TOL,
        Some(t) if t.is_finite() && t > 0.0 => t,
        Some(t) => {
            return Err(RunError::Usage(format!(
                "--tol must be positive and finite, got {t}"
            )))
        }
    };
    let data = read_data(config, stdin)?;
    let report = build_report(&data, config.method, config.self_check, tol)?;

    for fit in &report.fits {
        if let Some(err) = &fit.error {
            let _ = writeln!(stderr, "warning: method {} failed: {err}", fit.method);
        }
    }
    if let Some(o) = &report.oracle {
        if !o.agrees {
            let _ = writeln!(stderr, "warning: self-check disagreement: {:?}", o.delta);
        }
    }

    let written = match config.output_format {
        OutputFormat::Text => stdout.write_all(render_text(&report).as_bytes()),
        OutputFormat::Json => stdout.write_all(render_json(&report).as_bytes()),
        OutputFormat::PlotData => emit_plot_data(&report, &data, stdout),
    };
    written.map_err(|source| RunError::Io {
        path: "<stdout>".to_string(),
        source,
    })
}

/// Executes one run and returns the process exit code: 0 on success
/// (degenerate fits included), 1 on usage errors, 2 on data or parse errors.
pub fn run_fit(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
