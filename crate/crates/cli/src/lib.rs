//! Library side of the `perpfit` command: CSV ingestion, fit reports and
//! plot-ready output. The binary in `main.rs` is a thin argument parser over
//! [`run_fit`].

mod csv_input;
mod json_float;
mod plot;
mod report;
mod run;

pub use csv_input::{parse_csv, ParseError};
pub use plot::emit_plot_data;
pub use report::{
    build_report, render_json, render_text, FitReport, MethodFit, OracleBlock, OracleDelta,
};
pub use run::{
    run_fit, InputSource, Method, OutputFormat, RunConfig, RunError, EXIT_DATA, EXIT_OK, EXIT_USAGE,
};
