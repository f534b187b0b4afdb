use std::io;
use std::process;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use perpfit_cli::{run_fit, InputSource, Method, OutputFormat, RunConfig, EXIT_OK, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "perpfit",
    version,
    about = "Fit a straight line to 2-D data by minimizing squared perpendicular distances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a line to two-column CSV data
    Fit(FitArgs),
}

#[derive(Args)]
struct FitArgs {
    /// Input CSV path, or `-` for stdin
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = Method::Perp)]
    method: Method,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Skip the first row (otherwise a non-numeric first row is detected automatically)
    #[arg(long)]
    header: bool,
    /// Cross-check the closed form against the angle scan and eigen oracles
    #[arg(long)]
    self_check: bool,
    /// Relative tolerance for treating s_xy as zero and s_xx, s_yy as equal
    #[arg(long)]
    tol: Option<f64>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    let Command::Fit(args) = cli.command;
    let config = RunConfig {
        input: InputSource::parse(&args.input),
        method: args.method,
        output_format: args.format,
        has_header: args.header,
        self_check: args.self_check,
        tolerance_override: args.tol,
    };
    let code = run_fit(
        &config,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    process::exit(code);
}
