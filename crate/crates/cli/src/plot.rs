use std::io::{self, Write};

use perpfit_core::{DataSet, FitLine};

use crate::report::FitReport;

/// Tab-separated `x y foot_x foot_y distance`, one block per fitted method.
///
/// Comment lines start with `#`. Coordinates are written in shortest
/// round-trip form, so the first two columns reproduce the input exactly. An
/// isotropic fit has no unique line; its block carries only `x y`.
pub fn emit_plot_data<W: Write + ?Sized>(
    report: &FitReport,
    data: &DataSet,
    out: &mut W,
) -> io::Result<()> {
    writeln!(out, "# columns: x\ty\tfoot_x\tfoot_y\tdistance")?;
    for fit in &report.fits {
        let Some(line) = fit.line(report.centroid()) else {
            if let Some(err) = &fit.error {
                writeln!(out, "# method {}: no line ({err})", fit.method)?;
            }
            continue;
        };
        match line {
            FitLine::Sloped { intercept, slope } => {
                writeln!(
                    out,
                    "# method {}: y = beta0 + beta1*x, beta0={intercept}, beta1={slope}",
                    fit.method
                )?;
            }
            FitLine::Vertical { x0 } => {
                writeln!(
                    out,
                    "# method {}: x = vertical_x0, vertical_x0={x0}",
                    fit.method
                )?;
            }
            FitLine::IsotropicDegenerate { x_bar, y_bar } => {
                writeln!(out, "# method {}: isotropic, no unique line; every line through the centroid fits equally", fit.method)?;
                writeln!(out, "# centroid\t{x_bar}\t{y_bar}")?;
            }
        }
        for p in data.points() {
            match line.foot_of_perpendicular(*p) {
                Some((foot, dist)) => {
                    writeln!(out, "{}\t{}\t{}\t{}\t{}", p.x, p.y, foot.x, foot.y, dist)?
                }
                None => writeln!(out, "{}\t{}", p.x, p.y)?,
            }
        }
    }
    Ok(())
}
