use std::io::{BufRead, BufReader, Read};

use perpfit_core::{DataPoint, DataSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: expected 2 columns, found {found}")]
    ColumnCount { line: u64, found: usize },
    #[error("line {line}, column {column}: cannot parse {text:?} as a number")]
    BadNumber {
        line: u64,
        column: usize,
        text: String,
    },
    #[error("line {line}, column {column}: value {text:?} is not finite")]
    NonFinite {
        line: u64,
        column: usize,
        text: String,
    },
    #[error("input contains no data rows")]
    Empty,
    #[error("failed to read input: {0}")]
    Read(String),
}

fn looks_like_header(fields: &[&str]) -> bool {
    fields.iter().all(|f| f.parse::<f64>().is_err())
}

fn parse_field(text: &str, line: u64, column: usize) -> Result<f64, ParseError> {
    let v: f64 = text.parse().map_err(|_| ParseError::BadNumber {
        line,
        column,
        text: text.to_string(),
    })?;
    if !v.is_finite() {
        return Err(ParseError::NonFinite {
            line,
            column,
            text: text.to_string(),
        });
    }
    Ok(v)
}

/// Reads `x,y` rows.
///
/// With `has_header` the first non-blank row is skipped. Without it, a first
/// row in which no field parses as a number is taken to be a header. Blank
/// lines are ignored; order and duplicates are preserved.
pub fn parse_csv<R: Read>(source: R, has_header: bool) -> Result<DataSet, ParseError> {
    let mut points = Vec::new();
    let mut seen_first = false;
    for (idx, text) in BufReader::new(source).lines().enumerate() {
        let text = text.map_err(|e| ParseError::Read(e.to_string()))?;
        let line = idx as u64 + 1;
        let text = text.trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if !seen_first {
            seen_first = true;
            if has_header || (fields.len() == 2 && looks_like_header(&fields)) {
                continue;
            }
        }
        if fields.len() != 2 {
            return Err(ParseError::ColumnCount {
                line,
                found: fields.len(),
            });
        }
        let x = parse_field(fields[0], line, 1)?;
        let y = parse_field(fields[1], line, 2)?;
        points.push(DataPoint::new(x, y));
    }
    if points.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(DataSet::new(points).expect("parsed values are finite"))
}
