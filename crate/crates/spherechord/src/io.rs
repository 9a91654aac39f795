//! Point-set interchange: JSON and CSV readers/writers.
//!
//! JSON: an object with keys `dimension` (int), `radius` (number, optional,
//! default 1.0), `center` (array, optional, default zeros), `points` (array
//! of arrays of numbers). Unknown keys (such as a generator's `metadata`
//! block) are ignored on read.
//!
//! CSV: one point per row, n columns, header row optional; the dimension is
//! inferred and the sphere defaults to the unit sphere at the origin.

use std::path::Path;

use serde_json::json;

use crate::core::PointConfig;
use crate::error::{Error, Result};
use crate::generators::GeneratedConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Guess the format from a file extension; `None` when unrecognized.
pub fn detect_format(path: &Path) -> Option<Format> {
    match path.extension()?.to_str()? {
        "json" => Some(Format::Json),
        "csv" => Some(Format::Csv),
        _ => None,
    }
}

pub fn parse_json(text: &str) -> Result<PointConfig> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_csv(text: &str) -> Result<PointConfig> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut dimension: Option<usize> = None;
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: std::result::Result<Vec<f64>, _> =
            fields.iter().map(|f| f.parse::<f64>()).collect();
        match parsed {
            Ok(row) => {
                match dimension {
                    None => dimension = Some(row.len()),
                    Some(n) if n != row.len() => {
                        return Err(Error::Parse(format!(
                            "line {}: expected {} columns, got {}",
                            line_no + 1,
                            n,
                            row.len()
                        )));
                    }
                    _ => {}
                }
                points.push(row);
            }
            Err(_) if points.is_empty() && dimension.is_none() => {
                // a non-numeric first row is a header; skip it
            }
            Err(e) => {
                return Err(Error::Parse(format!("line {}: {}", line_no + 1, e)));
            }
        }
    }
    let dimension = dimension.ok_or_else(|| Error::Parse("no data rows".into()))?;
    PointConfig::new(dimension, points)
}

/// Parse by explicit format.
pub fn parse(text: &str, format: Format) -> Result<PointConfig> {
    match format {
        Format::Json => parse_json(text),
        Format::Csv => parse_csv(text),
    }
}

/// Read a file, picking the format from the extension (JSON when unknown).
pub fn read_path(path: &Path) -> Result<PointConfig> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, detect_format(path).unwrap_or(Format::Json))
}

pub fn to_json_string(config: &PointConfig) -> String {
    let mut s = serde_json::to_string_pretty(config).expect("point config serializes");
    s.push('\n');
    s
}

/// Generated configurations carry their metadata block alongside the core
/// interchange keys.
pub fn generated_to_json_string(generated: &GeneratedConfig) -> String {
    let value = json!({
        "dimension": generated.config.dimension(),
        "radius": generated.config.radius(),
        "center": generated.config.center(),
        "points": generated.config.points(),
        "metadata": generated.metadata_value(),
    });
    let mut s = serde_json::to_string_pretty(&value).expect("generated config serializes");
    s.push('\n');
    s
}

pub fn to_csv_string(config: &PointConfig) -> String {
    let mut out = String::new();
    for p in config.points() {
        let row: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_with_metadata_ignored() {
        let text = r#"{
            "dimension": 2,
            "points": [[1.0, 0.0], [-1.0, 0.0]],
            "metadata": {"family": "polygon"}
        }"#;
        let config = parse_json(text).unwrap();
        assert_eq!(config.num_points(), 2);
        assert_eq!(config.radius(), 1.0);

        let serialized = to_json_string(&config);
        let back = parse_json(&serialized).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn csv_roundtrip_and_header() {
        let text = "x,y\n1,0\n0,1\n-1,0\n";
        let config = parse_csv(text).unwrap();
        assert_eq!(config.dimension(), 2);
        assert_eq!(config.num_points(), 3);

        let back = parse_csv(&to_csv_string(&config)).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn csv_bad_row_reports_line() {
        let err = parse_csv("1,0\n0,oops\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));

        let err = parse_csv("1,0\n0,1,2\n").unwrap_err();
        assert!(err.to_string().contains("columns"));
    }

    #[test]
    fn csv_float_roundtrip_is_exact() {
        let config = PointConfig::new(
            2,
            vec![vec![std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2]],
        )
        .unwrap();
        let back = parse_csv(&to_csv_string(&config)).unwrap();
        assert_eq!(back.points(), config.points());
    }
}
