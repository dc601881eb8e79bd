//! Point-set ingestion.
//!
//! JSON documents look like `{"dim": 2, "points": [[x, y], ...], "name": "..."}`.
//! CSV input has one point per line; the dimension is the column count.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use steiner_cover::{Dim, Point, PointSet};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Json,
    Csv,
}

impl InputFormat {
    /// `.csv` files are CSV, everything else is JSON.
    pub fn from_path(path: &Path) -> InputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => InputFormat::Csv,
            _ => InputFormat::Json,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl InputDocument {
    pub fn from_point_set(ps: &PointSet) -> InputDocument {
        InputDocument {
            dim: ps.dim().n(),
            points: ps.points().iter().map(|p| p.coords().to_vec()).collect(),
            name: None,
        }
    }

    pub fn into_point_set(self) -> Result<PointSet, CliError> {
        let dim = Dim::try_from(self.dim)?;
        let mut pts = Vec::with_capacity(self.points.len());
        for (i, c) in self.points.iter().enumerate() {
            if c.len() != dim.n() {
                return Err(CliError::Parse(format!(
                    "point {} has {} coordinates, expected {}",
                    i + 1,
                    c.len(),
                    dim.n()
                )));
            }
            pts.push(Point::new(c)?);
        }
        if pts.is_empty() {
            return Err(CliError::Parse("at least one point required".into()));
        }
        Ok(PointSet::new(dim, pts)?)
    }
}

pub fn parse_points<R: Read>(reader: R, format: InputFormat) -> Result<PointSet, CliError> {
    match format {
        InputFormat::Json => {
            let doc: InputDocument =
                serde_json::from_reader(reader).map_err(|e| CliError::Parse(format!("invalid JSON input: {e}")))?;
            doc.into_point_set()
        }
        InputFormat::Csv => parse_csv(reader),
    }
}

fn parse_csv<R: Read>(reader: R) -> Result<PointSet, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut width = None;
    let mut pts = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| CliError::Parse(format!("malformed CSV: {e}")))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(|f| f.is_empty()) {
            continue;
        }
        let coords = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| CliError::Parse(format!("line {line}: {e}")))?;
        match width {
            None => width = Some(coords.len()),
            Some(w) if w != coords.len() => {
                return Err(CliError::Parse(format!(
                    "line {line}: expected {w} columns, found {}",
                    coords.len()
                )))
            }
            _ => {}
        }
        pts.push(Point::new(&coords).map_err(|e| CliError::Parse(format!("line {line}: {e}")))?);
    }
    let Some(w) = width else {
        return Err(CliError::Parse("at least one point required".into()));
    };
    Ok(PointSet::new(Dim::try_from(w)?, pts)?)
}

/// Reads a point set from a file, or standard input for `-`. Returns the raw
/// bytes as well, for the report digest.
pub fn read_input(path: &Path, format: Option<InputFormat>) -> Result<(PointSet, Vec<u8>), CliError> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    let format = format.unwrap_or_else(|| InputFormat::from_path(path));
    let ps = parse_points(bytes.as_slice(), format)?;
    Ok((ps, bytes))
}

/// Parses `X,Y` or `X,Y,Z`.
pub fn parse_omega(s: &str) -> Result<Point, CliError> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| CliError::Parse(format!("--omega {s:?}: {e}")))?;
    Ok(Point::new(&coords)?)
}
