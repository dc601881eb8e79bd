//! JSON run reports.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use steiner_cover::{
    AreaReport, ConjectureReport, ConjectureSuite, ConvexPolygon, CoverageReport, HullKind, OptimizationResult,
    Point, SteinerResult,
};

/// Version of the report layout below.
pub const REPORT_FORMAT_VERSION: &str = "1.0";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HullReport {
    pub vertices: Vec<Point>,
    pub ext_angles: Vec<f64>,
    pub hull_kind: HullKind,
    pub area: f64,
}

impl From<&ConvexPolygon> for HullReport {
    fn from(h: &ConvexPolygon) -> Self {
        HullReport {
            vertices: h.vertices().to_vec(),
            ext_angles: h.ext_angles().to_vec(),
            hull_kind: h.kind(),
            area: h.area(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotReport {
    pub output: String,
    pub circles: usize,
    pub bytes: usize,
}

/// Payload variants. The `kind` tag sits next to the payload fields, so a
/// Steiner report reads `{"kind":"steiner_result","center":[..],...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Hull(HullReport),
    SteinerResult(SteinerResult),
    AreaReport(AreaReport),
    CoverageReport(CoverageReport),
    OptimizationResult(OptimizationResult),
    ConjectureReport(ConjectureReport),
    ConjectureSuite(ConjectureSuite),
    Plot(PlotReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub spec_version: String,
    pub command: String,
    /// SHA-256 of the raw input bytes.
    pub inputs_digest: String,
    #[serde(flatten)]
    pub payload: Payload,
}

impl RunReport {
    pub fn new(command: &str, input: &[u8], payload: Payload) -> RunReport {
        RunReport {
            tool_version: steiner_cover::VERSION.to_string(),
            spec_version: REPORT_FORMAT_VERSION.to_string(),
            command: command.to_string(),
            inputs_digest: digest(input),
            payload,
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Writes finite floats with 17 significant digits in scientific notation,
/// which always parses back to the same value.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeventeenDigits;

impl serde_json::ser::Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

pub fn to_writer<W: Write, T: Serialize>(out: W, value: &T) -> serde_json::Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(out, SeventeenDigits);
    value.serialize(&mut ser)
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    to_writer(&mut buf, value).expect("serializing to memory");
    String::from_utf8(buf).expect("JSON is UTF-8")
}
