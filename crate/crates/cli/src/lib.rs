//! File ingestion, JSON reports, SVG rendering and the `steiner-cover`
//! command line.

pub mod cli;
pub mod io;
pub mod report;
pub mod svg;

pub use cli::run;
pub use io::{parse_points, InputDocument, InputFormat};
pub use report::{Payload, RunReport};
pub use svg::render_svg;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] steiner_cover::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("{0}")]
    Domain(String),
}
