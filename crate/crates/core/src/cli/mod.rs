//! Graph files, polynomial output, the verification harness and SVG
//! rendering behind the `arrangeproj` binary.

mod commands;
mod graph_file;
mod render;
mod verify;

use thiserror::Error;

pub use commands::{char_poly_by, cmd_charpoly, cmd_regions, emit_polynomial, resolve_point, Method};
pub use graph_file::{parse_graph_file, parse_graph_str, serialize_graph, GraphFile, GraphFileError};
pub use render::cmd_render;
pub use verify::{
    ceiling, cmd_verify, CheckResult, Family, VerificationReport, DEFAULT_CEILING, EXHAUSTIVE_ALL_GRAPHS_CEILING,
    MAX_N_ENV,
};

use crate::geometry::GeometryError;
use crate::nui::NuiError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error(transparent)]
    GraphFile(#[from] GraphFileError),
    #[error(transparent)]
    Nui(#[from] NuiError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("rendering needs exactly 3 vertices, got {0}")]
    UnsupportedDimension(usize),
    #[error("max_n {max_n} is outside 1..={ceiling} for family {family}; set ARRANGEPROJ_MAX_N to raise the ceiling")]
    CeilingExceeded { family: String, max_n: usize, ceiling: usize },
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}
