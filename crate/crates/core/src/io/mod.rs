//! Serialization: mesh export, complex JSON, table rendering and the
//! verification harness behind `linkctl`.

mod complex_json;
mod mesh_export;
mod tables;
mod verify;

use std::path::Path;

use thiserror::Error;

pub use complex_json::{export_complex_json, import_complex_json};
pub use mesh_export::{export_mesh, MeshFormat};
pub use tables::{render_tables, render_tables_with};
pub use verify::{verify_all, verify_with, Observed, VerifyLine, VerifyReport};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("unsupported format `{0}` (expected obj, ply or json)")]
    UnsupportedFormat(String),
    #[error("cannot write `{path}`: {source}")]
    IoFailure {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Writes `bytes` to `path`.
pub fn write_output(path: &Path, bytes: &[u8]) -> Result<(), IoError> {
    std::fs::write(path, bytes).map_err(|source| IoError::IoFailure {
        path: path.display().to_string(),
        source,
    })
}
