//! Geometric realization: the permutohedron, its projection to R^3, and the
//! surgery producing a polyhedral surface for pentagons.

mod permutohedron;
mod projection;
mod surgery;

use thiserror::Error;

use crate::complex::ComplexError;

pub use permutohedron::{vertex_point, Permutohedron, PermutohedronVertex, MAX_PERMUTOHEDRON};
pub use projection::{project_to_3d, Projection};
pub use surgery::{
    boundary_cycle, boundary_cycle_with_edges, perform_surgery, MeshEdge, MeshFace, MeshVertex,
    Provenance, SurfaceMesh, SurgeryLog,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("permutohedra are supported for 2 <= m <= {MAX_PERMUTOHEDRON}, got m = {0}")]
    UnsupportedDimension(usize),
    #[error("point is off the permutohedron hyperplane: {0}")]
    OffHyperplane(String),
    #[error("surgery needs a linkage with {expected} edges, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("edge {edge} lies on {faces} faces instead of 2")]
    NotAClosedSurface { edge: String, faces: usize },
    #[error("boundary of {label} is not a simple cycle: {reason}")]
    NotACycle { label: String, reason: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
