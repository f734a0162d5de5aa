use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::geometry::{Projection, SurfaceMesh};
use crate::rational::Rational;
use crate::topology::analyze;

use super::IoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
    /// Exact R^4 coordinates plus the projection used for OBJ/PLY.
    Json,
}

impl FromStr for MeshFormat {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            "json" => Ok(MeshFormat::Json),
            _ => Err(IoError::UnsupportedFormat(s.to_string())),
        }
    }
}

/// Fixed six-decimal notation without negative zero.
fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn classification_of(mesh: &SurfaceMesh) -> String {
    analyze(mesh)
        .map(|r| r.classification)
        .unwrap_or_else(|e| format!("unclassified ({e})"))
}

/// Polygons to write: the face cycles, or fans from each cycle's first vertex.
fn polygons(mesh: &SurfaceMesh, triangulate: bool) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for (fi, face) in mesh.faces().iter().enumerate() {
        if triangulate {
            let c = &face.cycle;
            for i in 1..c.len() - 1 {
                out.push((fi, vec![c[0], c[i], c[i + 1]]));
            }
        } else {
            out.push((fi, face.cycle.clone()));
        }
    }
    out
}

fn to_obj(mesh: &SurfaceMesh, triangulate: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# polylink surgery mesh");
    let _ = writeln!(out, "# linkage {}", mesh.linkage().to_spec());
    let _ = writeln!(out, "# classification {}", classification_of(mesh));
    let _ = writeln!(
        out,
        "# vertices {} edges {} faces {}",
        mesh.vertices().len(),
        mesh.edges().len(),
        mesh.faces().len()
    );
    for i in 0..mesh.vertices().len() {
        let p = mesh.position_3d(i);
        let _ = writeln!(out, "v {} {} {}", fixed6(p[0]), fixed6(p[1]), fixed6(p[2]));
    }
    let mut last_face = usize::MAX;
    for (fi, poly) in polygons(mesh, triangulate) {
        if fi != last_face {
            let face = &mesh.faces()[fi];
            let _ = writeln!(out, "# face {} {}", face.label, face.provenance);
            last_face = fi;
        }
        let idx: Vec<String> = poly.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "f {}", idx.join(" "));
    }
    out
}

fn to_ply(mesh: &SurfaceMesh, triangulate: bool) -> String {
    let polys = polygons(mesh, triangulate);
    let mut out = String::new();
    let _ = writeln!(out, "ply");
    let _ = writeln!(out, "format ascii 1.0");
    let _ = writeln!(out, "comment polylink surgery mesh");
    let _ = writeln!(out, "comment linkage {}", mesh.linkage().to_spec());
    let _ = writeln!(out, "comment classification {}", classification_of(mesh));
    for (i, face) in mesh.faces().iter().enumerate() {
        let _ = writeln!(out, "comment face {} {} {}", i, face.label, face.provenance);
    }
    let _ = writeln!(out, "element vertex {}", mesh.vertices().len());
    for axis in ["x", "y", "z"] {
        let _ = writeln!(out, "property double {axis}");
    }
    let _ = writeln!(out, "element face {}", polys.len());
    let _ = writeln!(out, "property list uchar int vertex_indices");
    let _ = writeln!(out, "end_header");
    for i in 0..mesh.vertices().len() {
        let p = mesh.position_3d(i);
        let _ = writeln!(out, "{} {} {}", fixed6(p[0]), fixed6(p[1]), fixed6(p[2]));
    }
    for (_, poly) in polys {
        let idx: Vec<String> = poly.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{} {}", poly.len(), idx.join(" "));
    }
    out
}

#[derive(Serialize)]
struct ProjectionJson {
    origin: Vec<String>,
    axes: Vec<Vec<String>>,
    axis_norms_sq: Vec<String>,
}

#[derive(Serialize)]
struct VertexJson {
    label: String,
    permutation: Vec<u8>,
    position: Vec<String>,
}

#[derive(Serialize)]
struct EdgeJson {
    label: String,
    endpoints: [usize; 2],
}

#[derive(Serialize)]
struct FaceJson {
    label: String,
    provenance: String,
    cycle: Vec<usize>,
}

#[derive(Serialize)]
struct MeshJson {
    schema: u32,
    linkage: String,
    classification: String,
    projection: ProjectionJson,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    faces: Vec<FaceJson>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn to_json(mesh: &SurfaceMesh) -> String {
    let projection = Projection::permutohedron4();
    let doc = MeshJson {
        schema: 1,
        linkage: mesh.linkage().to_spec(),
        classification: classification_of(mesh),
        projection: ProjectionJson {
            origin: strings(projection.origin()),
            axes: projection.axes().iter().map(|a| strings(a)).collect(),
            axis_norms_sq: strings(projection.axis_norms_sq()),
        },
        vertices: mesh
            .vertices()
            .iter()
            .map(|v| VertexJson {
                label: v.label.to_string(),
                permutation: v.permutation.clone(),
                position: strings(&v.position),
            })
            .collect(),
        edges: mesh
            .edges()
            .iter()
            .map(|e| EdgeJson {
                label: e.label.to_string(),
                endpoints: [e.endpoints.0, e.endpoints.1],
            })
            .collect(),
        faces: mesh
            .faces()
            .iter()
            .map(|f| FaceJson {
                label: f.label.to_string(),
                provenance: f.provenance.to_string(),
                cycle: f.cycle.clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("mesh serializes") + "\n"
}

/// Serializes a mesh. OBJ and PLY carry 3D coordinates with six decimals;
/// JSON carries exact R^4 coordinates. Faces are written as polygons, or as
/// triangle fans from the first cycle vertex when `triangulate` is set
/// (ignored for JSON).
pub fn export_mesh(mesh: &SurfaceMesh, format: MeshFormat, triangulate: bool) -> Result<Vec<u8>, IoError> {
    let text = match format {
        MeshFormat::Obj => to_obj(mesh, triangulate),
        MeshFormat::Ply => to_ply(mesh, triangulate),
        MeshFormat::Json => to_json(mesh),
    };
    Ok(text.into_bytes())
}
