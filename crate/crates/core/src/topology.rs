//! Surface classification of surgery meshes and complexes.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::complex::{build_complex, CWComplex, CellId, ComplexError};
use crate::geometry::{perform_surgery, GeometryError, SurfaceMesh};
use crate::linkage::Linkage;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("mesh is not closed: edge {edge} lies on {faces} faces")]
    NotClosed { edge: String, faces: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// Closed orientable surface of the given genus.
    Surface { genus: u32 },
    NonOrientable { euler_characteristic: i64 },
    /// A closed curve (1-dimensional component).
    Circle,
    /// Higher-dimensional or otherwise unrecognized component.
    Unclassified,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Surface { genus: 0 } => f.write_str("sphere"),
            ComponentKind::Surface { genus: 1 } => f.write_str("torus"),
            ComponentKind::Surface { genus } => write!(f, "genus-{genus} surface"),
            ComponentKind::NonOrientable {
                euler_characteristic,
            } => write!(f, "non-orientable (χ={euler_characteristic})"),
            ComponentKind::Circle => f.write_str("circle"),
            ComponentKind::Unclassified => f.write_str("unclassified (dim ≥ 3)"),
        }
    }
}

impl ComponentKind {
    fn plural(&self, count: usize) -> String {
        match self {
            ComponentKind::Surface { genus: 0 } => format!("{count} spheres"),
            ComponentKind::Surface { genus: 1 } => format!("{count} tori"),
            ComponentKind::Circle => format!("{count} circles"),
            ComponentKind::Unclassified => self.to_string(),
            other => format!("{count} × {other}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Cell counts of the component by dimension.
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub genus: Option<u32>,
    pub kind: ComponentKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub linkage: Linkage,
    pub dimension: usize,
    pub f_vector: Vec<usize>,
    pub components: Vec<ComponentReport>,
    pub classification: String,
}

/// Classification string from per-component data: `sphere`, `torus`,
/// `genus-g surface`, and for several equal components `2 tori`,
/// `3 spheres`, `2 × genus-2 surface`. Mixed components are joined by ` + `.
pub fn classification(components: &[ComponentReport]) -> String {
    let Some(first) = components.first() else {
        return "empty".to_string();
    };
    if components.iter().all(|c| c.kind == first.kind) {
        if components.len() == 1 {
            first.kind.to_string()
        } else {
            first.kind.plural(components.len())
        }
    } else {
        components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn surface_component(f_vector: Vec<usize>, orientable: bool) -> ComponentReport {
    let chi = alternating_sum(&f_vector);
    let genus = (orientable && chi <= 2 && chi % 2 == 0).then(|| ((2 - chi) / 2) as u32);
    let kind = match genus {
        Some(g) => ComponentKind::Surface { genus: g },
        None => ComponentKind::NonOrientable {
            euler_characteristic: chi,
        },
    };
    ComponentReport {
        f_vector,
        euler_characteristic: chi,
        orientable,
        genus,
        kind,
    }
}

fn alternating_sum(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Components, Euler characteristics, orientability and genus of a closed
/// polygonal surface.
pub fn analyze(mesh: &SurfaceMesh) -> Result<TopologyReport, TopologyError> {
    let nv = mesh.vertices().len();
    let faces = mesh.faces();

    // Undirected edge -> (face, +1 if traversed from smaller to larger index).
    let mut sides: BTreeMap<(usize, usize), Vec<(usize, i8)>> = mesh
        .edges()
        .iter()
        .map(|e| (pair(e.endpoints.0, e.endpoints.1), Vec::new()))
        .collect();
    for (fi, face) in faces.iter().enumerate() {
        let k = face.cycle.len();
        for i in 0..k {
            let (a, b) = (face.cycle[i], face.cycle[(i + 1) % k]);
            let dir = if a < b { 1 } else { -1 };
            sides.entry(pair(a, b)).or_default().push((fi, dir));
        }
    }
    let edge_name = |&(a, b): &(usize, usize)| {
        format!("{}-{}", mesh.vertices()[a].label, mesh.vertices()[b].label)
    };
    if let Some((key, s)) = sides.iter().find(|(_, s)| s.len() != 2) {
        return Err(TopologyError::NotClosed {
            edge: edge_name(key),
            faces: s.len(),
        });
    }

    let mut uf = UnionFind::new(nv);
    for &(a, b) in sides.keys() {
        uf.union(a, b);
    }
    let (vertex_component, count) = uf.labels();
    let mut counts = vec![[0usize; 3]; count];
    for &c in &vertex_component {
        counts[c][0] += 1;
    }
    for &(a, _) in sides.keys() {
        counts[vertex_component[a]][1] += 1;
    }
    for face in faces {
        counts[vertex_component[face.cycle[0]]][2] += 1;
    }

    // Orientation propagation: each shared edge must be traversed in
    // opposite directions by its two faces.
    let mut neighbors: Vec<Vec<(usize, i8)>> = vec![Vec::new(); faces.len()];
    for s in sides.values() {
        let ((f, df), (g, dg)) = (s[0], s[1]);
        // o_g = relation * o_f makes the oriented traversals opposite.
        let relation = -df * dg;
        neighbors[f].push((g, relation));
        neighbors[g].push((f, relation));
    }
    let mut orientation = vec![0i8; faces.len()];
    let mut orientable = vec![true; count];
    for start in 0..faces.len() {
        if orientation[start] != 0 {
            continue;
        }
        orientation[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &(g, relation) in &neighbors[f] {
                let wanted = orientation[f] * relation;
                if orientation[g] == 0 {
                    orientation[g] = wanted;
                    queue.push_back(g);
                } else if orientation[g] != wanted {
                    orientable[vertex_component[faces[f].cycle[0]]] = false;
                }
            }
        }
    }

    let components: Vec<ComponentReport> = counts
        .iter()
        .zip(&orientable)
        .map(|(c, &o)| surface_component(c.to_vec(), o))
        .collect();
    Ok(TopologyReport {
        linkage: mesh.linkage().clone(),
        dimension: 2,
        f_vector: vec![nv, sides.len(), faces.len()],
        classification: classification(&components),
        components,
    })
}

/// Connected components of a complex via its 1-skeleton, with per-component
/// cell counts.
fn complex_components(complex: &CWComplex) -> (Vec<usize>, Vec<Vec<usize>>) {
    let nv = complex.cells(0).len();
    let mut uf = UnionFind::new(nv);
    for index in 0..complex.cells(1).len() {
        let ends = complex.boundary(CellId { dim: 1, index });
        for w in ends.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let (vertex_component, count) = uf.labels();
    let mut counts = vec![vec![0usize; complex.dimension() + 1]; count];
    for (id, _) in complex.iter() {
        let v = if id.dim == 0 {
            id.index
        } else {
            complex.vertices_of(id)[0]
        };
        counts[vertex_component[v]][id.dim] += 1;
    }
    (vertex_component, counts)
}

/// Builds the complex, runs the surgery for pentagons, and classifies.
/// Quadrilaterals yield circles; for six or more edges only the cell counts
/// and Euler characteristic are reported.
pub fn classify_linkage(linkage: &Linkage) -> Result<TopologyReport, ClassifyError> {
    if linkage.n() == 5 {
        let mesh = perform_surgery(linkage)?;
        return Ok(analyze(&mesh)?);
    }
    let complex = build_complex(linkage)?;
    let (vertex_component, counts) = complex_components(&complex);
    let components: Vec<ComponentReport> = if complex.dimension() == 1 {
        let mut degree = vec![0usize; complex.cells(0).len()];
        for index in 0..complex.cells(1).len() {
            for &v in complex.boundary(CellId { dim: 1, index }) {
                degree[v] += 1;
            }
        }
        counts
            .into_iter()
            .enumerate()
            .map(|(c, f)| {
                let is_cycle = degree
                    .iter()
                    .zip(&vertex_component)
                    .filter(|(_, &vc)| vc == c)
                    .all(|(&d, _)| d == 2);
                ComponentReport {
                    euler_characteristic: alternating_sum(&f),
                    f_vector: f,
                    orientable: true,
                    genus: None,
                    kind: if is_cycle {
                        ComponentKind::Circle
                    } else {
                        ComponentKind::Unclassified
                    },
                }
            })
            .collect()
    } else {
        counts
            .into_iter()
            .map(|f| ComponentReport {
                euler_characteristic: alternating_sum(&f),
                f_vector: f,
                orientable: true,
                genus: None,
                kind: ComponentKind::Unclassified,
            })
            .collect()
    };
    Ok(TopologyReport {
        linkage: linkage.clone(),
        dimension: complex.dimension(),
        f_vector: complex.f_vector(),
        classification: classification(&components),
        components,
    })
}

#[derive(Serialize)]
struct ComponentJson {
    f_vector: Vec<usize>,
    chi: i64,
    orientable: bool,
    genus: Option<u32>,
    classification: String,
}

#[derive(Serialize)]
struct ReportJson {
    schema: u32,
    linkage: String,
    dimension: usize,
    f_vector: Vec<usize>,
    components: usize,
    chi: i64,
    orientable: bool,
    genus: Vec<Option<u32>>,
    classification: String,
    per_component: Vec<ComponentJson>,
}

impl TopologyReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Total Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.components.iter().map(|c| c.euler_characteristic).sum()
    }

    pub fn orientable(&self) -> bool {
        self.components.iter().all(|c| c.orientable)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f: Vec<String> = self.f_vector.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "linkage        {}", self.linkage);
        let _ = writeln!(out, "dimension      {}", self.dimension);
        let _ = writeln!(out, "f-vector       ({})", f.join(", "));
        let _ = writeln!(out, "euler char     {}", self.euler_characteristic());
        let _ = writeln!(out, "components     {}", self.component_count());
        for (i, c) in self.components.iter().enumerate() {
            let f: Vec<String> = c.f_vector.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  #{}  f=({})  χ={}  {}  {}",
                i + 1,
                f.join(", "),
                c.euler_characteristic,
                if c.orientable { "orientable" } else { "non-orientable" },
                c.kind
            );
        }
        let _ = writeln!(out, "classification {}", self.classification);
        out
    }

    /// JSON with a stable field order.
    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            schema: 1,
            linkage: self.linkage.to_spec(),
            dimension: self.dimension,
            f_vector: self.f_vector.clone(),
            components: self.component_count(),
            chi: self.euler_characteristic(),
            orientable: self.orientable(),
            genus: self.components.iter().map(|c| c.genus).collect(),
            classification: self.classification.clone(),
            per_component: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    f_vector: c.f_vector.clone(),
                    chi: c.euler_characteristic,
                    orientable: c.orientable,
                    genus: c.genus,
                    classification: c.kind.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }
}
