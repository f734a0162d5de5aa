//! Realizing the complex of a pentagon as a polyhedral surface by surgery on
//! the 4-permutohedron.
//!
//! 1. Each vertex of the complex is placed at the permutohedron vertex with
//!    the same permutation label (cut the cyclic order at 5, drop 5).
//! 2. A facet labeled by the ordered partition `P` of `{1..4}` is kept iff
//!    `P` followed by `{5}` is admissible.
//! 3. Every admissible 2-cell whose part containing 5 has at least two
//!    elements is patched in as a "diagonal" face spanned by its vertices.
//!
//! Edges bounding no remaining face, and vertices on no remaining edge, are
//! then dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::complex::{build_complex, CWComplex, CellId};
use crate::linkage::Linkage;
use crate::partitions::{CyclicOrder, CyclicPartition};
use crate::rational::Rational;

use super::permutohedron::Permutohedron;
use super::projection::project_to_3d;
use super::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// A facet of the permutohedron kept in step 2.
    Permutohedron,
    /// A face patched in during step 3.
    Diagonal,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Permutohedron => "permutohedron",
            Provenance::Diagonal => "diagonal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshVertex {
    pub label: CyclicOrder,
    pub permutation: Vec<u8>,
    /// Exact position on the hyperplane `sum x_i = 10` of R^4.
    pub position: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshFace {
    pub label: CyclicPartition,
    /// Vertex indices in polygon order.
    pub cycle: Vec<usize>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshEdge {
    pub label: CyclicPartition,
    /// Vertex indices, smaller first.
    pub endpoints: (usize, usize),
}

/// What the surgery removed or added, by label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurgeryLog {
    pub removed_facets: Vec<CyclicPartition>,
    pub diagonal_faces: Vec<CyclicPartition>,
    pub pruned_edges: Vec<CyclicPartition>,
    pub pruned_vertices: Vec<CyclicOrder>,
}

/// An embedded polygonal surface. Vertices are sorted by permutation label,
/// faces and edges by label string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceMesh {
    linkage: Linkage,
    vertices: Vec<MeshVertex>,
    faces: Vec<MeshFace>,
    edges: Vec<MeshEdge>,
    log: SurgeryLog,
}

impl SurfaceMesh {
    /// Assembles a mesh from raw parts without running the surgery. No
    /// consistency checks are made.
    pub fn from_faces(
        linkage: Linkage,
        vertices: Vec<MeshVertex>,
        faces: Vec<MeshFace>,
        edges: Vec<MeshEdge>,
    ) -> Self {
        SurfaceMesh {
            linkage,
            vertices,
            faces,
            edges,
            log: SurgeryLog::default(),
        }
    }

    pub fn linkage(&self) -> &Linkage {
        &self.linkage
    }

    pub fn vertices(&self) -> &[MeshVertex] {
        &self.vertices
    }

    pub fn faces(&self) -> &[MeshFace] {
        &self.faces
    }

    pub fn edges(&self) -> &[MeshEdge] {
        &self.edges
    }

    pub fn log(&self) -> &SurgeryLog {
        &self.log
    }

    pub fn diagonal_faces(&self) -> impl Iterator<Item = &MeshFace> {
        self.faces
            .iter()
            .filter(|f| f.provenance == Provenance::Diagonal)
    }

    /// Position of vertex `i` in R^3. Rounds to floating point.
    pub fn position_3d(&self, i: usize) -> [f64; 3] {
        project_to_3d(&self.vertices[i].position).expect("mesh vertices lie on the hyperplane")
    }

    /// The same mesh with some face cycles reversed and the faces permuted.
    /// Used to check that analyses do not depend on these arbitrary choices.
    pub fn reoriented(&self, reverse: &[bool], order: &[usize]) -> SurfaceMesh {
        let faces = order
            .iter()
            .map(|&i| {
                let mut f = self.faces[i].clone();
                if reverse.get(i).copied().unwrap_or(false) {
                    f.cycle.reverse();
                }
                f
            })
            .collect();
        SurfaceMesh {
            faces,
            ..self.clone()
        }
    }
}

/// Walks a graph that must be a single simple cycle. Starts at the node with
/// the smallest key and heads toward its smaller neighbor. Returns the node
/// order and, for each step `i -> i+1` (wrapping), the arc used.
fn walk_cycle<K: Ord>(keys: &[K], arcs: &[(usize, usize)]) -> Result<(Vec<usize>, Vec<usize>), String> {
    let n = keys.len();
    if n < 3 || arcs.len() != n {
        return Err(format!("{} nodes but {} arcs", n, arcs.len()));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &(u, v)) in arcs.iter().enumerate() {
        if u == v {
            return Err("loop arc".into());
        }
        incident[u].push(a);
        incident[v].push(a);
    }
    if let Some(bad) = incident.iter().position(|inc| inc.len() != 2) {
        return Err(format!("node {bad} has degree {}", incident[bad].len()));
    }
    let other = |a: usize, u: usize| if arcs[a].0 == u { arcs[a].1 } else { arcs[a].0 };
    let start = (0..n).min_by(|&a, &b| keys[a].cmp(&keys[b])).expect("n >= 3");
    let first_arc = *incident[start]
        .iter()
        .min_by(|&&a, &&b| keys[other(a, start)].cmp(&keys[other(b, start)]))
        .expect("degree 2");

    let mut nodes = vec![start];
    let mut used = vec![first_arc];
    let mut current = other(first_arc, start);
    let mut arc = first_arc;
    while current != start {
        if nodes.len() == n {
            return Err("walk does not close".into());
        }
        nodes.push(current);
        arc = *incident[current].iter().find(|&&a| a != arc).expect("degree 2");
        used.push(arc);
        current = other(arc, current);
    }
    if nodes.len() != n {
        return Err(format!("cycle through {} of {} nodes", nodes.len(), n));
    }
    Ok((nodes, used))
}

/// The vertices of a 2-cell in polygon order together with the edge labels
/// between consecutive vertices (`edges[i]` joins `vertices[i]` and
/// `vertices[i + 1]`, wrapping).
pub fn boundary_cycle_with_edges(
    cell: &CyclicPartition,
    complex: &CWComplex,
) -> Result<(Vec<CyclicOrder>, Vec<CyclicPartition>), GeometryError> {
    let not_cycle = |reason: String| GeometryError::NotACycle {
        label: cell.to_string(),
        reason,
    };
    let id = complex
        .find(cell)
        .ok_or_else(|| not_cycle("not a cell of the complex".into()))?;
    if id.dim != 2 {
        return Err(not_cycle(format!("cell has dimension {}", id.dim)));
    }
    let nodes = cell.vertices();
    let position: HashMap<CyclicPartition, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, v)| (v.partition().clone(), i))
        .collect();
    let mut arcs = Vec::new();
    let mut arc_labels = Vec::new();
    for &e in complex.boundary(id) {
        let edge = CellId { dim: 1, index: e };
        let ends: Vec<usize> = complex
            .boundary(edge)
            .iter()
            .map(|&v| {
                position
                    .get(&complex.cells(0)[v].label)
                    .copied()
                    .ok_or_else(|| not_cycle("edge endpoint outside the cell".into()))
            })
            .collect::<Result<_, _>>()?;
        if ends.len() != 2 {
            return Err(not_cycle(format!(
                "edge {} has {} endpoints",
                complex.cell(edge).label,
                ends.len()
            )));
        }
        arcs.push((ends[0], ends[1]));
        arc_labels.push(complex.cell(edge).label.clone());
    }
    let keys: Vec<Vec<u8>> = nodes.iter().map(CyclicOrder::to_permutation).collect();
    let (order, used) = walk_cycle(&keys, &arcs).map_err(not_cycle)?;
    Ok((
        order.into_iter().map(|i| nodes[i].clone()).collect(),
        used.into_iter().map(|a| arc_labels[a].clone()).collect(),
    ))
}

/// The vertices of a 2-cell in polygon order, read off the 1-cells of the
/// complex that refine it.
pub fn boundary_cycle(
    cell: &CyclicPartition,
    complex: &CWComplex,
) -> Result<Vec<CyclicOrder>, GeometryError> {
    boundary_cycle_with_edges(cell, complex).map(|(v, _)| v)
}

fn ordered_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Runs the three surgery steps on the 4-permutohedron for a pentagon.
pub fn perform_surgery(linkage: &Linkage) -> Result<SurfaceMesh, GeometryError> {
    if linkage.n() != 5 {
        return Err(GeometryError::ArityMismatch {
            expected: 5,
            actual: linkage.n(),
        });
    }
    let complex = build_complex(linkage)?;
    let pi = Permutohedron::new(4)?;
    let admissible = |label: &CyclicPartition| {
        linkage
            .is_admissible_partition(label.parts())
            .expect("labels are partitions")
    };
    let mut log = SurgeryLog::default();

    // Step 1.
    let vertices: Vec<MeshVertex> = pi
        .vertices()
        .iter()
        .map(|v| MeshVertex {
            label: CyclicOrder::from_permutation(&v.permutation).expect("permutation of 1..4"),
            permutation: v.permutation.clone(),
            position: v.point.clone(),
        })
        .collect();
    let vertex_of: HashMap<CyclicPartition, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.label.partition().clone(), i))
        .collect();

    // Candidate edges keyed by endpoint pair; start with every permutohedron edge.
    let mut edges: BTreeMap<(usize, usize), CyclicPartition> = BTreeMap::new();
    for e in pi.edges() {
        let ends = pi.face_vertices(e);
        edges.insert(ordered_pair(ends[0], ends[1]), e.append_singleton());
    }

    // Step 2.
    let mut faces: Vec<MeshFace> = Vec::new();
    for facet in pi.facets() {
        let label = facet.append_singleton();
        if !admissible(&label) {
            log.removed_facets.push(label);
            continue;
        }
        let corners = pi.face_vertices(facet);
        let local: HashMap<usize, usize> = corners.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs: Vec<(usize, usize)> = pi
            .edges()
            .iter()
            .filter(|e| pi.contains(facet, e))
            .map(|e| {
                let ends = pi.face_vertices(e);
                (local[&ends[0]], local[&ends[1]])
            })
            .collect();
        let keys: Vec<&Vec<u8>> = corners.iter().map(|&v| &pi.vertices()[v].permutation).collect();
        let (order, _) = walk_cycle(&keys, &arcs).map_err(|reason| GeometryError::NotACycle {
            label: label.to_string(),
            reason,
        })?;
        faces.push(MeshFace {
            label,
            cycle: order.into_iter().map(|i| corners[i]).collect(),
            provenance: Provenance::Permutohedron,
        });
    }

    // Step 3.
    for cell in complex.cells(2) {
        if cell.label.last_part().len() < 2 {
            continue;
        }
        let (cycle, edge_labels) = boundary_cycle_with_edges(&cell.label, &complex)?;
        let cycle: Vec<usize> = cycle.iter().map(|v| vertex_of[v.partition()]).collect();
        for (i, label) in edge_labels.into_iter().enumerate() {
            let key = ordered_pair(cycle[i], cycle[(i + 1) % cycle.len()]);
            edges.entry(key).or_insert(label);
        }
        log.diagonal_faces.push(cell.label.clone());
        faces.push(MeshFace {
            label: cell.label.clone(),
            cycle,
            provenance: Provenance::Diagonal,
        });
    }

    // Pruning.
    let mut uses: BTreeMap<(usize, usize), usize> = edges.keys().map(|&k| (k, 0)).collect();
    for face in &faces {
        for i in 0..face.cycle.len() {
            let key = ordered_pair(face.cycle[i], face.cycle[(i + 1) % face.cycle.len()]);
            match uses.get_mut(&key) {
                Some(count) => *count += 1,
                None => {
                    return Err(GeometryError::NotAClosedSurface {
                        edge: format!("{}-{}", vertices[key.0].label, vertices[key.1].label),
                        faces: 0,
                    })
                }
            }
        }
    }
    let mut kept_edges = Vec::new();
    for (key, label) in edges {
        match uses[&key] {
            0 => log.pruned_edges.push(label),
            2 => kept_edges.push((key, label)),
            count => {
                return Err(GeometryError::NotAClosedSurface {
                    edge: label.to_string(),
                    faces: count,
                })
            }
        }
    }
    let mut on_edge = vec![false; vertices.len()];
    for ((a, b), _) in &kept_edges {
        on_edge[*a] = true;
        on_edge[*b] = true;
    }
    let mut remap = vec![usize::MAX; vertices.len()];
    let mut kept_vertices = Vec::new();
    for (i, v) in vertices.into_iter().enumerate() {
        if on_edge[i] {
            remap[i] = kept_vertices.len();
            kept_vertices.push(v);
        } else {
            log.pruned_vertices.push(v.label);
        }
    }

    let mut edges: Vec<MeshEdge> = kept_edges
        .into_iter()
        .map(|((a, b), label)| MeshEdge {
            label,
            endpoints: ordered_pair(remap[a], remap[b]),
        })
        .collect();
    edges.sort_by_cached_key(|e| e.label.to_string());
    for face in &mut faces {
        for v in &mut face.cycle {
            *v = remap[*v];
        }
    }
    faces.sort_by_cached_key(|f| f.label.to_string());
    log.removed_facets.sort_by_cached_key(|l| l.to_string());
    log.diagonal_faces.sort_by_cached_key(|l| l.to_string());
    log.pruned_edges.sort_by_cached_key(|l| l.to_string());

    Ok(SurfaceMesh {
        linkage: linkage.clone(),
        vertices: kept_vertices,
        faces,
        edges,
        log,
    })
}
