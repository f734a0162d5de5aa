//! The permutohedron and its face lattice.
//!
//! Faces of the `m`-permutohedron are labeled by ordered partitions of
//! `{1..m}`; a `k`-face has `m - k` parts. The vertex labeled by the linear
//! order `(a_1, ..., a_m)` is the point `x` with `x[a_i] = i`, so that the
//! vertices of the face `(B_1, ..., B_r)` are exactly the linear orders listing
//! `B_1` first, then `B_2`, and so on. That face is cut out by the supporting
//! hyperplanes `sum_{j in B_1 ∪ ... ∪ B_s} x_j = 1 + 2 + ... + |B_1 ∪ ... ∪ B_s|`.

use std::collections::HashMap;

use crate::partitions::{enumerate_ordered_partitions, OrderedPartition};
use crate::rational::Rational;
use crate::subset::Subset;

use super::GeometryError;

/// Largest supported dimension parameter.
pub const MAX_PERMUTOHEDRON: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutohedronVertex {
    pub permutation: Vec<u8>,
    pub point: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub struct Permutohedron {
    m: usize,
    vertices: Vec<PermutohedronVertex>,
    vertex_index: HashMap<Vec<u8>, usize>,
    /// `faces[k]`: the `k`-faces, i.e. ordered partitions into `m - k` parts.
    faces: Vec<Vec<OrderedPartition>>,
}

/// Point of the vertex labeled by the linear order `permutation`.
pub fn vertex_point(permutation: &[u8]) -> Vec<Rational> {
    let mut point = vec![Rational::zero(); permutation.len()];
    for (position, &element) in permutation.iter().enumerate() {
        point[element as usize - 1] = Rational::from_integer(position as i64 + 1);
    }
    point
}

impl Permutohedron {
    pub fn new(m: usize) -> Result<Self, GeometryError> {
        if !(2..=MAX_PERMUTOHEDRON).contains(&m) {
            return Err(GeometryError::UnsupportedDimension(m));
        }
        let faces: Vec<Vec<OrderedPartition>> = (0..m)
            .map(|k| enumerate_ordered_partitions(m, m - k))
            .collect();
        let mut vertices: Vec<PermutohedronVertex> = faces[0]
            .iter()
            .map(|p| {
                let permutation: Vec<u8> = p
                    .parts()
                    .iter()
                    .map(|s| s.min_element().expect("singleton"))
                    .collect();
                let point = vertex_point(&permutation);
                PermutohedronVertex { permutation, point }
            })
            .collect();
        vertices.sort_by(|a, b| a.permutation.cmp(&b.permutation));
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.permutation.clone(), i))
            .collect();
        Ok(Permutohedron {
            m,
            vertices,
            vertex_index,
            faces,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Vertices sorted by permutation label.
    pub fn vertices(&self) -> &[PermutohedronVertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, permutation: &[u8]) -> Option<usize> {
        self.vertex_index.get(permutation).copied()
    }

    /// The `k`-faces.
    pub fn faces(&self, k: usize) -> &[OrderedPartition] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn edges(&self) -> &[OrderedPartition] {
        self.faces(1)
    }

    /// Faces of codimension one.
    pub fn facets(&self) -> &[OrderedPartition] {
        self.faces(self.m - 2)
    }

    /// Face counts `f_0, f_1, ..., f_{m-1}` (the last is the polytope itself).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Indices of the vertices of a face.
    pub fn face_vertices(&self, face: &OrderedPartition) -> Vec<usize> {
        let mut out: Vec<usize> = face
            .linear_refinements()
            .iter()
            .map(|p| self.vertex_index[p])
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether `sub` is a face of `face`.
    pub fn contains(&self, face: &OrderedPartition, sub: &OrderedPartition) -> bool {
        sub.refines(face).unwrap_or(false)
    }

    /// The intersection of two faces: the coarsest ordered partition refining
    /// both, or `None` if the faces are disjoint.
    pub fn intersection(
        &self,
        a: &OrderedPartition,
        b: &OrderedPartition,
    ) -> Option<OrderedPartition> {
        // Nonempty blocks A_i ∩ B_j ordered by i; their j must not decrease.
        let mut blocks: Vec<(usize, usize, Subset)> = Vec::new();
        for (i, pa) in a.parts().iter().enumerate() {
            for (j, pb) in b.parts().iter().enumerate() {
                let common = pa.intersection(*pb);
                if !common.is_empty() {
                    blocks.push((i, j, common));
                }
            }
        }
        if blocks.windows(2).any(|w| w[1].1 < w[0].1) {
            return None;
        }
        OrderedPartition::new(self.m, blocks.into_iter().map(|(_, _, s)| s).collect()).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn op(s: &str) -> OrderedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn face_counts() {
        let p4 = Permutohedron::new(4).unwrap();
        assert_eq!(p4.f_vector(), vec![24, 36, 14, 1]);
        let p2 = Permutohedron::new(2).unwrap();
        assert_eq!(p2.f_vector(), vec![2, 1]);
        assert!(matches!(Permutohedron::new(1), Err(GeometryError::UnsupportedDimension(1))));
        assert!(matches!(Permutohedron::new(8), Err(GeometryError::UnsupportedDimension(8))));
    }

    #[test]
    fn identity_vertex_is_identity_point() {
        let p4 = Permutohedron::new(4).unwrap();
        let v = &p4.vertices()[p4.vertex_index(&[1, 2, 3, 4]).unwrap()];
        assert_eq!(v.point, [1, 2, 3, 4].map(Rational::from_integer).to_vec());
        for v in p4.vertices() {
            let sum: Rational = v.point.iter().sum();
            assert_eq!(sum, Rational::from_integer(10));
        }
    }

    #[test]
    fn faces_lie_on_supporting_hyperplanes() {
        let p4 = Permutohedron::new(4).unwrap();
        for k in 0..3 {
            for face in p4.faces(k) {
                let verts = p4.face_vertices(face);
                let expected: usize = face.parts().iter().map(|p| (1..=p.len()).product::<usize>()).product();
                assert_eq!(verts.len(), expected);
                let mut prefix = Subset::EMPTY;
                for part in &face.parts()[..face.len() - 1] {
                    prefix = prefix.union(*part);
                    let target = Rational::from_integer((prefix.len() * (prefix.len() + 1) / 2) as i64);
                    for &v in &verts {
                        let s: Rational = prefix
                            .iter()
                            .map(|j| &p4.vertices()[v].point[j as usize - 1])
                            .sum();
                        assert_eq!(s, target, "{face}");
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_matches_vertex_sets() {
        let p4 = Permutohedron::new(4).unwrap();
        let all: Vec<&OrderedPartition> = (0..4).flat_map(|k| p4.faces(k)).collect();
        for a in p4.facets() {
            for b in &all {
                let common: BTreeSet<usize> = p4
                    .face_vertices(a)
                    .into_iter()
                    .filter(|v| p4.face_vertices(b).contains(v))
                    .collect();
                match p4.intersection(a, b) {
                    None => assert!(common.is_empty(), "{a} ∩ {b}"),
                    Some(f) => {
                        let fv: BTreeSet<usize> = p4.face_vertices(&f).into_iter().collect();
                        assert_eq!(fv, common, "{a} ∩ {b} = {f}");
                        assert!(p4.contains(a, &f) && p4.contains(b, &f));
                    }
                }
            }
        }
        assert_eq!(
            p4.intersection(&op("{1}{2,3,4}"), &op("{1,2}{3,4}")),
            Some(op("{1}{2}{3,4}"))
        );
        assert_eq!(p4.intersection(&op("{1}{2,3,4}"), &op("{2,3,4}{1}")), None);
    }
}
