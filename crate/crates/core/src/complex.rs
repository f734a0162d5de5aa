//! The CW complex whose cells are the admissible cyclically ordered
//! partitions of a generic linkage.
//!
//! A cell labeled by a partition into `m` parts has dimension `n - m`. A cell
//! lies in the boundary of another iff its label is finer. Only codimension-one
//! boundaries are stored; closures are derived on demand.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::linkage::Linkage;
use crate::partitions::{enumerate_cyclic_partitions, CyclicPartition};

/// Smallest number of edges for which a complex is built.
pub const MIN_EDGES: usize = 4;
/// Largest number of edges for which a complex is built.
pub const MAX_EDGES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complexes are built for {MIN_EDGES} <= n <= {MAX_EDGES} edges, got n = {0}")]
    UnsupportedSize(usize),
    #[error("expected a linkage with {expected} edges, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("inconsistent complex data: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub label: CyclicPartition,
    pub dim: usize,
}

/// Position of a cell: its dimension and its index among cells of that
/// dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct CWComplex {
    linkage: Linkage,
    cells_by_dim: Vec<Vec<Cell>>,
    /// `boundary[d][i]`: indices into `cells_by_dim[d - 1]`; empty for `d = 0`.
    boundary: Vec<Vec<Vec<usize>>>,
    index: HashMap<CyclicPartition, CellId>,
}

impl PartialEq for CWComplex {
    fn eq(&self, other: &Self) -> bool {
        self.linkage == other.linkage
            && self.cells_by_dim == other.cells_by_dim
            && self.boundary == other.boundary
    }
}

impl Eq for CWComplex {}

/// Builds the complex of a linkage with `4 <= n <= 8` edges. Cells of each
/// dimension are sorted by their label string.
pub fn build_complex(linkage: &Linkage) -> Result<CWComplex, ComplexError> {
    let n = linkage.n();
    if !(MIN_EDGES..=MAX_EDGES).contains(&n) {
        return Err(ComplexError::UnsupportedSize(n));
    }
    let top = n - 3;
    let mut cells_by_dim = Vec::with_capacity(top + 1);
    for dim in 0..=top {
        let cells: Vec<Cell> = enumerate_cyclic_partitions(n, n - dim)
            .expect("3 <= m <= n")
            .into_iter()
            .filter(|c| {
                linkage
                    .is_admissible_partition(c.parts())
                    .expect("enumerated labels are partitions")
            })
            .map(|label| Cell { label, dim })
            .collect();
        cells_by_dim.push(cells);
    }
    let index = index_cells(&cells_by_dim);

    let mut boundary: Vec<Vec<Vec<usize>>> =
        cells_by_dim.iter().map(|cells| vec![Vec::new(); cells.len()]).collect();
    for dim in 1..=top {
        for (lower, cell) in cells_by_dim[dim - 1].iter().enumerate() {
            for up in cell.label.coarsenings().expect("at least 4 parts") {
                if let Some(id) = index.get(&up) {
                    debug_assert_eq!(id.dim, dim);
                    boundary[dim][id.index].push(lower);
                }
            }
        }
    }
    for lists in &mut boundary {
        for list in lists {
            list.sort_unstable();
        }
    }

    Ok(CWComplex {
        linkage: linkage.clone(),
        cells_by_dim,
        boundary,
        index,
    })
}

fn index_cells(cells_by_dim: &[Vec<Cell>]) -> HashMap<CyclicPartition, CellId> {
    cells_by_dim
        .iter()
        .enumerate()
        .flat_map(|(dim, cells)| {
            cells
                .iter()
                .enumerate()
                .map(move |(index, c)| (c.label.clone(), CellId { dim, index }))
        })
        .collect()
}

/// Alternating sum of the cell counts.
pub fn euler_characteristic(complex: &CWComplex) -> i64 {
    complex.euler_characteristic()
}

impl CWComplex {
    /// Reassembles a complex from stored cells and boundary lists, checking
    /// that every label is admissible, has the right dimension, and that each
    /// boundary entry is a one-step refinement.
    pub fn from_parts(
        linkage: Linkage,
        cells_by_dim: Vec<Vec<Cell>>,
        boundary: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, ComplexError> {
        let n = linkage.n();
        let invalid = |msg: String| Err(ComplexError::Invalid(msg));
        if cells_by_dim.len() != boundary.len() {
            return invalid("boundary lists do not match the dimensions".into());
        }
        for (dim, cells) in cells_by_dim.iter().enumerate() {
            if boundary[dim].len() != cells.len() {
                return invalid(format!("dimension {dim}: wrong number of boundary lists"));
            }
            for (i, cell) in cells.iter().enumerate() {
                if cell.dim != dim || cell.label.n() != n || cell.label.dim() != dim {
                    return invalid(format!("cell {} filed under dimension {dim}", cell.label));
                }
                if !linkage
                    .is_admissible_partition(cell.label.parts())
                    .map_err(|e| ComplexError::Invalid(e.to_string()))?
                {
                    return invalid(format!("label {} is not admissible", cell.label));
                }
                for &b in &boundary[dim][i] {
                    let ok = dim > 0
                        && b < cells_by_dim[dim - 1].len()
                        && cells_by_dim[dim - 1][b].label.refines(&cell.label) == Ok(true);
                    if !ok {
                        return invalid(format!("bad boundary entry {b} of {}", cell.label));
                    }
                }
            }
        }
        let index = index_cells(&cells_by_dim);
        if index.len() != cells_by_dim.iter().map(Vec::len).sum::<usize>() {
            return invalid("duplicate cell labels".into());
        }
        Ok(CWComplex {
            linkage,
            cells_by_dim,
            boundary,
            index,
        })
    }

    pub fn linkage(&self) -> &Linkage {
        &self.linkage
    }

    pub fn n(&self) -> usize {
        self.linkage.n()
    }

    /// Dimension of the top cells, `n - 3`.
    pub fn dimension(&self) -> usize {
        self.cells_by_dim.len() - 1
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells_by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cells_by_dim(&self) -> &[Vec<Cell>] {
        &self.cells_by_dim
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells_by_dim[id.dim][id.index]
    }

    /// Every cell with its id, by dimension then index.
    pub fn iter(&self) -> impl Iterator<Item = (CellId, &Cell)> {
        self.cells_by_dim.iter().enumerate().flat_map(|(dim, cells)| {
            cells
                .iter()
                .enumerate()
                .map(move |(index, c)| (CellId { dim, index }, c))
        })
    }

    pub fn find(&self, label: &CyclicPartition) -> Option<CellId> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &CyclicPartition) -> bool {
        self.index.contains_key(label)
    }

    /// Codimension-one faces, as indices into `cells(id.dim - 1)`.
    pub fn boundary(&self, id: CellId) -> &[usize] {
        &self.boundary[id.dim][id.index]
    }

    pub fn boundary_lists(&self) -> &[Vec<Vec<usize>>] {
        &self.boundary
    }

    /// Cells one dimension up having `id` in their boundary.
    pub fn coboundary(&self, id: CellId) -> Vec<usize> {
        let Some(upper) = self.boundary.get(id.dim + 1) else {
            return Vec::new();
        };
        upper
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&id.index).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// The closed cell: `id` together with every cell in its boundary,
    /// transitively.
    pub fn closure(&self, id: CellId) -> BTreeSet<CellId> {
        let mut out = BTreeSet::from([id]);
        let mut frontier = vec![id];
        while let Some(c) = frontier.pop() {
            if c.dim == 0 {
                continue;
            }
            for &b in self.boundary(c) {
                let face = CellId {
                    dim: c.dim - 1,
                    index: b,
                };
                if out.insert(face) {
                    frontier.push(face);
                }
            }
        }
        out
    }

    /// Indices of the 0-cells in the closure of `id`.
    pub fn vertices_of(&self, id: CellId) -> Vec<usize> {
        self.closure(id)
            .into_iter()
            .filter(|c| c.dim == 0)
            .map(|c| c.index)
            .collect()
    }

    /// Number of cells in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cells_by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// Row labels of the step-2 table: the facets of the 4-permutohedron with
/// `{5}` appended. Row 8 is commonly printed as
/// [`STEP2_ROW8_AS_PRINTED`], which is not a partition.
pub const STEP2_ROWS: [&str; 14] = [
    "{1}{2,3,4}{5}",
    "{2}{1,3,4}{5}",
    "{3}{1,2,4}{5}",
    "{4}{1,2,3}{5}",
    "{1,2,3}{4}{5}",
    "{1,2,4}{3}{5}",
    "{1,3,4}{2}{5}",
    "{2,3,4}{1}{5}",
    "{1,2}{3,4}{5}",
    "{3,4}{1,2}{5}",
    "{1,3}{2,4}{5}",
    "{2,4}{1,3}{5}",
    "{1,4}{2,3}{5}",
    "{2,3}{1,4}{5}",
];

/// Row 8 of the step-2 table in its commonly printed (misprinted) form.
pub const STEP2_ROW8_AS_PRINTED: &str = "{1,2,3}{1}{5}";

/// Row labels of the step-3 table: pairs of mirrored cells whose part
/// containing 5 has more than one element.
pub const STEP3_ROWS: [(&str, &str); 18] = [
    ("{3}{4}{1,2,5}", "{4}{3}{1,2,5}"),
    ("{2}{4}{1,3,5}", "{4}{2}{1,3,5}"),
    ("{2}{3}{1,4,5}", "{3}{2}{1,4,5}"),
    ("{1}{4}{2,3,5}", "{4}{1}{2,3,5}"),
    ("{1}{3}{2,4,5}", "{3}{1}{2,4,5}"),
    ("{1}{2}{3,4,5}", "{2}{1}{3,4,5}"),
    ("{3,4}{2}{1,5}", "{2}{3,4}{1,5}"),
    ("{2,4}{3}{1,5}", "{3}{2,4}{1,5}"),
    ("{2,3}{4}{1,5}", "{4}{2,3}{1,5}"),
    ("{3,4}{1}{2,5}", "{1}{3,4}{2,5}"),
    ("{1,4}{3}{2,5}", "{3}{1,4}{2,5}"),
    ("{1,3}{4}{2,5}", "{4}{1,3}{2,5}"),
    ("{2,4}{1}{3,5}", "{1}{2,4}{3,5}"),
    ("{1,4}{2}{3,5}", "{2}{1,4}{3,5}"),
    ("{1,2}{4}{3,5}", "{4}{1,2}{3,5}"),
    ("{2,3}{1}{4,5}", "{1}{2,3}{4,5}"),
    ("{1,3}{2}{4,5}", "{2}{1,3}{4,5}"),
    ("{1,2}{3}{4,5}", "{3}{1,2}{4,5}"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipRow {
    /// 1-based row number.
    pub number: usize,
    pub label: CyclicPartition,
    pub mirror: Option<CyclicPartition>,
    /// One entry per linkage: whether the label is a cell of its complex.
    pub values: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipTable {
    pub step2: Vec<MembershipRow>,
    pub step3: Vec<MembershipRow>,
}

/// Admissibility of the fixed step-2 and step-3 row labels for each
/// pentagon.
pub fn facet_membership_table(linkages: &[Linkage]) -> Result<MembershipTable, ComplexError> {
    if let Some(bad) = linkages.iter().find(|l| l.n() != 5) {
        return Err(ComplexError::ArityMismatch {
            expected: 5,
            actual: bad.n(),
        });
    }
    let parse = |s: &str| s.parse::<CyclicPartition>().expect("fixed row label");
    let values = |label: &CyclicPartition| -> Vec<bool> {
        linkages
            .iter()
            .map(|l| l.is_admissible_partition(label.parts()).expect("row label is a partition"))
            .collect()
    };
    let step2 = STEP2_ROWS
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let label = parse(s);
            MembershipRow {
                number: i + 1,
                values: values(&label),
                label,
                mirror: None,
            }
        })
        .collect();
    let step3 = STEP3_ROWS
        .iter()
        .enumerate()
        .map(|(i, (s, m))| {
            let label = parse(s);
            let mirror = parse(m);
            let v = values(&label);
            debug_assert_eq!(v, values(&mirror));
            MembershipRow {
                number: i + 1,
                values: v,
                label,
                mirror: Some(mirror),
            }
        })
        .collect();
    Ok(MembershipTable { step2, step3 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn linkage(spec: &str) -> Linkage {
        spec.parse().unwrap()
    }

    #[test]
    fn f_vectors_and_euler() {
        let cases = [
            ("1,1,1,1,3", vec![24, 36, 14], 2),
            ("1,1,1,1,1", vec![24, 60, 30], -6),
            ("2,1,1,1,2", vec![24, 54, 26], -4),
            ("1,1,1/100,1/100,1", vec![24, 42, 18], 0),
        ];
        for (spec, f, chi) in cases {
            let k = build_complex(&linkage(spec)).unwrap();
            assert_eq!(k.f_vector(), f, "{spec}");
            assert_eq!(euler_characteristic(&k), chi, "{spec}");
        }
    }

    #[test]
    fn size_limits() {
        assert_eq!(
            build_complex(&linkage("1,1,1")),
            Err(ComplexError::UnsupportedSize(3))
        );
        let nine = Linkage::new(vec![Rational::one(); 9]).unwrap();
        assert_eq!(build_complex(&nine), Err(ComplexError::UnsupportedSize(9)));
        let k = build_complex(&Linkage::new(vec![Rational::one(); 7]).unwrap()).unwrap();
        assert_eq!(k.cells(0).len(), 720);
        assert_eq!(k.dimension(), 4);
    }

    #[test]
    fn boundaries_are_one_step_refinements() {
        let k = build_complex(&linkage("2,2,1,1,3")).unwrap();
        for (id, cell) in k.iter().filter(|(id, _)| id.dim > 0) {
            let mut expected: Vec<usize> = cell
                .label
                .one_step_refinements()
                .iter()
                .filter_map(|r| k.find(r))
                .map(|f| f.index)
                .collect();
            expected.sort_unstable();
            assert_eq!(k.boundary(id), expected.as_slice(), "{}", cell.label);
        }
    }

    #[test]
    fn closure_vertices_match_label_vertices() {
        let k = build_complex(&linkage("1,1,1,1,1")).unwrap();
        for (index, cell) in k.cells(2).iter().enumerate() {
            let id = CellId { dim: 2, index };
            let from_closure: Vec<_> = k
                .vertices_of(id)
                .into_iter()
                .map(|v| k.cells(0)[v].label.clone())
                .collect();
            let mut direct: Vec<CyclicPartition> =
                cell.label.vertices().into_iter().map(Into::into).collect();
            direct.sort_by_cached_key(|c| c.to_string());
            assert_eq!(from_closure, direct);
        }
    }

    #[test]
    fn from_parts_rejects_tampering() {
        let k = build_complex(&linkage("1,1,1,1,3")).unwrap();
        let mut cells = k.cells_by_dim().to_vec();
        let bounds = k.boundary_lists().to_vec();
        assert_eq!(
            CWComplex::from_parts(k.linkage().clone(), cells.clone(), bounds.clone()).unwrap(),
            k
        );
        cells[2][0].label = "{4,5}{1,2}{3}".parse().unwrap();
        assert!(CWComplex::from_parts(k.linkage().clone(), cells, bounds).is_err());
    }

    #[test]
    fn table_examples() {
        let eps = Rational::new(1, 100);
        let one = Rational::one();
        let ls = [
            linkage("1,1,1,1,1"),
            Linkage::new(vec![one.clone(), one.clone(), eps.clone(), eps, one]).unwrap(),
            linkage("2,2,1,1,3"),
        ];
        let t = facet_membership_table(&ls).unwrap();
        assert_eq!(t.step2.len(), 14);
        assert_eq!(t.step3.len(), 18);
        assert!(!t.step2[0].values[0]);
        assert!(t.step3[5].values[1]);
        assert!(t.step3[12].values[2]);
        assert!(matches!(
            facet_membership_table(&[linkage("1,1,1,2")]),
            Err(ComplexError::ArityMismatch { expected: 5, actual: 4 })
        ));
    }
}
