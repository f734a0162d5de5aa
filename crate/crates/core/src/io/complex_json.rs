//! JSON form of a complex (`"schema": 1`):
//!
//! ```json
//! { "schema": 1, "lengths": ["1", "1", "1", "1/100", "2"],
//!   "f_vector": [24, 42, 18], "euler_characteristic": 0,
//!   "cells": [ { "dim": 0, "label": "{1}{2}{3}{4}{5}", "boundary": [] }, ... ] }
//! ```
//!
//! Cells are listed by dimension, then label. `boundary` holds indices into
//! `cells` of the codimension-one faces.

use serde::{Deserialize, Serialize};

use crate::complex::{CWComplex, Cell};
use crate::linkage::Linkage;
use crate::partitions::CyclicPartition;
use crate::rational::Rational;

use super::IoError;

#[derive(Serialize, Deserialize)]
struct CellJson {
    dim: usize,
    label: String,
    boundary: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    schema: u32,
    lengths: Vec<String>,
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    cells: Vec<CellJson>,
}

pub fn export_complex_json(complex: &CWComplex) -> String {
    // Global index of the first cell of each dimension.
    let mut offsets = vec![0usize];
    for cells in complex.cells_by_dim() {
        offsets.push(offsets.last().unwrap() + cells.len());
    }
    let mut cells = Vec::new();
    for (dim, list) in complex.cells_by_dim().iter().enumerate() {
        for (i, cell) in list.iter().enumerate() {
            let boundary = complex.boundary_lists()[dim][i]
                .iter()
                .map(|&b| offsets[dim - 1] + b)
                .collect();
            cells.push(CellJson {
                dim,
                label: cell.label.to_string(),
                boundary,
            });
        }
    }
    let doc = ComplexJson {
        schema: 1,
        lengths: complex.linkage().lengths().iter().map(Rational::to_string).collect(),
        f_vector: complex.f_vector(),
        euler_characteristic: complex.euler_characteristic(),
        cells,
    };
    serde_json::to_string_pretty(&doc).expect("complex serializes") + "\n"
}

pub fn import_complex_json(text: &str) -> Result<CWComplex, IoError> {
    let bad = |msg: String| IoError::Json(msg);
    let doc: ComplexJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if doc.schema != 1 {
        return Err(bad(format!("unsupported schema {}", doc.schema)));
    }
    let lengths = doc
        .lengths
        .iter()
        .map(|s| s.parse::<Rational>().map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let linkage = Linkage::new(lengths).map_err(|e| bad(e.to_string()))?;
    let n = linkage.n();

    let top = doc.cells.iter().map(|c| c.dim).max().unwrap_or(0);
    let mut cells_by_dim: Vec<Vec<Cell>> = vec![Vec::new(); top + 1];
    let mut boundary: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    // (dim, index within dim) for each global index.
    let mut position = Vec::with_capacity(doc.cells.len());
    for c in &doc.cells {
        let label: CyclicPartition = c.label.parse().map_err(|e| bad(format!("{e}")))?;
        if label.n() != n {
            return Err(bad(format!("label {} is not a partition of 1..{n}", c.label)));
        }
        position.push((c.dim, cells_by_dim[c.dim].len()));
        cells_by_dim[c.dim].push(Cell { label, dim: c.dim });
    }
    for c in &doc.cells {
        let mut local = Vec::with_capacity(c.boundary.len());
        for &g in &c.boundary {
            let &(d, i) = position
                .get(g)
                .ok_or_else(|| bad(format!("boundary index {g} out of range")))?;
            if d + 1 != c.dim {
                return Err(bad(format!("boundary of {} lists a cell of dimension {d}", c.label)));
            }
            local.push(i);
        }
        boundary[c.dim].push(local);
    }
    let complex = CWComplex::from_parts(linkage, cells_by_dim, boundary).map_err(|e| bad(e.to_string()))?;
    if complex.f_vector() != doc.f_vector || complex.euler_characteristic() != doc.euler_characteristic {
        return Err(bad("f_vector or euler_characteristic disagrees with the cells".into()));
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;

    #[test]
    fn round_trip() {
        for spec in ["1,1,1,1,3", "1,1,1/100,1/100,1", "1,1,1,2", "1,1,1,1,1,2"] {
            let k = build_complex(&spec.parse().unwrap()).unwrap();
            let text = export_complex_json(&k);
            assert_eq!(import_complex_json(&text).unwrap(), k, "{spec}");
        }
    }

    #[test]
    fn layout() {
        let k = build_complex(&"1,1,1,1,3".parse().unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&export_complex_json(&k)).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["f_vector"], serde_json::json!([24, 36, 14]));
        let cells = v["cells"].as_array().unwrap();
        assert_eq!(cells.len(), 74);
        assert_eq!(cells[0]["boundary"], serde_json::json!([]));
        // Edges are bounded by two vertices, which come first.
        let e = &cells[24]["boundary"];
        assert_eq!(e.as_array().unwrap().len(), 2);
        assert!(e.as_array().unwrap().iter().all(|x| x.as_u64().unwrap() < 24));
    }

    #[test]
    fn rejects_tampering() {
        let k = build_complex(&"1,1,1,1,3".parse().unwrap()).unwrap();
        let text = export_complex_json(&k);
        assert!(import_complex_json(&text.replace("\"schema\": 1", "\"schema\": 2")).is_err());
        assert!(import_complex_json(&text.replacen("\"3\"", "\"5\"", 1)).is_err());
        assert!(import_complex_json("{").is_err());
    }
}
