//! Cell structures on moduli spaces of planar polygonal linkages.

pub mod complex;
pub mod geometry;
pub mod io;
pub mod linkage;
pub mod partitions;
pub mod rational;
pub mod representatives;
pub mod subset;
pub mod topology;
mod union_find;

pub use complex::{build_complex, CWComplex, Cell, CellId, ComplexError};
pub use geometry::{perform_surgery, GeometryError, SurfaceMesh};
pub use linkage::{Linkage, LinkageError};
pub use partitions::{CyclicOrder, CyclicPartition, OrderedPartition, PartitionError};
pub use rational::Rational;
pub use subset::Subset;
pub use topology::{analyze, classify_linkage, TopologyReport};
