//! Exact enumeration of standard Young tableaux on periodic shapes.
//!
//! A periodic shape is a union of translated copies of a small skew shape.
//! Counting tableaux on `n` copies reduces to powers of an integer transfer
//! matrix indexed by tableau graphs of a boundary region, which in turn
//! yields linear recurrences for the counts.

pub mod error;
pub mod json;
pub mod linext;
pub mod matrix;
pub mod periodic;
pub mod poly;
pub mod poset;
pub mod recurrence;
pub mod shape;
pub mod spec;
pub mod symmetry;
pub mod tableau;
pub mod transfer;

pub use error::{Incompatibility, RecurrenceError, ShapeError, SpecError, SymmetryError, TableauError, TransferError};
pub use matrix::IntMatrix;
pub use periodic::{coefficient_shape, index_shape, n_min, validate_periodic, CompatiblePair, PairGeometry, PeriodicShape};
pub use poly::{char_poly, char_poly_berkowitz, IntPolynomial};
pub use poset::{build_syt_poset, SytPoset};
pub use recurrence::{minimal_recurrence, recurrence_from_charpoly, verify_recurrence, Recurrence};
pub use shape::{Cell, Shape};
pub use spec::PairSpec;
pub use symmetry::{
    compress, equivalence_partition, find_redundant_subsets, is_redundant_subset, verify_row_identity,
    EquivalencePartition, RedundantSubset,
};
pub use tableau::{
    apply_pi, count_syt, enumerate_syt, graphs_isomorphic, sink_tableau, source_tableau, ColumnWord, Edge, Tableau,
    TableauGraph,
};
pub use transfer::{build_transfer_system, count_via_transfer, TransferLimits, TransferSystem};
