//! Inputs shared by the benchmarks.

use periodic_syt::{CompatiblePair, PeriodicShape, Shape};

/// A single row of `k` cells, shifted by `w`.
pub fn row_pair(k: i64, w: u32) -> CompatiblePair {
    let period = PeriodicShape::new(Shape::row_segment(1, 1, k)).expect("row is a valid period");
    CompatiblePair::new(period, w).expect("row pair is compatible")
}

/// `m` stacked copies of a `k`-cell row.
pub fn row_copies(k: i64, w: u32, m: usize) -> Shape {
    row_pair(k, w).shifted(m).expect("shifted copies")
}
